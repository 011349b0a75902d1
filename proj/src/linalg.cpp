#include "haal/linalg.hpp"

#include "haal/errors.hpp"

#include <utility>

namespace haal {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Rows scaled by the lcm of their denominators; rank and row space are unchanged.
IntMatrix integer_rows(const RatMatrix& m, Integer* scale_product = nullptr)
{
    IntMatrix a(m.rows(), std::vector<Integer>(m.cols()));
    if (scale_product)
        *scale_product = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * l;
            a[i][j] = v.get_num();
        }
        if (scale_product)
            *scale_product *= l;
    }
    return a;
}

struct Bareiss {
    IntMatrix a;
    std::vector<std::size_t> pivots;
    int swaps = 0;
};

// Fraction-free forward elimination; every intermediate entry is a minor of the input.
Bareiss bareiss(IntMatrix a, std::size_t cols)
{
    Bareiss out;
    std::size_t rows = a.size();
    std::size_t k = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && k < rows; ++c) {
        std::size_t p = k;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != k) {
            std::swap(a[p], a[k]);
            ++out.swaps;
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[k][c] * a[i][j] - a[i][c] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[k][c];
        out.pivots.push_back(c);
        ++k;
    }
    out.a = std::move(a);
    return out;
}

}  // namespace

std::size_t rank(const RatMatrix& m)
{
    return bareiss(integer_rows(m), m.cols()).pivots.size();
}

Rational determinant(const RatMatrix& m)
{
    if (!m.square())
        throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    Integer scale;
    auto b = bareiss(integer_rows(m, &scale), m.cols());
    if (b.pivots.size() < m.rows())
        return 0;
    Rational d(b.a.back().back(), scale);
    d.canonicalize();
    return (b.swaps % 2) ? Rational(-d) : d;
}

RowEchelon row_echelon(const RatMatrix& m)
{
    auto b = bareiss(integer_rows(m), m.cols());
    std::size_t r = b.pivots.size();
    RatMatrix e(r, m.cols());
    for (std::size_t i = 0; i < r; ++i) {
        const Integer& piv = b.a[i][b.pivots[i]];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v(b.a[i][j], piv);
            v.canonicalize();
            e(i, j) = v;
        }
    }
    for (std::size_t i = r; i-- > 0;) {
        std::size_t pc = b.pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            Rational f = e(k, pc);
            if (sgn(f) == 0)
                continue;
            for (std::size_t j = pc; j < m.cols(); ++j)
                e(k, j) -= f * e(i, j);
        }
    }
    return {e, b.pivots};
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    if (!m.square())
        throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, RatMatrix::identity(n));
    auto e = row_echelon(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    return e.rref.block(0, n, n, n);
}

std::vector<RatVector> nullspace(const RatMatrix& m)
{
    auto e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.rref(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b)
{
    if (m.rows() != b.size())
        throw Error(Errc::DimensionMismatch, "right-hand side length");
    RatMatrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < b.size(); ++i)
        aug(i, m.cols()) = b[i];
    auto e = row_echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        x[e.pivots[i]] = e.rref(i, m.cols());
    return x;
}

std::vector<std::size_t> kernel_dim_sequence(const RatMatrix& m)
{
    if (!m.square())
        throw Error(Errc::DimensionMismatch, "kernel sequence of a non-square matrix");
    std::vector<std::size_t> seq;
    std::size_t n = m.rows();
    if (n == 0)
        return {0};
    RatMatrix p = m;
    for (;;) {
        std::size_t k = n - rank(p);
        if (!seq.empty() && seq.back() == k)
            break;
        seq.push_back(k);
        if (k == n)
            break;
        p = p * m;
    }
    return seq;
}

RatPoly char_poly(const RatMatrix& m)
{
    if (!m.square())
        throw Error(Errc::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    std::size_t n = m.rows();
    RatMatrix h = m;
    // similarity reduction to upper Hessenberg form
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t r = c + 1;
        std::size_t p = r;
        while (p < n && sgn(h(p, c)) == 0)
            ++p;
        if (p == n)
            continue;
        if (p != r) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(h(p, j), h(r, j));
            for (std::size_t i = 0; i < n; ++i)
                std::swap(h(i, p), h(i, r));
        }
        Rational t = h(r, c);
        for (std::size_t i = r + 1; i < n; ++i) {
            Rational u = h(i, c) / t;
            if (sgn(u) == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                h(i, j) -= u * h(r, j);
            for (std::size_t k = 0; k < n; ++k)
                h(k, r) += u * h(k, i);
        }
    }
    std::vector<RatPoly> p(n + 1);
    p[0] = RatPoly(Rational(1));
    RatPoly x = RatPoly::x_power(1);
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = (x - RatPoly(h(k - 1, k - 1))) * p[k - 1];
        Rational t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t *= h(k - i, k - i - 1);
            if (sgn(t) == 0)
                break;
            p[k] = p[k] - RatPoly(t * h(k - i - 1, k - 1)) * p[k - i - 1];
        }
    }
    return p[n];
}

bool is_nilpotent(const RatMatrix& m)
{
    return char_poly(m) == RatPoly::x_power(static_cast<unsigned>(m.rows()));
}

std::size_t nilpotency_index(const RatMatrix& m)
{
    if (!is_nilpotent(m))
        throw Error(Errc::NotNilpotent, "matrix is not nilpotent");
    if (m.is_zero())
        return 1;
    return kernel_dim_sequence(m).size();
}

std::vector<RatPoly> invariant_factors(const RatMatrix& m)
{
    if (!m.square())
        throw Error(Errc::DimensionMismatch, "invariant factors of a non-square matrix");
    std::size_t n = m.rows();
    // Smith form of xI - M over Q[x]
    std::vector<std::vector<RatPoly>> a(n, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = RatPoly(Rational(-m(i, j))) + (i == j ? RatPoly::x_power(1) : RatPoly());

    auto row_axpy = [&](std::size_t dst, std::size_t src, const RatPoly& f, std::size_t from) {
        for (std::size_t j = from; j < n; ++j)
            if (!a[src][j].is_zero())
                a[dst][j] = a[dst][j] - f * a[src][j];
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const RatPoly& f, std::size_t from) {
        for (std::size_t i = from; i < n; ++i)
            if (!a[i][src].is_zero())
                a[i][dst] = a[i][dst] - f * a[i][src];
    };

    std::vector<RatPoly> diag;
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            int best = -1;
            std::size_t bi = 0, bj = 0;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
                        best = a[i][j].degree();
                        bi = i;
                        bj = j;
                    }
            if (best < 0)
                break;
            std::swap(a[k], a[bi]);
            for (std::size_t i = 0; i < n; ++i)
                std::swap(a[i][k], a[i][bj]);
            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a[i][k].is_zero())
                    continue;
                auto qr = divmod(a[i][k], a[k][k]);
                row_axpy(i, k, qr.first, k);
                if (!a[i][k].is_zero())
                    clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a[k][j].is_zero())
                    continue;
                auto qr = divmod(a[k][j], a[k][k]);
                col_axpy(j, k, qr.first, k);
                if (!a[k][j].is_zero())
                    clean = false;
            }
            if (!clean)
                continue;
            bool divides = true;
            for (std::size_t i = k + 1; i < n && divides; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!a[i][j].is_zero() && !divmod(a[i][j], a[k][k]).second.is_zero()) {
                        for (std::size_t jj = k; jj < n; ++jj)
                            a[k][jj] = a[k][jj] + a[i][jj];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        diag.push_back(a[k][k].monic());
    }
    std::vector<RatPoly> out;
    for (auto& d : diag)
        if (d.degree() >= 1)
            out.push_back(d);
    return out;
}

RatPoly minimal_polynomial(const RatMatrix& m)
{
    auto f = invariant_factors(m);
    return f.empty() ? RatPoly(Rational(1)) : f.back();
}

bool conjugate_test(const RatMatrix& m1, const RatMatrix& m2)
{
    if (!m1.square() || !m2.square() || m1.rows() != m2.rows())
        throw Error(Errc::DimensionMismatch, "conjugacy needs square matrices of equal size");
    RatPoly p1 = char_poly(m1), p2 = char_poly(m2);
    if (p1 != p2)
        return false;
    if (p1 == RatPoly::x_power(static_cast<unsigned>(m1.rows())))
        return kernel_dim_sequence(m1) == kernel_dim_sequence(m2);
    if (gcd(p1, p1.derivative()).degree() == 0)
        return true;
    return invariant_factors(m1) == invariant_factors(m2);
}

}  // namespace haal
