#include "haal/liegroup.hpp"

#include "haal/dim12.hpp"
#include "haal/errors.hpp"
#include "haal/linalg.hpp"
#include "haal/poly_tools.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace haal {

namespace {

double rel_gap(const VecD& x, const VecD& y)
{
    double scale = std::max({1.0, x.lpNorm<Eigen::Infinity>(), y.lpNorm<Eigen::Infinity>()});
    return (x - y).lpNorm<Eigen::Infinity>() / scale;
}

// Matrix of X ↦ L·X + X·R acting on row-major vec(X).
RatMatrix sylvester_operator(const RatMatrix& l, const RatMatrix& r)
{
    const std::size_t d = l.rows();
    RatMatrix m(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                m(i * d + j, k * d + j) += l(i, k);
                m(i * d + j, i * d + k) += r(k, j);
            }
    return m;
}

// A random integer combination of the basis that is invertible as a d×d matrix.
std::optional<RatMatrix> invertible_combination(const std::vector<RatVector>& basis, std::size_t d,
                                                std::uint64_t seed)
{
    if (basis.empty())
        return std::nullopt;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatMatrix x(d, d);
        for (const auto& b : basis) {
            Rational w = attempt == 0 ? Rational(1) : Rational(coef(rng));
            for (std::size_t k = 0; k < d * d; ++k)
                x(k / d, k % d) += w * b[k];
        }
        if (sgn(determinant(x)) != 0)
            return x;
    }
    return std::nullopt;
}

// Integer k-th root of |z| when it exists.
std::optional<Integer> exact_root(const Integer& z, unsigned k)
{
    Integer a = abs(z), r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0)
        return std::nullopt;
    return r;
}

std::vector<Rational> rational_kth_roots(const Rational& r, unsigned k)
{
    if (sgn(r) == 0)
        return {};
    if (sgn(r) < 0 && k % 2 == 0)
        return {};
    auto num = exact_root(r.get_num(), k);
    auto den = exact_root(r.get_den(), k);
    if (!num || !den)
        return {};
    Rational c(*num, *den);
    c.canonicalize();
    if (k % 2 == 1)
        return {sgn(r) < 0 ? Rational(-c) : c};
    return {c, -c};
}

RatVector ideal_part(const RatVector& x) { return RatVector(x.begin() + 1, x.end()); }

}  // namespace

double phi_scalar(double x)
{
    if (x == 0.0)
        return 1.0;
    return std::expm1(x) / x;
}

RatMatrix phi_matrix_exact(const Rational& t, const RatMatrix& a)
{
    if (!is_nilpotent(a))
        throw Error(Errc::NotNilpotent, "exact Φ needs a nilpotent matrix");
    RatMatrix x = t * a;
    RatMatrix term = RatMatrix::identity(a.rows());
    RatMatrix sum = term;
    for (unsigned n = 1; !term.is_zero(); ++n) {
        term = Rational(1, n + 1) * (term * x);  // X^n/(n+1)!
        sum += term;
    }
    return sum;
}

MatD phi_matrix(double t, const MatD& a)
{
    const Eigen::Index d = a.rows();
    MatD big = MatD::Zero(2 * d, 2 * d);
    big.topLeftCorner(d, d) = t * a;
    big.topRightCorner(d, d) = MatD::Identity(d, d);
    return expm(big).topRightCorner(d, d);
}

RatMatrix exp_nilpotent(const RatMatrix& x)
{
    if (!is_nilpotent(x))
        throw Error(Errc::NotNilpotent, "exact exponential needs a nilpotent matrix");
    RatMatrix term = RatMatrix::identity(x.rows());
    RatMatrix sum = term;
    for (unsigned n = 1; !term.is_zero(); ++n) {
        term = Rational(1, n) * (term * x);
        sum += term;
    }
    return sum;
}

bool phi_invertible_all_t(const RatMatrix& a)
{
    RatPoly p = char_poly(a);
    const int d = p.degree();
    std::vector<Rational> mirrored(p.coeffs());
    for (int k = 0; k <= d; ++k)
        if ((d + k) % 2 != 0)
            mirrored[k] = -mirrored[k];
    RatPoly g = gcd(p, RatPoly(mirrored));
    // drop the root 0; what is left has roots closed under negation
    std::vector<Rational> c(g.coeffs());
    while (c.size() > 1 && sgn(c.front()) == 0)
        c.erase(c.begin());
    if (c.size() <= 1)
        return true;
    std::vector<Rational> even;
    for (std::size_t k = 0; k < c.size(); k += 2)
        even.push_back(c[k]);
    IntPoly h = IntPoly::primitive_of(RatPoly(even));
    return sturm_count(h, std::nullopt, Rational(0)) == 0;
}

GroupElement group_multiply(const GroupElement& g, const GroupElement& h, const MatD& a)
{
    return {g.t + h.t, g.v + expm(g.t * a) * h.v};
}

GroupElement exp_group(double t, const VecD& v, const MatD& a) { return {t, phi_matrix(t, a) * v}; }

GroupElement log_group(double t, const VecD& w, const MatD& a)
{
    MatD phi = phi_matrix(t, a);
    // LU's own threshold is relative to the largest pivot and misses a uniformly tiny Φ
    if (numeric_rank(phi, 1e-10) < static_cast<std::size_t>(phi.rows()))
        throw Error(Errc::InvalidParams, "Φ(tA) is singular at this t");
    return {t, phi.fullPivLu().solve(w)};
}

std::pair<RatVector, RatVector> monop_sides_exact(const RatMatrix& a, const Rational& t0, const RatVector& v0,
                                                  const Rational& t, const Rational& s)
{
    RatVector lhs = (t + s) * phi_matrix_exact((t + s) * t0, a) * v0;
    RatVector first = phi_matrix_exact(t * t0, a) * v0;
    RatVector second = exp_nilpotent((t * t0) * a) * (phi_matrix_exact(s * t0, a) * v0);
    RatVector rhs(v0.size());
    for (std::size_t i = 0; i < v0.size(); ++i)
        rhs[i] = t * first[i] + s * second[i];
    return {lhs, rhs};
}

double monop_defect(const MatD& a, double t0, const VecD& v0, double t, double s)
{
    VecD lhs = (t + s) * (phi_matrix((t + s) * t0, a) * v0);
    VecD rhs = t * (phi_matrix(t * t0, a) * v0) + s * (expm(t * t0 * a) * (phi_matrix(s * t0, a) * v0));
    return rel_gap(lhs, rhs);
}

std::optional<AdConjugacy> ad_conjugate_iso(const RatMatrix& a1, const RatMatrix& a2, std::uint64_t seed)
{
    if (!a1.square() || a1.rows() != a2.rows() || !a2.square())
        throw Error(Errc::DimensionMismatch, "ad-conjugacy needs square matrices of equal size");
    const std::size_t d = a1.rows();
    RatPoly p1 = char_poly(a1), p2 = char_poly(a2);
    std::vector<Rational> candidates;
    bool nil1 = p1 == RatPoly::x_power(d), nil2 = p2 == RatPoly::x_power(d);
    if (nil1 != nil2)
        return std::nullopt;
    if (nil1) {
        candidates.push_back(1);
    } else {
        // coefficient of x^{d-k} scales by c^k
        std::size_t k = 1;
        while (sgn(p2.coeff(d - k)) == 0)
            ++k;
        candidates = rational_kth_roots(p1.coeff(d - k) / p2.coeff(d - k), static_cast<unsigned>(k));
    }
    for (const Rational& c : candidates) {
        RatMatrix scaled = c * a2;
        if (!conjugate_test(a1, scaled))
            continue;
        // A1 P − P (c A2) = 0
        auto basis = nullspace(sylvester_operator(a1, -scaled));
        if (auto p = invertible_combination(basis, d, seed))
            return AdConjugacy{c, *p};
    }
    return std::nullopt;
}

bool detect_heisenberg(const RatMatrix& a) { return rank(a) == 1 && (a * a).is_zero(); }

GroupElement GroupIso::apply(const GroupElement& g, const MatD& a2) const
{
    double m = mu.get_d();
    VecD v = to_eigen(L) * g.v + g.t * (phi_matrix(m * g.t, a2) * to_eigen(v0));
    return {m * g.t, v};
}

GroupIso lie_iso_build(const RatMatrix& a1, const RatMatrix& a2, const Rational& c, const RatMatrix& p, int sign,
                       const RatVector& v0, std::uint64_t seed)
{
    const std::size_t d = a1.rows();
    if (!a1.square() || a2.rows() != d || !a2.square() || p.rows() != d || !p.square() || v0.size() != d)
        throw Error(Errc::DimensionMismatch, "isomorphism data have inconsistent sizes");
    if (sgn(c) == 0 || (sign != 1 && sign != -1))
        throw Error(Errc::InvalidParams, "need c ≠ 0 and sign ±1");
    auto pinv = inverse(p);
    if (!pinv || a1 != c * p * a2 * *pinv)
        throw Error(Errc::NotConjugate, "A1 ≠ c·P·A2·P⁻¹");
    if (detect_heisenberg(a1) || detect_heisenberg(a2))
        throw Error(Errc::HeisenbergExcluded, "Heisenberg-type algebras have more isomorphisms than this formula");

    RatMatrix lp = RatMatrix::identity(d);
    if (sign == -1) {
        auto basis = nullspace(sylvester_operator(a2, a2));  // X A2 + A2 X = 0
        auto m = invertible_combination(basis, d, seed);
        if (!m)
            throw Error(Errc::NoAnticommutingL, "no invertible L·P anticommutes with A2");
        lp = *m;
    }

    GroupIso iso;
    iso.c = c;
    iso.sign = sign;
    iso.mu = sign * c;
    iso.L = lp * *pinv;
    iso.P = p;
    iso.v0 = v0;

    MatD e1 = to_eigen(a1), e2 = to_eigen(a2);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto rand_vec = [&] {
        VecD v(static_cast<Eigen::Index>(d));
        for (auto& x : v)
            x = u(rng);
        return v;
    };
    const Eigen::Index dd = static_cast<Eigen::Index>(d);
    for (int i = 0; i < 100; ++i) {
        GroupElement g{u(rng), rand_vec()}, h{u(rng), rand_vec()};
        GroupElement lhs = iso.apply(group_multiply(g, h, e1), e2);
        GroupElement rhs = group_multiply(iso.apply(g, e2), iso.apply(h, e2), e2);
        VecD a(dd + 1), b(dd + 1);
        a << lhs.t, lhs.v;
        b << rhs.t, rhs.v;
        iso.homomorphism_defect = std::max(iso.homomorphism_defect, rel_gap(a, b));

        double t = u(rng);
        VecD v = rand_vec();
        GroupElement via_f = exp_group(iso.mu.get_d() * t, to_eigen(iso.L) * v + t * to_eigen(v0), e2);
        GroupElement via_F = iso.apply(exp_group(t, v, e1), e2);
        a << via_f.t, via_f.v;
        b << via_F.t, via_F.v;
        iso.exp_defect = std::max(iso.exp_defect, rel_gap(a, b));
    }
    iso.verified = iso.homomorphism_defect <= 1e-9 && iso.exp_defect <= 1e-9;
    return iso;
}

BockReport bock_verify(const MatD& a, const LatticeWitness& w, double tol)
{
    BockReport r;
    const std::size_t d = w.E.rows();
    if (!w.E.square() || static_cast<std::size_t>(a.rows()) != d || a.rows() != a.cols()) {
        r.diagnostic = "size mismatch between A and E";
        return r;
    }
    if (determinant(w.E) != 1) {
        r.diagnostic = "E is not in SL(d, Z)";
        return r;
    }
    for (const auto& x : w.E.entries())
        if (!is_integer(x)) {
            r.diagnostic = "E has a non-integer entry";
            return r;
        }

    MatD m = expm(w.t0 * a);
    RatPoly ce = char_poly(w.E);
    std::vector<double> cm = numeric_char_poly(m);
    for (std::size_t k = 0; k <= d; ++k) {
        double e = ce.coeff(k).get_d();
        r.coeff_error = std::max(r.coeff_error, std::abs(cm[k] - e) / std::max(1.0, std::abs(e)));
    }
    r.charpoly_ok = r.coeff_error <= tol;
    if (!r.charpoly_ok) {
        std::ostringstream os;
        os << "characteristic polynomials differ (relative coefficient error " << r.coeff_error << ")";
        r.diagnostic = os.str();
        return r;
    }

    // Group the roots of E by multiplicity in the characteristic and in the minimal polynomial;
    // within a group the rank sequences of f(·)^j must agree.
    auto sf_char = squarefree_decomposition(ce);
    auto sf_min = squarefree_decomposition(minimal_polynomial(w.E));
    r.jordan_ok = true;
    constexpr double rank_tol = 1e-7;
    for (std::size_t i = 0; i < sf_char.size() && r.jordan_ok; ++i) {
        for (const auto& t : sf_min) {
            RatPoly f = gcd(sf_char[i], t);
            if (f.degree() < 1)
                continue;
            RatMatrix fe = f.eval(w.E), pe = fe;
            MatD fm = eval_poly(f, m), pm = fm;
            for (std::size_t j = 1; j <= i + 1; ++j) {
                std::size_t exact = rank(pe), approx = numeric_rank(pm, rank_tol);
                if (exact != approx) {
                    std::ostringstream os;
                    os << "Jordan structure differs at factor " << f.str() << ", power " << j << ": rank " << approx
                       << " vs " << exact;
                    r.diagnostic = os.str();
                    r.jordan_ok = false;
                    break;
                }
                pe = pe * fe;
                pm = pm * fm;
            }
        }
    }
    if (!r.jordan_ok)
        return r;

    if (w.P) {
        const MatD& p = *w.P;
        Eigen::FullPivLU<MatD> lu(p);
        bool ok = p.rows() == a.rows() && p.cols() == a.cols() && lu.isInvertible();
        if (ok)
            ok = (lu.solve(m * p) - to_eigen(w.E)).cwiseAbs().maxCoeff() < tol;
        r.conjugator_ok = ok;
        if (!ok) {
            r.diagnostic = "P⁻¹ e^{t0 A} P does not match E";
            return r;
        }
    }
    r.accepted = true;
    return r;
}

BockReport bock_verify(const RatMatrix& a, const LatticeWitness& w, double tol)
{
    return bock_verify(to_eigen(a), w, tol);
}

bool lattice_necessary(const Rational& mu, const RatMatrix& b) { return sgn(mu) == 0 && sgn(trace(b)) == 0; }

bool verify_structure(const RatMatrix& a, StructureKind kind)
{
    const std::size_t b = beta(kind);
    const std::size_t dim = a.rows() + 1;
    if (!a.square() || dim % b != 0)
        throw Error(Errc::DimensionMismatch, "algebra dimension is not a multiple of the structure rank");

    std::vector<RatMatrix> js;
    if (kind == StructureKind::Hypercomplex) {
        StandardJTriple tri(dim / 4);
        js = {tri[1], tri[2], tri[3]};
    } else {
        js = {repeat_sum(RatMatrix::from_ints({{0, -1}, {1, 0}}), dim / 2)};
    }

    const RatMatrix id = RatMatrix::identity(dim);
    for (const auto& j : js)
        if (j * j != -id)
            return false;
    if (js.size() == 3 && (js[0] * js[1] != js[2] || js[1] * js[0] != -js[2]))
        return false;

    auto bracket = [&](const RatVector& x, const RatVector& y) {
        RatVector out(dim);
        if (sgn(x[0]) != 0) {
            RatVector ay = a * ideal_part(y);
            for (std::size_t i = 0; i < ay.size(); ++i)
                out[i + 1] += x[0] * ay[i];
        }
        if (sgn(y[0]) != 0) {
            RatVector ax = a * ideal_part(x);
            for (std::size_t i = 0; i < ax.size(); ++i)
                out[i + 1] -= y[0] * ax[i];
        }
        return out;
    };

    for (const auto& j : js) {
        std::vector<RatVector> e(dim), je(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            e[i] = unit_vector(dim, i);
            je[i] = j.col(i);
        }
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = i + 1; k < dim; ++k) {
                // the ideal is abelian, so only pairs touching e0 or J·e0 can contribute
                if (sgn(e[i][0]) == 0 && sgn(e[k][0]) == 0 && sgn(je[i][0]) == 0 && sgn(je[k][0]) == 0)
                    continue;
                RatVector inner = bracket(je[i], e[k]);
                RatVector other = bracket(e[i], je[k]);
                for (std::size_t q = 0; q < dim; ++q)
                    inner[q] += other[q];
                RatVector n = bracket(e[i], e[k]);
                RatVector jin = j * inner;
                RatVector last = bracket(je[i], je[k]);
                for (std::size_t q = 0; q < dim; ++q)
                    if (n[q] + jin[q] - last[q] != 0)
                        return false;
            }
    }
    return true;
}

bool verify_hypercomplex_structure(const HcxAAData& data)
{
    return verify_structure(assemble_A_unchecked(data), StructureKind::Hypercomplex);
}

RatMatrix finite_order_block(long k)
{
    switch (k) {
    case 1: return RatMatrix::identity(2);
    case 2: return -RatMatrix::identity(2);
    case 3: return RatMatrix::from_ints({{0, -1}, {1, -1}});
    case 4: return RatMatrix::from_ints({{0, -1}, {1, 0}});
    case 6: return RatMatrix::from_ints({{0, -1}, {1, 1}});
    default: throw Error(Errc::InvalidParams, "finite-order integer blocks exist for k in {1,2,3,4,6}");
    }
}

namespace {

RatMatrix label_matrix(const Dim12Input& in) { return representative_matrix(classify12(in)); }

}  // namespace

WitnessCase witness_s9(long m)
{
    if (m < 3)
        throw Error(Errc::InvalidParams, "need m ≥ 3");
    WitnessCase w;
    w.family = "s9^{-1}";
    w.instance = "m=" + std::to_string(m);
    w.A = to_eigen(label_matrix({0, BCase::B1, 1, 0, -1, 0, V0Status::Zero}));
    double md = static_cast<double>(m);
    w.witness.t0 = std::log((md + std::sqrt(md * md - 4)) / 2);
    w.witness.E = direct_sum(RatMatrix::identity(3), repeat_sum(RatMatrix::from_ints({{0, -1}, {1, m}}), 4));
    return w;
}

WitnessCase witness_s6(long k)
{
    WitnessCase w;
    w.family = "s6^{0}";
    w.instance = "k=" + std::to_string(k);
    RatMatrix a = label_matrix({0, BCase::B1, 0, 0, 0, 1, V0Status::NotInImage});
    w.A = to_eigen(a);
    w.witness.t0 = 2 * std::numbers::pi / static_cast<double>(k);
    // unipotent part: I + (q-part and zero block of A); rotation part: two finite-order blocks
    RatMatrix unip = RatMatrix::identity(7) + a.block(0, 0, 7, 7);
    RatMatrix rot = finite_order_block(k);
    w.witness.E = direct_sum({unip, rot, rot});
    return w;
}

WitnessCase witness_s13(long k)
{
    WitnessCase w;
    w.family = "s13^{0}";
    w.instance = "k=" + std::to_string(k);
    w.A = to_eigen(label_matrix({0, BCase::B2, 0, 1, 0, 0, V0Status::Zero}));
    w.witness.t0 = 2 * std::numbers::pi / static_cast<double>(k);
    RatMatrix tail;
    switch (k) {
    case 1: tail = repeat_sum(RatMatrix::from_ints({{1, 0}, {1, 1}}), 4); break;
    case 2: tail = repeat_sum(RatMatrix::from_ints({{-1, 0}, {1, -1}}), 4); break;
    case 3: tail = repeat_sum(RatMatrix::from_ints({{0, 0, 0, -1}, {1, 0, 0, -2}, {0, 1, 0, -3}, {0, 0, 1, -2}}), 2); break;
    case 4: tail = repeat_sum(RatMatrix::from_ints({{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, -2}, {0, 0, 1, 0}}), 2); break;
    case 6: tail = repeat_sum(RatMatrix::from_ints({{0, 0, 0, -1}, {1, 0, 0, 2}, {0, 1, 0, -3}, {0, 0, 1, 2}}), 2); break;
    default: throw Error(Errc::InvalidParams, "k must be one of 1, 2, 3, 4, 6");
    }
    w.witness.E = direct_sum(RatMatrix::identity(3), tail);
    return w;
}

WitnessCase witness_s2(long k)
{
    if (k < 3)
        throw Error(Errc::InvalidParams, "need k ≥ 3 so that no root has modulus one");
    IntPoly p{1, -1, k, -1, 1};
    auto roots = poly_roots({1.0, -1.0, static_cast<double>(k), -1.0, 1.0});
    std::complex<double> alpha, beta;
    for (auto z : roots) {
        if (z.imag() <= 0)
            continue;
        (std::abs(z) > 1 ? alpha : beta) = z;
    }
    double rho = std::abs(alpha), theta = std::arg(alpha), phi = std::arg(beta);
    double lr = std::log(rho);
    MatD x1 = MatD::Zero(4, 4), x2 = MatD::Zero(4, 4);
    x1 << lr, -theta, 0, 0, theta, lr, 0, 0, 0, 0, -lr, -phi, 0, 0, phi, -lr;
    x2 << lr, theta, 0, 0, -theta, lr, 0, 0, 0, 0, -lr, phi, 0, 0, -phi, -lr;

    WitnessCase w;
    w.family = "s2";
    w.instance = "p=" + p.str();
    w.A = MatD::Zero(11, 11);
    w.A.block(3, 3, 4, 4) = x1;
    w.A.block(7, 7, 4, 4) = x2;
    w.witness.t0 = 1.0;
    RatMatrix c = companion_matrix(p);
    w.witness.E = direct_sum({RatMatrix::identity(3), c, c});
    return w;
}

std::vector<WitnessCase> standard_witnesses()
{
    std::vector<WitnessCase> out;
    for (long m = 3; m <= 10; ++m)
        out.push_back(witness_s9(m));
    for (long k : {1, 2, 3, 4, 6})
        out.push_back(witness_s6(k));
    for (long k : {1, 2, 3, 4, 6})
        out.push_back(witness_s13(k));
    for (long k : {3, 4, 5})
        out.push_back(witness_s2(k));
    return out;
}

}  // namespace haal
