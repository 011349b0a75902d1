#include "haal/matrix.hpp"

#include "haal/errors.hpp"

#include <algorithm>

namespace haal {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows)
{
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c)
            throw Error(Errc::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<RatVector> r;
    for (auto& row : rows) {
        RatVector v;
        for (long x : row)
            v.emplace_back(x);
        r.push_back(std::move(v));
    }
    return from_rows(r);
}

RatMatrix RatMatrix::diagonal(const RatVector& d)
{
    RatMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

bool RatMatrix::is_zero() const
{
    for (auto& x : a_)
        if (sgn(x) != 0)
            return false;
    return true;
}

RatVector RatMatrix::row(std::size_t i) const
{
    return RatVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

RatVector RatMatrix::col(std::size_t j) const
{
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error(Errc::DimensionMismatch, "block out of range");
    RatMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b)
{
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw Error(Errc::DimensionMismatch, "block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(Errc::DimensionMismatch, "matrix sum shape");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] += o.a_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(Errc::DimensionMismatch, "matrix difference shape");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] -= o.a_[k];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s)
{
    for (auto& x : a_)
        x *= s;
    return *this;
}

bool operator==(const RatMatrix& x, const RatMatrix& y)
{
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

RatMatrix operator+(RatMatrix x, const RatMatrix& y) { return x += y; }
RatMatrix operator-(RatMatrix x, const RatMatrix& y) { return x -= y; }

RatMatrix operator-(RatMatrix x)
{
    x *= Rational(-1);
    return x;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y)
{
    if (x.cols() != y.rows())
        throw Error(Errc::DimensionMismatch, "matrix product shape");
    RatMatrix r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const Rational& a = x(i, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                if (sgn(y(k, j)) != 0)
                    r(i, j) += a * y(k, j);
        }
    return r;
}

RatMatrix operator*(const Rational& s, RatMatrix x)
{
    x *= s;
    return x;
}

RatVector operator*(const RatMatrix& m, const RatVector& v)
{
    if (m.cols() != v.size())
        throw Error(Errc::DimensionMismatch, "matrix-vector shape");
    RatVector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0)
                r[i] += m(i, j) * v[j];
    return r;
}

RatMatrix mat_pow(const RatMatrix& m, unsigned k)
{
    RatMatrix r = RatMatrix::identity(m.rows());
    RatMatrix b = m;
    while (k) {
        if (k & 1u)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

RatMatrix direct_sum(const std::vector<RatMatrix>& blocks)
{
    std::size_t r = 0, c = 0;
    for (auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    RatMatrix m(r, c);
    r = c = 0;
    for (auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

RatMatrix direct_sum(const RatMatrix& x, const RatMatrix& y) { return direct_sum(std::vector<RatMatrix>{x, y}); }

RatMatrix repeat_sum(const RatMatrix& x, std::size_t copies)
{
    return direct_sum(std::vector<RatMatrix>(copies, x));
}

RatMatrix commutator(const RatMatrix& x, const RatMatrix& y) { return x * y - y * x; }

Rational trace(const RatMatrix& m)
{
    Rational t;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        t += m(i, i);
    return t;
}

RatVector unit_vector(std::size_t n, std::size_t i)
{
    RatVector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const RatVector& v)
{
    for (auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

}  // namespace haal
