#pragma once

#include "haal/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace haal {

using RatVector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    static RatMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
    static RatMatrix diagonal(const RatVector& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool is_zero() const;

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Rational>& entries() const { return a_; }

    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;
    RatMatrix transpose() const;
    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& s);

    friend bool operator==(const RatMatrix& x, const RatMatrix& y);
    friend bool operator!=(const RatMatrix& x, const RatMatrix& y) { return !(x == y); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

RatMatrix operator+(RatMatrix x, const RatMatrix& y);
RatMatrix operator-(RatMatrix x, const RatMatrix& y);
RatMatrix operator-(RatMatrix x);
RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
RatMatrix operator*(const Rational& s, RatMatrix x);
RatVector operator*(const RatMatrix& m, const RatVector& v);

RatMatrix mat_pow(const RatMatrix& m, unsigned k);
RatMatrix direct_sum(const std::vector<RatMatrix>& blocks);
RatMatrix direct_sum(const RatMatrix& x, const RatMatrix& y);
RatMatrix repeat_sum(const RatMatrix& x, std::size_t copies);
RatMatrix commutator(const RatMatrix& x, const RatMatrix& y);
Rational trace(const RatMatrix& m);

RatVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RatVector& v);

}  // namespace haal
