#pragma once

#include "haal/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace haal {

// Univariate polynomial over Q, coefficients ascending, no trailing zeros.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(const Rational& c);  // NOLINT: constants convert implicitly
    static RatPoly x_power(unsigned k);
    static RatPoly from_ints(std::initializer_list<long> ascending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;
    RatMatrix eval(const RatMatrix& m) const;
    RatPoly derivative() const;
    RatPoly monic() const;
    std::string str(char var = 'x') const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return a.c_ != b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly poly_pow(const RatPoly& a, unsigned k);

// Quotient and remainder; b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// Monic gcd (zero only if both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);

// Yun's algorithm: returns s_1, s_2, ... with a = lc · Π s_i^i, s_i squarefree, pairwise coprime.
std::vector<RatPoly> squarefree_decomposition(const RatPoly& a);

// Rational roots of a (each listed once).
std::vector<Rational> rational_roots(const RatPoly& a);

}  // namespace haal
