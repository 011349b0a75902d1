#pragma once

#include "haal/ratpoly.hpp"
#include "haal/rational.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace haal {

// Integer polynomial, coefficients ascending, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> ascending);
    static IntPoly x_power(unsigned k);
    // Requires integer coefficients.
    static IntPoly from_rat(const RatPoly& p);
    // Clears denominators and content, keeping the sign of the leading coefficient.
    static IntPoly primitive_of(const RatPoly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
    Integer lead() const { return c_.empty() ? Integer(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;
    double eval(double x) const;
    IntPoly derivative() const;
    RatPoly to_rat() const;
    // Renders as "x^3 - 6x^2 + 7x - 1"; parse_poly reads it back.
    std::string str() const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return a.c_ != b.c_; }
    friend bool operator<(const IntPoly& a, const IntPoly& b);

private:
    void trim();
    std::vector<Integer> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Integer& s, const IntPoly& a);

// Exact quotient by a divisor that is known to divide; throws InvalidParams otherwise.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// Grammar: sums of terms  [coef] [*] [x [^ k]] , whitespace ignored, or a JSON-style
// ascending array "[c0, c1, ...]". Throws ParseError with the offending offset.
IntPoly parse_poly(std::string_view text);

// h_m = x^2 - m x + 1 and f_{m,n} = x^3 - m x^2 + n x - 1.
IntPoly h_poly(long m);
IntPoly f_poly(long m, long n);

}  // namespace haal
