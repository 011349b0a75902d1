#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace haal {

// mpq_class keeps num/den reduced with a positive denominator after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", and decimal literals such as "-0.75".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
double to_double(const Rational& q);

}  // namespace haal
