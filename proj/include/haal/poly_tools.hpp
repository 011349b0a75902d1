#pragma once

#include "haal/intpoly.hpp"
#include "haal/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace haal {

// Interval endpoint; nullopt stands for -inf on the left and +inf on the right.
using Bound = std::optional<Rational>;

// Number of distinct real roots in (lo, hi]. Repeated roots are removed first.
std::size_t sturm_count(const IntPoly& p, const Bound& lo, const Bound& hi);

enum class DeltaFailure { Degree, NotMonic, ConstantTerm, RootsNotRealDistinctPositive };
const char* delta_failure_name(DeltaFailure f);

struct DeltaVerdict {
    bool member = false;
    std::optional<DeltaFailure> failed_condition;
    bool in_delta_prime = false;
};

DeltaVerdict delta_check(const IntPoly& p);

// Closed-form discriminant of x^3 - m x^2 + n x - 1.
Integer cubic_discriminant(const Integer& m, const Integer& n);

// det of the Sylvester matrix.
Integer resultant(const IntPoly& p, const IntPoly& q);
// Res(p, p') · (-1)^{n(n-1)/2} / lc(p); used as an independent discriminant.
Integer discriminant(const IntPoly& p);

std::optional<IntPoly> delta_product(const IntPoly& p, const IntPoly& q);

// (-1)^n x^n p(1/x), normalized to be monic.
IntPoly reciprocal(const IntPoly& p);
// Monic polynomial whose roots are the k-th powers of the roots of p.
IntPoly power_poly(const IntPoly& p, long k);

// Writes p = Σ (-1)^{n-j} m_j x^j and returns m_0..m_n; throws SignPatternViolation
// if p is not monic with an alternating sign pattern and constant term (-1)^n.
std::vector<Integer> alternating_magnitudes(const IntPoly& p);
bool binom_necessary(const IntPoly& p);
bool kurtz_sufficient(const IntPoly& p);

struct OddPart {
    IntPoly part;               // product of factors of odd multiplicity
    std::vector<Rational> real_roots;  // rational roots of part (each listed once)
    std::size_t real_root_count = 0;   // all distinct real roots of part
    bool unit_root_property = false;   // real odd roots are ±1 / conjugate pair on the unit circle
};
OddPart odd_multiplicity_part(const IntPoly& p);

IntPoly build_delta_prime(std::size_t n);

// Sorted real roots to within precision (absolute), via Sturm-guided exact bisection.
std::vector<double> real_roots(const IntPoly& p, double precision);
// Root-isolation precision: HAAL_PRECISION if set and valid, else 1e-12.
double default_precision();

// Ones on the subdiagonal, −a_0..−a_{n−1} down the last column; p must be monic.
RatMatrix companion_matrix(const IntPoly& p);

// All members of Δ_n whose alternating magnitudes satisfy m_j ≤ bound. The search splits on
// m_1 into `shards` disjoint slices; this call covers slice `shard`.
std::vector<IntPoly> enumerate_delta(std::size_t n, long bound, std::size_t shard = 0, std::size_t shards = 1);

}  // namespace haal
