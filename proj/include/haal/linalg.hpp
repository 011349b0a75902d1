#pragma once

#include "haal/matrix.hpp"
#include "haal/ratpoly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace haal {

std::size_t rank(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

// [dim ker M, dim ker M^2, ...] up to and including the first stable value.
std::vector<std::size_t> kernel_dim_sequence(const RatMatrix& m);

// det(xI - M), monic.
RatPoly char_poly(const RatMatrix& m);

bool is_nilpotent(const RatMatrix& m);
// Smallest k with M^k = 0; M must be nilpotent.
std::size_t nilpotency_index(const RatMatrix& m);

// Non-unit invariant factors of M (monic, each dividing the next).
std::vector<RatPoly> invariant_factors(const RatMatrix& m);
RatPoly minimal_polynomial(const RatMatrix& m);

bool conjugate_test(const RatMatrix& m1, const RatMatrix& m2);

// One solution of Mx = b, or nothing if inconsistent.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b);

// Basis of {x : Mx = 0}.
std::vector<RatVector> nullspace(const RatMatrix& m);

// Reduced row echelon form and its pivot columns.
struct RowEchelon {
    RatMatrix rref;
    std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const RatMatrix& m);

}  // namespace haal
