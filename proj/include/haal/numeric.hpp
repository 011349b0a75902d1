#pragma once

#include "haal/matrix.hpp"
#include "haal/ratpoly.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace haal {

using MatD = Eigen::MatrixXd;
using VecD = Eigen::VectorXd;

MatD to_eigen(const RatMatrix& m);
VecD to_eigen(const RatVector& v);

// Scaling and squaring with a degree-13 Padé approximant.
MatD expm(const MatD& a);

// Number of singular values above rel_tol · max(1, σ_max).
std::size_t numeric_rank(const MatD& m, double rel_tol);

// Coefficients of det(xI − M), ascending, monic; Hessenberg reduction plus the
// column recurrence, all in double precision.
std::vector<double> numeric_char_poly(const MatD& m);

// Roots of a monic polynomial (ascending coefficients) as companion-matrix eigenvalues.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& ascending);

// Evaluate a rational polynomial at a numeric matrix (Horner).
MatD eval_poly(const RatPoly& p, const MatD& m);

}  // namespace haal
