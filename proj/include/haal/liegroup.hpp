#pragma once

#include "haal/matrix.hpp"
#include "haal/nilpotent.hpp"
#include "haal/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace haal {

// Φ(x) = (e^x − 1)/x, Φ(0) = 1.
double phi_scalar(double x);
// Φ(tA) for nilpotent A as the exact finite sum; throws NotNilpotent otherwise.
RatMatrix phi_matrix_exact(const Rational& t, const RatMatrix& a);
// Φ(tA) numerically: the top-right block of exp([[tA, I], [0, 0]]).
MatD phi_matrix(double t, const MatD& a);
// e^X for nilpotent X, exact.
RatMatrix exp_nilpotent(const RatMatrix& x);

// No eigenvalue of A lies on the imaginary axis away from 0.
bool phi_invertible_all_t(const RatMatrix& a);

struct GroupElement {
    double t = 0;
    VecD v;
};
// (t, v)·(s, w) = (t + s, v + e^{tA} w)
GroupElement group_multiply(const GroupElement& g, const GroupElement& h, const MatD& a);
GroupElement exp_group(double t, const VecD& v, const MatD& a);
// Inverse of exp_group; throws InvalidParams when Φ(tA) is singular.
GroupElement log_group(double t, const VecD& w, const MatD& a);

// Both sides of (t+s)Φ((t+s)t0A)v0 = tΦ(t t0 A)v0 + s e^{t t0 A}Φ(s t0 A)v0.
std::pair<RatVector, RatVector> monop_sides_exact(const RatMatrix& a, const Rational& t0, const RatVector& v0,
                                                  const Rational& t, const Rational& s);
double monop_defect(const MatD& a, double t0, const VecD& v0, double t, double s);

// A1 = c·P·A2·P⁻¹ with rational c; nothing if no rational scaling works.
struct AdConjugacy {
    Rational c;
    RatMatrix P;
};
std::optional<AdConjugacy> ad_conjugate_iso(const RatMatrix& a1, const RatMatrix& a2, std::uint64_t seed = 7);

bool detect_heisenberg(const RatMatrix& a);

// F(t, v) = (μ t, L v + t Φ(μ t A2) v0) with μ = sign·c and L·P·A2 = sign·A2·L·P.
struct GroupIso {
    Rational c;
    int sign = 1;
    Rational mu;
    RatMatrix L;
    RatMatrix P;
    RatVector v0;
    double homomorphism_defect = 0;  // max over the sampled pairs
    double exp_defect = 0;           // F∘exp1 vs exp2∘f
    bool verified = false;

    GroupElement apply(const GroupElement& g, const MatD& a2) const;
};
GroupIso lie_iso_build(const RatMatrix& a1, const RatMatrix& a2, const Rational& c, const RatMatrix& p, int sign,
                       const RatVector& v0, std::uint64_t seed = 11);

struct LatticeWitness {
    double t0 = 0;
    RatMatrix E;
    std::optional<MatD> P;
};
struct BockReport {
    bool accepted = false;
    bool charpoly_ok = false;
    bool jordan_ok = false;
    std::optional<bool> conjugator_ok;
    double coeff_error = 0;
    std::string diagnostic;
};
BockReport bock_verify(const MatD& a, const LatticeWitness& w, double tol);
BockReport bock_verify(const RatMatrix& a, const LatticeWitness& w, double tol);

bool lattice_necessary(const Rational& mu, const RatMatrix& b);

// Bracket of R e0 ⋉_A R^d in the basis (e0, ideal), with the standard structure of the given
// kind extended over e0 and the q-part; checks J² = −I, the quaternion relations and N_J = 0.
bool verify_structure(const RatMatrix& a, StructureKind kind);
bool verify_hypercomplex_structure(const HcxAAData& data);

// A witness (A, t0, E) taken from the lattice constructions for twelve-dimensional families.
struct WitnessCase {
    std::string family;
    std::string instance;
    MatD A;
    LatticeWitness witness;
};
WitnessCase witness_s9(long m);
WitnessCase witness_s6(long k);
WitnessCase witness_s13(long k);
WitnessCase witness_s2(long k);
// Rotation-order integer matrices with eigenvalues e^{±2πi/k}, k ∈ {1,2,3,4,6}.
RatMatrix finite_order_block(long k);
std::vector<WitnessCase> standard_witnesses();

}  // namespace haal
