#pragma once

#include "haal/matrix.hpp"
#include "haal/nilpotent.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace haal {

enum class BCase { B1, B2 };
enum class V0Status { Zero, InImage, NotInImage };
const char* bcase_name(BCase c);
const char* v0_status_name(V0Status s);

// B1 = blk(a+bi) ⊕ blk(c+di); B2 = [[blk(a+bi), 0], [I_4, blk(a+bi)]]; d is unused for B2.
struct Dim12Input {
    Rational mu;
    BCase bcase = BCase::B1;
    Rational a, b, c, d;
    V0Status v0 = V0Status::Zero;
};

struct Dim12Flags {
    bool unimodular = false;
    bool completely_solvable = false;
    std::optional<std::size_t> nilpotent_step;
    bool hkt = false;
    bool hyper_kahler = false;
};

enum class LatticeTag { Yes, No, PartialYes, Unknown };
enum class NoReason { NotUnimodular, MuNonzero, UnitConstantTerm };
const char* lattice_tag_name(LatticeTag t);
const char* no_reason_name(NoReason r);

struct LatticeVerdict {
    LatticeTag tag = LatticeTag::Unknown;
    std::optional<NoReason> reason;
    std::string witness;  // how to produce (t0, E), or the obstruction
};

struct FamilyLabel {
    int family = 0;  // 1..18
    std::vector<std::pair<std::string, Rational>> params;
    Dim12Flags flags;
    LatticeVerdict lattice;

    Rational param(const std::string& name) const;
    std::string name() const;  // e.g. "s9^{1/2}"
    friend bool operator==(const FamilyLabel& x, const FamilyLabel& y)
    {
        return x.family == y.family && x.params == y.params;
    }
};

// Normalizes the data and returns the label with flags and lattice verdict populated.
FamilyLabel classify12(const Dim12Input& in);

// Data (μ, v0, B) of the family's displayed representative.
HcxAAData representative_data(const FamilyLabel& label);
RatMatrix representative_matrix(const FamilyLabel& label);
// An input that classify12 maps back to this label.
Dim12Input representative_input(const FamilyLabel& label);

Dim12Flags flags(const FamilyLabel& label);
LatticeVerdict lattice_verdict(const FamilyLabel& label);

// Real parts of the spectral classes of a matrix; a conjugate pair counts as one class of weight 2.
struct SpectralClass {
    Rational re;
    bool pair = false;
};
// Nothing if the characteristic polynomial has factors beyond linear and quadratic ones.
std::optional<std::vector<SpectralClass>> spectral_classes(const RatMatrix& a);

// If the classes have pairwise distinct real parts, the minimal polynomial of e^{tA} has
// constant term ±e^{t·Σ w_i re_i}. An integer matrix needs that term to be ±1, impossible
// for t ≠ 0 when the weighted sum is nonzero.
// When t·Im λ ∈ πZ a conjugate pair collapses to one eigenvalue of e^{tA} and only counts
// once; that case is reported separately because the argument says nothing there.
struct UnitTermObstruction {
    bool applies = false;        // real parts pairwise distinct
    Rational exponent;           // Σ w_i re_i with pairs weighted 2
    Rational collapsed_exponent; // pairs weighted 1
    bool obstructed() const { return applies && sgn(exponent) != 0; }
    bool collapsed_obstructed() const { return applies && sgn(collapsed_exponent) != 0; }
};
UnitTermObstruction unit_term_obstruction(const std::vector<SpectralClass>& classes);

}  // namespace haal
