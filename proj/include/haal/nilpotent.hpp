#pragma once

#include "haal/matrix.hpp"
#include "haal/quaternion.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace haal {

enum class StructureKind { Hypercomplex, Complex };
std::size_t beta(StructureKind k);
const char* kind_name(StructureKind k);

// Jordan type j_{n_1}^{q_1} ⊕ ... ⊕ j_{n_k}^{q_k} ⊕ 0_d, n_1 > ... > n_k ≥ 2.
struct JordanData {
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    std::size_t d = 0;

    std::size_t dimension() const;
    void validate() const;
    friend bool operator==(const JordanData& a, const JordanData& b) { return a.parts == b.parts && a.d == b.d; }
    friend bool operator<(const JordanData& a, const JordanData& b)
    {
        return a.parts != b.parts ? a.parts < b.parts : a.d < b.d;
    }
};
std::string to_string(const JordanData& jd);

// Jordan type of a nilpotent matrix, read off its kernel-dimension sequence.
JordanData jordan_data_of(const RatMatrix& nilpotent);
// Block-diagonal matrix with the given Jordan type (lower-triangular blocks).
RatMatrix jordan_matrix(const JordanData& jd);

enum class AdmissibleCondition { CondI, CondII, CondIII };
const char* condition_name(AdmissibleCondition c);

struct CanonicalNilpotent;

struct AdmissibilityVerdict {
    bool admissible = false;
    std::optional<AdmissibleCondition> condition;
    std::size_t t = 0;  // CondIII index (1-based position of the smaller block in parts)
    std::optional<RatMatrix> witness;
    std::optional<SigmaTuple> witness_sigma;
    std::size_t witness_ell = 0;
};

enum class CanonKind { N, AEll };

struct CanonicalNilpotent {
    CanonKind kind = CanonKind::AEll;
    StructureKind structure = StructureKind::Hypercomplex;
    SigmaTuple sigma;
    std::size_t ell = 0;
    std::size_t n = 0;  // the Lie algebra has real dimension β·n
    RatMatrix matrix;     // q-part first, then the blocks of B (the layout of assemble_A)
    RatMatrix block_sum;  // same matrix in direct-sum order: the insert block sits in place of 𝕁_{m_ℓ}
};
std::string describe(const CanonicalNilpotent& c);

// Hypercomplex almost abelian data: A = [[μ I_3, 0], [(J_1 v0 | J_2 v0 | J_3 v0), B]].
struct HcxAAData {
    std::size_t n = 0;
    Rational mu;
    RatVector v0;
    RatMatrix B;
};

RatMatrix assemble_A(const HcxAAData& data);
// Same layout without the J-commutation check; used to build deliberately broken data.
RatMatrix assemble_A_unchecked(const HcxAAData& data);

// The elementary block 𝕁_m (or its complex analogue): j_m ⊗ I_β.
RatMatrix jordan_block_beta(std::size_t m, std::size_t beta);

// Largest admissible ell for this Σ: r+1 if s > 0, else r.
std::size_t max_ell(const SigmaTuple& sigma);
CanonicalNilpotent canonical_matrix(const SigmaTuple& sigma, std::size_t ell, StructureKind kind);

// Unique canonical form isomorphic to the almost abelian algebra of the data (μ = 0, B nilpotent).
CanonicalNilpotent identify_class(const HcxAAData& data);
// Same for a raw matrix A of size βn−1 whose lower-right block is the nilpotent B.
CanonicalNilpotent identify_class_matrix(const RatMatrix& a, StructureKind kind);

HcxAAData normalize_v0(const HcxAAData& data);

AdmissibilityVerdict admissible(const JordanData& jd, StructureKind kind);

// All Σ tuples with Σ m_i p_i + s = q, blocks in decreasing size.
std::vector<SigmaTuple> enumerate_sigma(std::size_t q);

struct ClassCountEntry {
    SigmaTuple sigma;
    std::size_t classes = 0;
    std::vector<std::size_t> ells;
    std::vector<std::size_t> steps;  // nilpotency step of each class
};
struct ClassCount {
    std::size_t total = 0;
    std::size_t two_step = 0;
    std::vector<ClassCountEntry> breakdown;
};
ClassCount count_classes(std::size_t n, StructureKind kind);

}  // namespace haal
