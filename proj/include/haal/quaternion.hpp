#pragma once

#include "haal/matrix.hpp"
#include "haal/ratpoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace haal {

// x + y i + z j + w k with exact components.
struct Quaternion {
    Rational x, y, z, w;

    Quaternion() = default;
    Quaternion(Rational x_, Rational y_ = 0, Rational z_ = 0, Rational w_ = 0)  // NOLINT
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)), w(std::move(w_))
    {
    }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    Quaternion conj() const { return {x, -y, -z, -w}; }
    Rational norm2() const { return x * x + y * y + z * z + w * w; }
    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0 && sgn(w) == 0; }
    Quaternion inverse() const;

    friend bool operator==(const Quaternion& a, const Quaternion& b)
    {
        return a.x == b.x && a.y == b.y && a.z == b.z && a.w == b.w;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator*(const Quaternion& a, const Quaternion& b);

// q×q quaternionic matrix acting on the right H-vector space H^q by left multiplication.
class QuatMatrix {
public:
    QuatMatrix() = default;
    explicit QuatMatrix(std::size_t q) : q_(q), a_(q * q) {}
    static QuatMatrix identity(std::size_t q);
    // Lower-triangular Jordan block: lambda on the diagonal, 1 on the subdiagonal.
    static QuatMatrix jordan_block(std::size_t m, const Quaternion& lambda);

    std::size_t size() const { return q_; }
    Quaternion& operator()(std::size_t i, std::size_t j) { return a_[i * q_ + j]; }
    const Quaternion& operator()(std::size_t i, std::size_t j) const { return a_[i * q_ + j]; }
    bool is_zero() const;

    friend bool operator==(const QuatMatrix& a, const QuatMatrix& b) { return a.q_ == b.q_ && a.a_ == b.a_; }
    friend bool operator!=(const QuatMatrix& a, const QuatMatrix& b) { return !(a == b); }

private:
    std::size_t q_ = 0;
    std::vector<Quaternion> a_;
};

QuatMatrix operator+(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix quat_pow(const QuatMatrix& a, unsigned k);
QuatMatrix direct_sum(const std::vector<QuatMatrix>& blocks);

// The 4×4 real matrix of a quaternion in the index-major basis (u, J1 u, J2 u, J3 u).
RatMatrix quaternion_block(const Quaternion& h);

// Standard complex structures J1, J2, J3 on R^{4q}: block-diagonal copies of the 4×4 model.
struct StandardJTriple {
    std::size_t q = 0;
    RatMatrix J1, J2, J3;

    explicit StandardJTriple(std::size_t q);
    const RatMatrix& operator[](int alpha) const;  // alpha in {1,2,3}
};

bool commutes_with_j(const RatMatrix& b);

// Real 4q×4q (index-major, J-commuting) → q×q quaternionic.
QuatMatrix sigma(const RatMatrix& b);
RatMatrix sigma_inv(const QuatMatrix& q);

// Converts the four-q×q-block layout [[X,-Y,-Z,-W],[Y,X,W,-Z],[Z,-W,X,Y],[W,Z,-Y,X]]
// into the index-major layout used by sigma.
RatMatrix type_major_to_index_major(const RatMatrix& b);

struct SigmaTuple {
    std::size_t r = 0;
    std::vector<std::size_t> m;
    std::vector<std::size_t> p;
    std::size_t s = 0;

    std::size_t dimension() const;  // Σ m_i p_i + s
    void validate() const;
    friend bool operator==(const SigmaTuple& a, const SigmaTuple& b)
    {
        return a.r == b.r && a.m == b.m && a.p == b.p && a.s == b.s;
    }
};

std::string to_string(const SigmaTuple& s);

// Σ tuple from the kernel-dimension sequence of a real nilpotent matrix whose
// kernels are made of beta-dimensional blocks.
SigmaTuple sigma_from_kernel_sequence(const std::vector<std::size_t>& seq, std::size_t beta, std::size_t quat_dim);

// Block-diagonal J-form ⊕ J_{m_i}(0)^{p_i} ⊕ 0_s, blocks in decreasing size.
QuatMatrix nilpotent_jordan_form(const SigmaTuple& s);

SigmaTuple quat_jordan_nilpotent(const QuatMatrix& q);
SigmaTuple sigma_tuple_from_real(const RatMatrix& b);

// Quaternionic Jordan data for one eigenvalue class re ± i·sqrt(im2), im2 ≥ 0.
struct QuatJordanPart {
    Rational re;
    Rational im2;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (size, count), decreasing size
};

// Full quaternionic Jordan type of a J-commuting real matrix whose characteristic
// polynomial splits into rational roots and irreducible quadratics with negative
// discriminant. The caller may pass those irreducible factors directly.
std::vector<QuatJordanPart> quat_jordan_form(const RatMatrix& b,
                                             const std::optional<std::vector<RatPoly>>& factors = std::nullopt);

}  // namespace haal
