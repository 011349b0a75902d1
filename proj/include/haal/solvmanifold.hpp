#pragma once

#include "haal/intpoly.hpp"
#include "haal/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace haal {

// Z ⋉_E Z^d with (m, p)·(k, q) = (m + k, p + E^m q).
struct LatticePresentation {
    std::size_t rank = 0;  // d + 1
    RatMatrix E;

    using Element = std::pair<Integer, RatVector>;
    Element multiply(const Element& g, const Element& h) const;
};

struct SolvmanifoldDescriptor {
    IntPoly p;
    std::size_t n = 0;
    RatMatrix companion;  // C_p
    RatMatrix holonomy;   // I_3 ⊕ C_p^{⊕4}
    LatticePresentation lattice;
    std::vector<double> xp_numeric;  // logs of the roots of p, ascending
    std::size_t dimension() const { return 4 * n + 4; }
};

// Throws NotDeltaMember unless p ∈ Δ_n.
SolvmanifoldDescriptor build_solvmanifold(const IntPoly& p, double precision);
SolvmanifoldDescriptor build_solvmanifold(const IntPoly& p);

// Γ_p∖G_p and Γ_q∖G_q are diffeomorphic iff q = p or q = p*.
bool diffeo_equiv(const IntPoly& p, const IntPoly& q);

struct TorusSplit {
    IntPoly ptilde;
    std::size_t torus_dim = 4;
};
// p = (x − 1)·p̃ gives a product with a 4-torus; nothing if p(1) ≠ 0.
std::optional<TorusSplit> split_torus_factor(const IntPoly& p);

struct ProductEmbedding {
    SolvmanifoldDescriptor product;
    std::size_t sub_dimension = 0;      // 4(n+m)+4
    std::size_t ambient_dimension = 0;  // (4n+4)+(4m+4)
    std::size_t codimension() const { return ambient_dimension - sub_dimension; }
};
// Throws CommonRoot when Res(p, q) = 0.
ProductEmbedding product_embedding(const IntPoly& p, const IntPoly& q);

}  // namespace haal
