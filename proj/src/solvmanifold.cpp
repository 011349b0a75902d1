#include "haal/solvmanifold.hpp"

#include "haal/errors.hpp"
#include "haal/linalg.hpp"
#include "haal/poly_tools.hpp"

#include <cmath>

namespace haal {

namespace {

void require_member(const IntPoly& p)
{
    DeltaVerdict v = delta_check(p);
    if (!v.member)
        throw Error(Errc::NotDeltaMember,
                    p.str() + " is not in Delta (" + delta_failure_name(*v.failed_condition) + ")");
}

}  // namespace

LatticePresentation::Element LatticePresentation::multiply(const Element& g, const Element& h) const
{
    RatMatrix step = E;
    if (sgn(g.first) < 0) {
        auto inv = inverse(E);
        if (!inv)
            throw Error(Errc::InvalidParams, "lattice generator is singular");
        step = *inv;
    }
    Integer m = abs(g.first);
    RatVector q = h.second;
    for (Integer i = 0; i < m; ++i)
        q = step * q;
    RatVector sum = g.second;
    for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] += q[i];
    return {g.first + h.first, sum};
}

SolvmanifoldDescriptor build_solvmanifold(const IntPoly& p, double precision)
{
    require_member(p);
    SolvmanifoldDescriptor s;
    s.p = p;
    s.n = static_cast<std::size_t>(p.degree());
    s.companion = companion_matrix(p);
    s.holonomy = direct_sum(RatMatrix::identity(3), repeat_sum(s.companion, 4));
    s.lattice.rank = 4 * s.n + 4;
    s.lattice.E = s.holonomy;
    for (double r : real_roots(p, precision))
        s.xp_numeric.push_back(std::log(r));
    return s;
}

SolvmanifoldDescriptor build_solvmanifold(const IntPoly& p) { return build_solvmanifold(p, default_precision()); }

bool diffeo_equiv(const IntPoly& p, const IntPoly& q)
{
    require_member(p);
    require_member(q);
    if (p.degree() != q.degree())
        return false;
    return q == p || q == reciprocal(p);
}

std::optional<TorusSplit> split_torus_factor(const IntPoly& p)
{
    require_member(p);
    if (p.eval(Integer(1)) != 0)
        return std::nullopt;
    return TorusSplit{exact_div(p, IntPoly{-1, 1}), 4};
}

ProductEmbedding product_embedding(const IntPoly& p, const IntPoly& q)
{
    require_member(p);
    require_member(q);
    if (resultant(p, q) == 0)
        throw Error(Errc::CommonRoot, p.str() + " and " + q.str() + " share a root");
    ProductEmbedding e;
    e.product = build_solvmanifold(p * q);
    e.sub_dimension = e.product.dimension();
    e.ambient_dimension = 4 * static_cast<std::size_t>(p.degree()) + 4 + 4 * static_cast<std::size_t>(q.degree()) + 4;
    return e;
}

}  // namespace haal
