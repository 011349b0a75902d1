#include "haal/dim12.hpp"

#include "haal/errors.hpp"
#include "haal/linalg.hpp"
#include "haal/quaternion.hpp"

#include <algorithm>
#include <sstream>

namespace haal {

const char* bcase_name(BCase c) { return c == BCase::B1 ? "B1" : "B2"; }

const char* v0_status_name(V0Status s)
{
    switch (s) {
    case V0Status::Zero: return "zero";
    case V0Status::InImage: return "in-image";
    case V0Status::NotInImage: return "not-in-image";
    }
    return "?";
}

const char* lattice_tag_name(LatticeTag t)
{
    switch (t) {
    case LatticeTag::Yes: return "Yes";
    case LatticeTag::No: return "No";
    case LatticeTag::PartialYes: return "PartialYes";
    case LatticeTag::Unknown: return "Unknown";
    }
    return "?";
}

const char* no_reason_name(NoReason r)
{
    switch (r) {
    case NoReason::NotUnimodular: return "NotUnimodular";
    case NoReason::MuNonzero: return "MuNonzero";
    case NoReason::UnitConstantTerm: return "UnitConstantTerm";
    }
    return "?";
}

Rational FamilyLabel::param(const std::string& key) const
{
    for (auto& [k, v] : params)
        if (k == key)
            return v;
    throw Error(Errc::InvalidParams, "family s" + std::to_string(family) + " has no parameter " + key);
}

std::string FamilyLabel::name() const
{
    std::ostringstream os;
    os << "s" << family;
    if (!params.empty()) {
        os << "^{";
        for (std::size_t i = 0; i < params.size(); ++i)
            os << (i ? "," : "") << to_string(params[i].second);
        os << "}";
    }
    return os.str();
}

namespace {

using P = std::vector<std::pair<std::string, Rational>>;

FamilyLabel make(int family, P params)
{
    FamilyLabel l;
    l.family = family;
    l.params = std::move(params);
    return l;
}

[[noreturn]] void not_in_image_impossible(const char* why)
{
    throw Error(Errc::InvalidParams, std::string("v0 cannot lie outside Im(B - mu I): ") + why);
}

// s2 two-region rule over {(a,c), (c,a), (-a,-c), (-c,-a)}.
std::pair<Rational, Rational> s2_normalize(const Rational& a, const Rational& c)
{
    std::pair<Rational, Rational> cands[] = {{a, c}, {c, a}, {-a, -c}, {-c, -a}};
    for (auto& [x, y] : cands) {
        if (sgn(x) >= 0 && x <= y)
            return {x, y};
        if (sgn(x) < 0 && sgn(y) > 0 && abs(x) <= abs(y))
            return {x, y};
    }
    throw Error(Errc::InvalidParams, "s2 normalization failed");
}

FamilyLabel classify_b1(const Rational& mu, Rational a, Rational b, Rational c, Rational d, V0Status v0)
{
    if (b > d) {
        std::swap(a, c);
        std::swap(b, d);
    }
    const bool outside = v0 == V0Status::NotInImage;
    if (sgn(b) > 0) {
        if (outside)
            not_in_image_impossible("B has no real eigenvalues");
        if (sgn(mu) == 0) {
            Rational a1 = a / b, c1 = c / b, d1 = d / b;
            if (d1 > 1) {
                // −A gives an isomorphic algebra and −(x+i) is similar to −x+i: fix the sign of (a, c)
                if (sgn(a1) < 0 || (sgn(a1) == 0 && sgn(c1) < 0)) {
                    a1 = -a1;
                    c1 = -c1;
                }
                return make(1, {{"a", a1}, {"c", c1}, {"d", d1}});
            }
            auto [x, y] = s2_normalize(a1, c1);
            return make(2, {{"a", x}, {"c", y}});
        }
        Rational m = abs(mu);
        Rational a1 = a / mu, b1 = b / m, c1 = c / mu, d1 = d / m;
        if (b1 < d1)
            return make(3, {{"a", a1}, {"b", b1}, {"c", c1}, {"d", d1}});
        if (a1 > c1)
            std::swap(a1, c1);
        return make(4, {{"a", a1}, {"b", b1}, {"c", c1}});
    }
    if (sgn(d) > 0) {
        if (sgn(mu) == 0) {
            Rational a1 = a / d, c1 = c / d;
            if (!outside) {
                // same sign freedom as for s1; with a = 0 it only acts on c
                if (sgn(a1) < 0 || (sgn(a1) == 0 && sgn(c1) < 0)) {
                    a1 = -a1;
                    c1 = -c1;
                }
                return make(5, {{"a", a1}, {"c", c1}});
            }
            if (sgn(a) != 0)
                not_in_image_impossible("B is invertible when a != 0");
            return make(6, {{"c", abs(c1)}});
        }
        Rational m = abs(mu);
        Rational a1 = a / mu, c1 = c / mu, d1 = d / m;
        if (!outside)
            return make(7, {{"a", a1}, {"c", c1}, {"d", d1}});
        if (a1 != 1)
            not_in_image_impossible("B - mu I is invertible unless a = mu");
        return make(8, {{"c", c1}, {"d", d1}});
    }
    // b = d = 0
    if (sgn(mu) == 0) {
        if (!outside) {
            if (sgn(a) == 0 && sgn(c) == 0)
                throw Error(Errc::InvalidParams, "A = 0 gives the abelian algebra, which is not in the list");
            Rational r = abs(a) >= abs(c) ? Rational(c / a) : Rational(a / c);
            return make(9, {{"c", r}});
        }
        if (sgn(a) != 0 && sgn(c) != 0)
            not_in_image_impossible("B is invertible when a, c != 0");
        Rational other = sgn(a) == 0 ? c : a;
        return make(10, {{"c", Rational(sgn(other) == 0 ? 0 : 1)}});
    }
    Rational a1 = a / mu, c1 = c / mu;
    if (!outside) {
        if (a1 > c1)
            std::swap(a1, c1);
        return make(11, {{"a", a1}, {"c", c1}});
    }
    if (a1 != 1 && c1 != 1)
        not_in_image_impossible("B - mu I is invertible unless a = mu or c = mu");
    return make(12, {{"c", a1 == 1 ? c1 : a1}});
}

FamilyLabel classify_b2(const Rational& mu, const Rational& a, const Rational& b, V0Status v0)
{
    const bool outside = v0 == V0Status::NotInImage;
    if (sgn(b) > 0) {
        if (outside)
            not_in_image_impossible("B has no real eigenvalues");
        if (sgn(mu) == 0)
            return make(13, {{"a", abs(a / b)}});
        return make(14, {{"a", a / mu}, {"b", b / abs(mu)}});
    }
    if (sgn(mu) == 0) {
        if (sgn(a) != 0) {
            if (outside)
                not_in_image_impossible("B is invertible when a != 0");
            return make(15, {});
        }
        return make(16, {{"s", Rational(outside ? 1 : 0)}});
    }
    Rational a1 = a / mu;
    if (a1 != 1) {
        if (outside)
            not_in_image_impossible("B - mu I is invertible unless a = mu");
        return make(17, {{"a", a1}});
    }
    if (!outside)
        return make(17, {{"a", Rational(1)}});
    return make(18, {});
}

struct RepSpec {
    Rational mu;
    BCase bcase;
    Rational a, b, c, d;
    bool u = false;  // v0 = first h coordinate (outside the image)
};

RepSpec rep_spec(const FamilyLabel& l)
{
    auto p = [&](const char* k) { return l.param(k); };
    Rational z = 0, one = 1;
    switch (l.family) {
    case 1: return {z, BCase::B1, p("a"), one, p("c"), p("d")};
    case 2: return {z, BCase::B1, p("a"), one, p("c"), one};
    case 3: return {one, BCase::B1, p("a"), p("b"), p("c"), p("d")};
    case 4: return {one, BCase::B1, p("a"), p("b"), p("c"), p("b")};
    case 5: return {z, BCase::B1, p("a"), z, p("c"), one};
    case 6: return {z, BCase::B1, z, z, p("c"), one, true};
    case 7: return {one, BCase::B1, p("a"), z, p("c"), p("d")};
    case 8: return {one, BCase::B1, one, z, p("c"), p("d"), true};
    case 9: return {z, BCase::B1, one, z, p("c"), z};
    case 10: return {z, BCase::B1, z, z, p("c"), z, true};
    case 11: return {one, BCase::B1, p("a"), z, p("c"), z};
    case 12: return {one, BCase::B1, one, z, p("c"), z, true};
    case 13: return {z, BCase::B2, p("a"), one, z, z};
    case 14: return {one, BCase::B2, p("a"), p("b"), z, z};
    case 15: return {z, BCase::B2, one, z, z, z};
    case 16: return {z, BCase::B2, z, z, z, z, sgn(p("s")) != 0};
    case 17: return {one, BCase::B2, p("a"), z, z, z};
    case 18: return {one, BCase::B2, one, z, z, z, true};
    default: throw Error(Errc::InvalidParams, "unknown family s" + std::to_string(l.family));
    }
}

RatMatrix b_matrix(const RepSpec& r)
{
    RatMatrix first = quaternion_block(Quaternion(r.a, r.b));
    if (r.bcase == BCase::B1)
        return direct_sum(first, quaternion_block(Quaternion(r.c, r.d)));
    RatMatrix m = direct_sum(first, first);
    m.set_block(4, 0, RatMatrix::identity(4));
    return m;
}

}  // namespace

HcxAAData representative_data(const FamilyLabel& label)
{
    RepSpec r = rep_spec(label);
    HcxAAData d;
    d.n = 3;
    d.mu = r.mu;
    d.B = b_matrix(r);
    d.v0 = r.u ? unit_vector(8, 0) : RatVector(8, Rational(0));
    return d;
}

RatMatrix representative_matrix(const FamilyLabel& label) { return assemble_A(representative_data(label)); }

Dim12Input representative_input(const FamilyLabel& label)
{
    RepSpec r = rep_spec(label);
    return {r.mu, r.bcase, r.a, r.b, r.c, r.bcase == BCase::B1 ? r.d : Rational(0),
            r.u ? V0Status::NotInImage : V0Status::Zero};
}

Dim12Flags flags(const FamilyLabel& label)
{
    HcxAAData d = representative_data(label);
    RatMatrix a = assemble_A(d);
    Dim12Flags f;
    f.unimodular = sgn(trace(a)) == 0;
    static const int cs[] = {9, 10, 11, 12, 15, 16, 17, 18};
    f.completely_solvable = std::find(std::begin(cs), std::end(cs), label.family) != std::end(cs);
    if (is_nilpotent(a))
        f.nilpotent_step = nilpotency_index(a);
    f.hkt = is_zero(d.v0) && (d.B + d.B.transpose()).is_zero();
    f.hyper_kahler = f.hkt && sgn(d.mu) == 0;
    return f;
}

std::optional<std::vector<SpectralClass>> spectral_classes(const RatMatrix& a)
{
    RatPoly p = char_poly(a);
    std::vector<SpectralClass> out;
    RatPoly rest = p;
    for (auto& r : rational_roots(p)) {
        out.push_back({r, false});
        RatPoly lin(std::vector<Rational>{-r, 1});
        while (divmod(rest, lin).second.is_zero())
            rest = divmod(rest, lin).first;
    }
    for (auto& s : squarefree_decomposition(rest)) {
        if (s.degree() <= 0)
            continue;
        if (s.degree() != 2)
            return std::nullopt;
        RatPoly m = s.monic();
        Rational disc = m.coeff(1) * m.coeff(1) - 4 * m.coeff(0);
        if (sgn(disc) >= 0)
            return std::nullopt;
        out.push_back({-m.coeff(1) / 2, true});
    }
    return out;
}

UnitTermObstruction unit_term_obstruction(const std::vector<SpectralClass>& classes)
{
    UnitTermObstruction o;
    o.applies = true;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (classes[i].re == classes[j].re)
                o.applies = false;
    for (auto& c : classes) {
        o.exponent += (c.pair ? 2 : 1) * c.re;
        o.collapsed_exponent += c.re;
    }
    return o;
}

LatticeVerdict lattice_verdict(const FamilyLabel& label)
{
    LatticeVerdict v;
    Dim12Flags f = flags(label);
    RepSpec r = rep_spec(label);
    auto no = [&](NoReason why, std::string text) {
        v.tag = LatticeTag::No;
        v.reason = why;
        v.witness = std::move(text);
        return v;
    };
    auto yes = [&](LatticeTag tag, std::string text) {
        v.tag = tag;
        v.witness = std::move(text);
        return v;
    };
    if (!f.unimodular)
        return no(NoReason::NotUnimodular, "trace of A is nonzero");
    if (sgn(r.mu) != 0)
        return no(NoReason::MuNonzero, "mu != 0: a lattice forces mu = 0 and tr B = 0");
    if (f.nilpotent_step)
        return yes(LatticeTag::Yes, "nilpotent with rational structure constants");
    const int fam = label.family;
    if (fam == 6 && sgn(label.param("c")) == 0)
        return yes(LatticeTag::Yes, "t0 = 2pi/k, E = [[I3,0],[U,I4]] (+) C_k (+) C_k, k in {1,2,3,4,6}");
    if (fam == 9 && label.param("c") == -1)
        return yes(LatticeTag::Yes, "t_m = log((m+sqrt(m^2-4))/2), E = I3 (+) [[0,-1],[1,m]]^4, m >= 3");
    if (fam == 13 && sgn(label.param("a")) == 0)
        return yes(LatticeTag::Yes, "t0 = 2pi/k with the unipotent/rotation integer matrices, k in {1,2,3,4,6}");
    if (fam == 5 && sgn(label.param("a")) == 0)
        return yes(LatticeTag::Yes, "t0 = 2pi/k, rotation blocks conjugate to integer matrices");
    if (fam == 2 && sgn(label.param("a")) == 0)
        return yes(LatticeTag::Yes, "t0 = 2pi/k, rotation blocks conjugate to integer matrices");
    if (fam == 1 && sgn(label.param("a")) == 0) {
        Rational d = label.param("d");
        return yes(LatticeTag::Yes, "t0 = 2pi*" + d.get_den().get_str() + " gives e^{t0 A} = I");
    }
    if (fam == 5) {
        auto classes = spectral_classes(representative_matrix(label));
        auto o = classes ? unit_term_obstruction(*classes) : UnitTermObstruction{};
        if (o.obstructed())
            return no(NoReason::UnitConstantTerm,
                      "minimal polynomial of e^{t0 A} has constant term e^{" + to_string(o.exponent) +
                          " t0} != +-1 when sin t0 != 0; when sin t0 = 0, e^{a t0} is transcendental for rational a != 0");
    }
    if ((fam == 1 || fam == 2) && label.param("a") + label.param("c") == 0)
        return yes(LatticeTag::PartialYes,
                   "lattices for the parameters of quartics x^4-m3 x^3+m2 x^2-m1 x+1 with non-real roots off the unit "
                   "circle, e.g. p_k = x^4-x^3+kx^2-x+1, k >= 3");
    v.tag = LatticeTag::Unknown;
    return v;
}

FamilyLabel classify12(const Dim12Input& in)
{
    if (sgn(in.b) < 0 || sgn(in.d) < 0)
        throw Error(Errc::InvalidParams, "b and d must be nonnegative");
    FamilyLabel l = in.bcase == BCase::B1 ? classify_b1(in.mu, in.a, in.b, in.c, in.d, in.v0)
                                          : classify_b2(in.mu, in.a, in.b, in.v0);
    l.flags = flags(l);
    l.lattice = lattice_verdict(l);
    return l;
}

}  // namespace haal
