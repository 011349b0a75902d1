#include "haal/nilpotent.hpp"

#include "haal/errors.hpp"
#include "haal/linalg.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace haal {

std::size_t beta(StructureKind k) { return k == StructureKind::Hypercomplex ? 4 : 2; }

const char* kind_name(StructureKind k) { return k == StructureKind::Hypercomplex ? "hypercomplex" : "complex"; }

std::size_t JordanData::dimension() const
{
    std::size_t s = d;
    for (auto& [n, q] : parts)
        s += n * q;
    return s;
}

void JordanData::validate() const
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].first < 2)
            throw Error(Errc::InvalidParams, "Jordan parts must have size at least 2 (size-1 blocks go in d)");
        if (parts[i].second < 1)
            throw Error(Errc::InvalidParams, "Jordan part multiplicities must be positive");
        if (i > 0 && parts[i].first >= parts[i - 1].first)
            throw Error(Errc::InvalidParams, "Jordan part sizes must be strictly decreasing");
    }
}

std::string to_string(const JordanData& jd)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < jd.parts.size(); ++i)
        os << (i ? ", " : "") << "j" << jd.parts[i].first << "^" << jd.parts[i].second;
    os << (jd.parts.empty() ? "" : ", ") << "0_" << jd.d << "}";
    return os.str();
}

JordanData jordan_data_of(const RatMatrix& m)
{
    auto seq = kernel_dim_sequence(m);
    if (seq.back() != m.rows())
        throw Error(Errc::NotNilpotent, "matrix is not nilpotent");
    std::vector<std::size_t> k{0};
    k.insert(k.end(), seq.begin(), seq.end());
    k.push_back(k.back());
    JordanData jd;
    for (std::size_t j = k.size() - 2; j >= 1; --j) {
        std::size_t exact = (k[j] - k[j - 1]) - (k[j + 1] - k[j]);
        if (exact == 0)
            continue;
        if (j == 1)
            jd.d = exact;
        else
            jd.parts.emplace_back(j, exact);
    }
    return jd;
}

RatMatrix jordan_matrix(const JordanData& jd)
{
    std::vector<RatMatrix> blocks;
    for (auto& [n, q] : jd.parts)
        for (std::size_t c = 0; c < q; ++c)
            blocks.push_back(jordan_block_beta(n, 1));
    if (jd.d > 0)
        blocks.emplace_back(jd.d, jd.d);
    return direct_sum(blocks);
}

const char* condition_name(AdmissibleCondition c)
{
    switch (c) {
    case AdmissibleCondition::CondI: return "CondI";
    case AdmissibleCondition::CondII: return "CondII";
    case AdmissibleCondition::CondIII: return "CondIII";
    }
    return "?";
}

std::string describe(const CanonicalNilpotent& c)
{
    std::ostringstream os;
    if (c.kind == CanonKind::N)
        os << "N(s=" << c.sigma.s << ")";
    else
        os << "A_" << c.ell << " for Sigma=" << to_string(c.sigma);
    return os.str();
}

namespace {

void check_shapes(const HcxAAData& d)
{
    std::size_t h = 4 * (d.n - 1);
    if (d.n < 1 || d.B.rows() != h || d.B.cols() != h || d.v0.size() != h)
        throw Error(Errc::DimensionMismatch, "data for n=" + std::to_string(d.n) + " needs B of size " +
                                                 std::to_string(h) + " and v0 of length " + std::to_string(h));
}

}  // namespace

RatMatrix assemble_A_unchecked(const HcxAAData& d)
{
    check_shapes(d);
    std::size_t h = 4 * (d.n - 1);
    RatMatrix a(h + 3, h + 3);
    for (std::size_t i = 0; i < 3; ++i)
        a(i, i) = d.mu;
    if (h > 0) {
        StandardJTriple j(d.n - 1);
        for (int al = 1; al <= 3; ++al) {
            RatVector v = j[al] * d.v0;
            for (std::size_t i = 0; i < h; ++i)
                a(3 + i, al - 1) = v[i];
        }
        a.set_block(3, 3, d.B);
    }
    return a;
}

RatMatrix assemble_A(const HcxAAData& d)
{
    check_shapes(d);
    if (d.n > 1 && !commutes_with_j(d.B))
        throw Error(Errc::NotQuaternionLinear, "B does not commute with J1, J2, J3");
    return assemble_A_unchecked(d);
}

RatMatrix jordan_block_beta(std::size_t m, std::size_t b)
{
    RatMatrix out(m * b, m * b);
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t t = 0; t < b; ++t)
            out(b * (i + 1) + t, b * i + t) = 1;
    return out;
}

std::size_t max_ell(const SigmaTuple& s) { return s.s > 0 ? s.r + 1 : s.r; }

CanonicalNilpotent canonical_matrix(const SigmaTuple& sigma, std::size_t ell, StructureKind kind)
{
    sigma.validate();
    if (ell > max_ell(sigma))
        throw Error(Errc::IndexOutOfRange, "ell=" + std::to_string(ell) + " exceeds " + std::to_string(max_ell(sigma)) +
                                               " for Sigma=" + to_string(sigma) +
                                               (sigma.s == 0 ? " (A_{r+1} needs s > 0)" : ""));
    const std::size_t b = beta(kind), top = b - 1;
    CanonicalNilpotent out;
    out.structure = kind;
    out.sigma = sigma;
    out.ell = ell;
    out.n = sigma.dimension() + 1;
    out.kind = (sigma.r == 0 && ell == 1) ? CanonKind::N : CanonKind::AEll;

    // B in block order, remembering where each block starts
    std::vector<RatMatrix> blocks;
    std::size_t offset = 0, insert_at = 0;
    for (std::size_t i = 0; i < sigma.r; ++i)
        for (std::size_t c = 0; c < sigma.p[i]; ++c) {
            if (ell == i + 1 && c == 0)
                insert_at = offset;
            blocks.push_back(jordan_block_beta(sigma.m[i], b));
            offset += blocks.back().rows();
        }
    if (ell == sigma.r + 1)
        insert_at = offset;
    if (sigma.s > 0)
        blocks.emplace_back(b * sigma.s, b * sigma.s);
    RatMatrix B = direct_sum(blocks);
    const std::size_t h = B.rows();

    RatMatrix a(h + top, h + top);
    a.set_block(top, top, B);
    auto put_insert = [&](RatMatrix& m, std::size_t row0, std::size_t col0) {
        if (b == 4)
            for (std::size_t al = 0; al < 3; ++al)
                m(row0 + 1 + al, col0 + al) = 1;
        else
            m(row0, col0) = 1;
    };
    if (ell > 0)
        put_insert(a, top + insert_at, 0);
    out.matrix = a;

    // direct-sum order: the q-part sits right before the block receiving the insert
    std::size_t qpos = ell > 0 ? insert_at : 0;
    std::vector<std::size_t> perm(h + top);  // perm[standard index] = direct-sum index
    for (std::size_t i = 0; i < top; ++i)
        perm[i] = qpos + i;
    for (std::size_t i = 0; i < h; ++i)
        perm[top + i] = i < qpos ? i : i + top;
    RatMatrix bs(h + top, h + top);
    for (std::size_t i = 0; i < h + top; ++i)
        for (std::size_t j = 0; j < h + top; ++j)
            if (sgn(a(i, j)) != 0)
                bs(perm[i], perm[j]) = a(i, j);
    out.block_sum = bs;
    return out;
}

namespace {

CanonicalNilpotent match_class(const RatMatrix& a, const SigmaTuple& sigma, StructureKind kind)
{
    auto seq = kernel_dim_sequence(a);
    for (std::size_t ell = 0; ell <= max_ell(sigma); ++ell) {
        CanonicalNilpotent c = canonical_matrix(sigma, ell, kind);
        if (kernel_dim_sequence(c.matrix) == seq)
            return c;
    }
    throw Error(Errc::InvalidParams, "no canonical form with Sigma=" + to_string(sigma) + " matches the matrix");
}

}  // namespace

CanonicalNilpotent identify_class(const HcxAAData& data)
{
    if (sgn(data.mu) != 0)
        throw Error(Errc::InvalidParams, "identify_class needs mu = 0");
    RatMatrix a = assemble_A(data);
    SigmaTuple sigma = data.n > 1 ? sigma_tuple_from_real(data.B) : SigmaTuple{};
    return match_class(a, sigma, StructureKind::Hypercomplex);
}

CanonicalNilpotent identify_class_matrix(const RatMatrix& a, StructureKind kind)
{
    const std::size_t b = beta(kind), top = b - 1;
    if (!a.square() || a.rows() < top || (a.rows() + 1) % b != 0)
        throw Error(Errc::DimensionMismatch, "matrix size must be β·n − 1");
    std::size_t h = a.rows() - top;
    RatMatrix B = a.block(top, top, h, h);
    if (!is_nilpotent(a))
        throw Error(Errc::NotNilpotent, "A is not nilpotent");
    SigmaTuple sigma = h > 0 ? sigma_from_kernel_sequence(kernel_dim_sequence(B), b, h / b) : SigmaTuple{};
    return match_class(a, sigma, kind);
}

HcxAAData normalize_v0(const HcxAAData& data)
{
    check_shapes(data);
    HcxAAData out = data;
    std::size_t h = 4 * (data.n - 1);
    if (h == 0 || is_zero(data.v0))
        return out;
    RatMatrix M = data.B - data.mu * RatMatrix::identity(h);
    if (solve_linear(M, data.v0)) {
        out.v0.assign(h, Rational(0));
        return out;
    }
    // W: quaternionic coordinate blocks, taken greedily in order, that are independent of Im(B - μI)
    std::vector<RatVector> span;
    for (std::size_t j = 0; j < h; ++j)
        span.push_back(M.col(j));
    std::size_t r = rank(M);
    std::vector<std::size_t> wblocks;
    for (std::size_t q = 0; q < data.n - 1 && r < h; ++q) {
        auto trial = span;
        for (std::size_t t = 0; t < 4; ++t)
            trial.push_back(unit_vector(h, 4 * q + t));
        RatMatrix tm(h, trial.size());
        for (std::size_t j = 0; j < trial.size(); ++j)
            for (std::size_t i = 0; i < h; ++i)
                tm(i, j) = trial[j][i];
        std::size_t nr = rank(tm);
        if (nr == r + 4) {
            span = trial;
            r = nr;
            wblocks.push_back(q);
        }
    }
    // v0 = M x0 + Σ y_k w_k
    RatMatrix sys(h, h + 4 * wblocks.size());
    sys.set_block(0, 0, M);
    for (std::size_t k = 0; k < wblocks.size(); ++k)
        for (std::size_t t = 0; t < 4; ++t)
            sys(4 * wblocks[k] + t, h + 4 * k + t) = 1;
    auto sol = solve_linear(sys, data.v0);
    if (!sol)
        throw Error(Errc::InvalidParams, "complement does not span the quotient");
    out.v0.assign(h, Rational(0));
    for (std::size_t k = 0; k < wblocks.size(); ++k)
        for (std::size_t t = 0; t < 4; ++t)
            out.v0[4 * wblocks[k] + t] = (*sol)[h + 4 * k + t];
    return out;
}

AdmissibilityVerdict admissible(const JordanData& jd, StructureKind kind)
{
    jd.validate();
    const std::size_t b = beta(kind), top = b - 1;
    if ((jd.dimension() + 1) % b != 0)
        throw Error(Errc::DimensionMismatch, "dimension " + std::to_string(jd.dimension()) + " is not ≡ " +
                                                 std::to_string(top) + " (mod " + std::to_string(b) + ")");
    const auto& P = jd.parts;
    const std::size_t k = P.size();
    auto all_zero_except = [&](std::size_t skip1, std::size_t skip2) {
        for (std::size_t i = 0; i < k; ++i)
            if (i != skip1 && i != skip2 && P[i].second % b != 0)
                return false;
        return true;
    };
    const std::size_t none = static_cast<std::size_t>(-1);

    AdmissibilityVerdict v;
    SigmaTuple sigma;
    std::size_t ell = 0;
    auto add = [&](std::size_t m, std::size_t p) {
        if (p == 0)
            return;
        sigma.m.push_back(m);
        sigma.p.push_back(p);
    };

    if (all_zero_except(none, none) && jd.d % b == top) {
        v.condition = AdmissibleCondition::CondII;
        for (auto& [n, q] : P)
            add(n, q / b);
        sigma.s = (jd.d - top) / b;
        ell = 0;
    } else if (k >= 1 && P[k - 1].first == 2 && P[k - 1].second % b == top && jd.d % b == 1 && all_zero_except(k - 1, none)) {
        v.condition = AdmissibleCondition::CondI;
        for (std::size_t i = 0; i + 1 < k; ++i)
            add(P[i].first, P[i].second / b);
        add(2, (P[k - 1].second - top) / b);
        sigma.s = (jd.d + top) / b;
        ell = sigma.m.size() + 1;
    } else if (jd.d % b == 0) {
        for (std::size_t t = 1; t < k && !v.condition; ++t) {
            if (P[t - 1].first == P[t].first + 1 && P[t - 1].second % b == top && P[t].second % b == 1 &&
                all_zero_except(t - 1, t)) {
                v.condition = AdmissibleCondition::CondIII;
                v.t = t + 1;
                for (std::size_t i = 0; i < k; ++i) {
                    if (i + 1 == t)
                        add(P[i].first, (P[i].second - top) / b);
                    else if (i == t) {
                        add(P[i].first, (P[i].second + top) / b);
                        ell = sigma.m.size();
                    } else
                        add(P[i].first, P[i].second / b);
                }
                sigma.s = jd.d / b;
            }
        }
    }
    if (!v.condition)
        return v;
    sigma.r = sigma.m.size();
    v.admissible = true;
    v.witness_sigma = sigma;
    v.witness_ell = ell;
    v.witness = canonical_matrix(sigma, ell, kind).matrix;
    return v;
}

std::vector<SigmaTuple> enumerate_sigma(std::size_t q)
{
    std::vector<SigmaTuple> out;
    SigmaTuple cur;
    // choose block sizes in decreasing order; whatever is left over becomes s
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t maxm, std::size_t left) {
        SigmaTuple done = cur;
        done.s = left;
        done.r = done.m.size();
        out.push_back(done);
        for (std::size_t m = std::min(maxm, left); m >= 2; --m)
            for (std::size_t p = 1; p * m <= left; ++p) {
                cur.m.push_back(m);
                cur.p.push_back(p);
                rec(m - 1, left - p * m);
                cur.m.pop_back();
                cur.p.pop_back();
            }
    };
    rec(q, q);
    return out;
}

ClassCount count_classes(std::size_t n, StructureKind kind)
{
    if (n < 2)
        throw Error(Errc::InvalidParams, "count_classes needs n ≥ 2");
    ClassCount cc;
    for (auto& sigma : enumerate_sigma(n - 1)) {
        ClassCountEntry e;
        e.sigma = sigma;
        // B = 0 contributes only N; the abelian algebra (ell = 0) is not counted
        std::size_t first = sigma.r == 0 ? 1 : 0;
        for (std::size_t ell = first; ell <= max_ell(sigma); ++ell) {
            e.ells.push_back(ell);
            e.steps.push_back(nilpotency_index(canonical_matrix(sigma, ell, kind).matrix));
            if (e.steps.back() == 2)
                ++cc.two_step;
        }
        e.classes = e.ells.size();
        cc.total += e.classes;
        cc.breakdown.push_back(std::move(e));
    }
    return cc;
}

}  // namespace haal
