#include "haal/poly_tools.hpp"

#include "haal/errors.hpp"
#include "haal/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>

namespace haal {

namespace {

// Scale by a positive constant so the leading coefficient is ±1; signs are untouched.
RatPoly normalize_positive(const RatPoly& p)
{
    if (p.is_zero())
        return p;
    Rational l = abs(p.lead());
    std::vector<Rational> c = p.coeffs();
    for (auto& v : c)
        v /= l;
    return RatPoly(std::move(c));
}

std::vector<RatPoly> sturm_chain(const RatPoly& p)
{
    std::vector<RatPoly> chain{normalize_positive(p), normalize_positive(p.derivative())};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero())
            break;
        chain.push_back(normalize_positive(-r));
    }
    return chain;
}

int sign_at(const RatPoly& p, const Bound& x, bool right)
{
    if (x) {
        return sgn(p.eval(*x));
    }
    int s = sgn(p.lead());
    if (!right && p.degree() % 2 == 1)
        s = -s;
    return s;
}

std::size_t variations(const std::vector<RatPoly>& chain, const Bound& x, bool right)
{
    std::size_t v = 0;
    int last = 0;
    for (auto& q : chain) {
        int s = sign_at(q, x, right);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

RatPoly squarefree_part(const RatPoly& p)
{
    RatPoly g = gcd(p, p.derivative());
    return divmod(p, g).first;
}

}  // namespace

std::size_t sturm_count(const IntPoly& p, const Bound& lo, const Bound& hi)
{
    if (p.is_zero())
        throw Error(Errc::ZeroPolynomial, "Sturm count of the zero polynomial");
    if (p.degree() == 0)
        return 0;
    if (lo && hi && *lo >= *hi)
        return 0;
    auto chain = sturm_chain(squarefree_part(p.to_rat()));
    std::size_t a = variations(chain, lo, false), b = variations(chain, hi, true);
    return a >= b ? a - b : 0;
}

const char* delta_failure_name(DeltaFailure f)
{
    switch (f) {
    case DeltaFailure::Degree: return "Degree";
    case DeltaFailure::NotMonic: return "NotMonic";
    case DeltaFailure::ConstantTerm: return "ConstantTerm";
    case DeltaFailure::RootsNotRealDistinctPositive: return "RootsNotRealDistinctPositive";
    }
    return "?";
}

DeltaVerdict delta_check(const IntPoly& p)
{
    DeltaVerdict v;
    int n = p.degree();
    if (n < 2) {
        v.failed_condition = DeltaFailure::Degree;
        return v;
    }
    if (!p.is_monic()) {
        v.failed_condition = DeltaFailure::NotMonic;
        return v;
    }
    if (p.coeff(0) != (n % 2 == 0 ? 1 : -1)) {
        v.failed_condition = DeltaFailure::ConstantTerm;
        return v;
    }
    RatPoly g = gcd(p.to_rat(), p.derivative().to_rat());
    if (g.degree() > 0 || sturm_count(p, Rational(0), std::nullopt) != static_cast<std::size_t>(n)) {
        v.failed_condition = DeltaFailure::RootsNotRealDistinctPositive;
        return v;
    }
    v.member = true;
    v.in_delta_prime = p.eval(Integer(1)) != 0;
    return v;
}

Integer cubic_discriminant(const Integer& m, const Integer& n)
{
    return m * m * n * n - 4 * m * m * m - 4 * n * n * n + 18 * m * n - 27;
}

Integer resultant(const IntPoly& p, const IntPoly& q)
{
    if (p.is_zero() || q.is_zero())
        throw Error(Errc::ZeroPolynomial, "resultant with the zero polynomial");
    std::size_t m = p.degree(), n = q.degree();
    if (m + n == 0)
        return 1;
    std::size_t s = m + n;
    RatMatrix syl(s, s);
    // rows 0..n-1 carry shifted copies of p, rows n..n+m-1 shifted copies of q (descending powers)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k)
            syl(i, i + k) = Rational(p.coeff(m - k));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k)
            syl(n + i, i + k) = Rational(q.coeff(n - k));
    return determinant(syl).get_num();
}

Integer discriminant(const IntPoly& p)
{
    long n = p.degree();
    Integer r = resultant(p, p.derivative());
    Integer d = r / p.lead();
    if ((n * (n - 1) / 2) % 2 == 1)
        d = -d;
    return d;
}

std::optional<IntPoly> delta_product(const IntPoly& p, const IntPoly& q)
{
    if (!delta_check(p).member)
        throw Error(Errc::NotDeltaMember, p.str() + " is not in Δ");
    if (!delta_check(q).member)
        throw Error(Errc::NotDeltaMember, q.str() + " is not in Δ");
    if (resultant(p, q) == 0)
        return std::nullopt;
    return p * q;
}

IntPoly reciprocal(const IntPoly& p)
{
    if (p.is_zero() || abs(p.coeff(0)) != 1)
        throw Error(Errc::NonUnitConstantTerm, "reciprocal needs p(0) = ±1, got " + p.str());
    std::vector<Integer> c(p.coeffs().rbegin(), p.coeffs().rend());
    IntPoly r(std::move(c));
    if (p.degree() % 2 == 1)
        r = -r;
    if (r.lead() < 0)
        r = -r;
    return r;
}

namespace {

// Newton: power sums s_1..s_K from the monic coefficients.
std::vector<Integer> power_sums(const IntPoly& p, std::size_t K)
{
    std::size_t n = p.degree();
    // e_j with p = Σ (-1)^j e_j x^{n-j}
    std::vector<Integer> e(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        e[j] = (j % 2 ? -1 : 1) * p.coeff(n - j);
    std::vector<Integer> s(K + 1, Integer(0));
    for (std::size_t k = 1; k <= K; ++k) {
        Integer acc = 0;
        for (std::size_t j = 1; j < k && j <= n; ++j)
            acc += ((j - 1) % 2 ? -1 : 1) * e[j] * s[k - j];
        if (k <= n)
            acc += ((k - 1) % 2 ? -1 : 1) * Integer(static_cast<unsigned long>(k)) * e[k];
        s[k] = acc;
    }
    return s;
}

// Inverse Newton: monic degree-n polynomial with the given power sums s_1..s_n.
IntPoly from_power_sums(const std::vector<Integer>& s, std::size_t n)
{
    std::vector<Integer> e(n + 1, Integer(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            acc += ((j - 1) % 2 ? -1 : 1) * e[k - j] * s[j];
        if (acc % static_cast<unsigned long>(k) != 0)
            throw Error(Errc::InvalidParams, "power sums are not those of an integer polynomial");
        e[k] = acc / static_cast<unsigned long>(k);
    }
    std::vector<Integer> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        c[n - j] = (j % 2 ? -1 : 1) * e[j];
    return IntPoly(std::move(c));
}

}  // namespace

IntPoly power_poly(const IntPoly& p, long k)
{
    if (!p.is_monic())
        throw Error(Errc::NonMonic, "power_poly needs a monic polynomial, got " + p.str());
    if (abs(p.coeff(0)) != 1)
        throw Error(Errc::NonUnitConstantTerm, "power_poly needs p(0) = ±1, got " + p.str());
    if (k == 0)
        throw Error(Errc::InvalidParams, "power exponent must be nonzero");
    if (k < 0)
        return power_poly(reciprocal(p), -k);
    std::size_t n = p.degree();
    auto s = power_sums(p, n * static_cast<std::size_t>(k));
    std::vector<Integer> sk(n + 1, Integer(0));
    for (std::size_t j = 1; j <= n; ++j)
        sk[j] = s[j * static_cast<std::size_t>(k)];
    return from_power_sums(sk, n);
}

std::vector<Integer> alternating_magnitudes(const IntPoly& p)
{
    int n = p.degree();
    if (n < 1 || !p.is_monic())
        throw Error(Errc::SignPatternViolation, "expected a monic polynomial of positive degree, got " + p.str());
    std::vector<Integer> m(n + 1);
    for (int j = 0; j <= n; ++j) {
        m[j] = ((n - j) % 2 ? -1 : 1) * p.coeff(j);
        if (m[j] < 0)
            throw Error(Errc::SignPatternViolation,
                        "coefficient of x^" + std::to_string(j) + " in " + p.str() + " breaks the alternating sign pattern");
    }
    if (m[0] != 1)
        throw Error(Errc::SignPatternViolation, "constant term of " + p.str() + " is not (-1)^n");
    return m;
}

bool binom_necessary(const IntPoly& p)
{
    auto m = alternating_magnitudes(p);
    std::size_t n = m.size() - 1;
    for (std::size_t j = 1; j < n; ++j) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), n, j);
        if (m[j] <= c)
            return false;
    }
    return true;
}

bool kurtz_sufficient(const IntPoly& p)
{
    auto m = alternating_magnitudes(p);
    std::size_t n = m.size() - 1;
    for (std::size_t j = 0; j <= n; ++j)
        if (m[j] == 0)
            throw Error(Errc::SignPatternViolation, "zero coefficient in " + p.str());
    for (std::size_t j = 1; j < n; ++j)
        if (m[j] * m[j] - 4 * m[j - 1] * m[j + 1] <= 0)
            return false;
    return true;
}

OddPart odd_multiplicity_part(const IntPoly& p)
{
    if (!p.is_monic())
        throw Error(Errc::NonMonic, "odd_multiplicity_part needs a monic polynomial");
    if (abs(p.coeff(0)) != 1)
        throw Error(Errc::NonUnitConstantTerm, "odd_multiplicity_part needs |p(0)| = 1, got " + p.str());
    auto parts = squarefree_decomposition(p.to_rat());
    RatPoly prod(Rational(1));
    for (std::size_t i = 0; i < parts.size(); i += 2)
        prod = prod * parts[i];
    OddPart out;
    out.part = IntPoly::from_rat(prod.monic());
    out.real_roots = rational_roots(prod);
    out.real_root_count = out.part.degree() > 0 ? sturm_count(out.part, std::nullopt, std::nullopt) : 0;
    const IntPoly& q = out.part;
    if (q.degree() == 1) {
        out.unit_root_property = abs(q.coeff(0)) == 1;
    } else if (q.degree() == 2 && q.coeff(1) * q.coeff(1) - 4 * q.coeff(0) < 0) {
        out.unit_root_property = q.coeff(0) == 1;
    } else {
        // every real odd root must be ±1
        bool ok = true;
        std::size_t units = 0;
        for (auto& r : out.real_roots) {
            if (abs(r) == 1)
                ++units;
            else
                ok = false;
        }
        out.unit_root_property = ok && units == out.real_root_count;
    }
    return out;
}

IntPoly build_delta_prime(std::size_t n)
{
    if (n < 2)
        throw Error(Errc::InvalidParams, "Δ'_n needs n ≥ 2");
    IntPoly p{1};
    long m = 3;
    if (n % 2 == 1) {
        p = f_poly(6, 7);
        m = 4;  // h_3 shares no root with f_{6,7} either, but the construction starts at 4
    }
    for (std::size_t k = (n % 2 == 1 ? 3 : 0); k < n; k += 2)
        p = p * h_poly(m++);
    auto v = delta_check(p);
    if (!v.in_delta_prime)
        throw Error(Errc::InvalidParams, "constructed polynomial " + p.str() + " failed the Δ' check");
    return p;
}

double default_precision()
{
    if (const char* s = std::getenv("HAAL_PRECISION")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && *end == '\0' && v > 0 && std::isfinite(v))
            return v;
    }
    return 1e-12;
}

std::vector<double> real_roots(const IntPoly& p, double precision)
{
    std::vector<double> out;
    if (p.degree() < 1)
        return out;
    RatPoly sq = squarefree_part(p.to_rat());
    auto chain = sturm_chain(sq);
    auto count = [&](const Rational& lo, const Rational& hi) {
        return variations(chain, lo, false) - variations(chain, hi, true);
    };
    // Cauchy bound
    Rational bound = 0;
    for (auto& c : sq.coeffs())
        bound = std::max(bound, Rational(abs(c / sq.lead())));
    bound += 1;
    Rational eps = Rational(precision);
    std::function<void(Rational, Rational, std::size_t)> isolate = [&](Rational lo, Rational hi, std::size_t k) {
        if (k == 0)
            return;
        if (k == 1) {
            // refine by sign bisection; root lies in (lo, hi]
            if (sgn(sq.eval(hi)) == 0) {
                out.push_back(hi.get_d());
                return;
            }
            int shi = sgn(sq.eval(hi));
            while (hi - lo > eps) {
                Rational mid = (lo + hi) / 2;
                int sm = sgn(sq.eval(mid));
                if (sm == 0) {
                    lo = hi = mid;
                    break;
                }
                if (sm == shi)
                    hi = mid;
                else
                    lo = mid;
            }
            out.push_back(Rational((lo + hi) / 2).get_d());
            return;
        }
        Rational mid = (lo + hi) / 2;
        std::size_t left = count(lo, mid);
        isolate(lo, mid, left);
        isolate(mid, hi, k - left);
    };
    isolate(-bound, bound, count(-bound, bound));
    return out;
}

std::vector<IntPoly> enumerate_delta(std::size_t n, long bound, std::size_t shard, std::size_t shards)
{
    if (shards == 0 || shard >= shards)
        throw Error(Errc::InvalidParams, "shard index out of range");
    std::vector<IntPoly> out;
    if (n < 2)
        return out;
    std::vector<long> m(n + 1, 0);
    m[0] = m[n] = 1;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == n) {
            std::vector<Integer> c(n + 1);
            for (std::size_t i = 0; i <= n; ++i)
                c[i] = ((n - i) % 2 ? -1 : 1) * m[i];
            IntPoly p(std::move(c));
            if (delta_check(p).member)
                out.push_back(p);
            return;
        }
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), n, j);
        for (long v = b.get_si() + 1; v <= bound; ++v) {
            if (j == 1 && static_cast<std::size_t>(v - b.get_si() - 1) % shards != shard)
                continue;
            m[j] = v;
            rec(j + 1);
        }
    };
    rec(1);
    return out;
}

RatMatrix companion_matrix(const IntPoly& p)
{
    if (!p.is_monic() || p.degree() < 1)
        throw Error(Errc::NonMonic, "companion matrix needs a monic polynomial of positive degree");
    const std::size_t n = static_cast<std::size_t>(p.degree());
    RatMatrix c(n, n);
    for (std::size_t i = 1; i < n; ++i)
        c(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i)
        c(i, n - 1) = Rational(-p.coeff(i));
    return c;
}

}  // namespace haal
