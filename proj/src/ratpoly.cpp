#include "haal/ratpoly.hpp"

#include "haal/errors.hpp"

#include <algorithm>
#include <sstream>

namespace haal {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const Rational& c)
{
    if (sgn(c) != 0)
        c_.push_back(c);
}

RatPoly RatPoly::x_power(unsigned k)
{
    std::vector<Rational> c(k + 1);
    c[k] = 1;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::from_ints(std::initializer_list<long> ascending)
{
    std::vector<Rational> c;
    for (long v : ascending)
        c.emplace_back(v);
    return RatPoly(std::move(c));
}

void RatPoly::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

Rational RatPoly::eval(const Rational& x) const
{
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

RatMatrix RatPoly::eval(const RatMatrix& m) const
{
    RatMatrix r(m.rows(), m.cols());
    RatMatrix id = RatMatrix::identity(m.rows());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * m + (*it) * id;
    return r;
}

RatPoly RatPoly::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k)
        d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const
{
    if (c_.empty())
        return *this;
    std::vector<Rational> c = c_;
    Rational l = c.back();
    for (auto& x : c)
        x /= l;
    return RatPoly(std::move(c));
}

std::string RatPoly::str(char var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& a = c_[k];
        if (sgn(a) == 0)
            continue;
        Rational mag = abs(a);
        if (!first)
            os << (sgn(a) < 0 ? " - " : " + ");
        else if (sgn(a) < 0)
            os << "-";
        bool unit = mag == 1;
        if (!unit || k == 0)
            os << mag.get_str();
        if (k >= 1)
            os << var;
        if (k >= 2)
            os << '^' << k;
        first = false;
    }
    return os.str();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b)
{
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(k) + b.coeff(k);
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a) { return RatPoly(Rational(-1)) * a; }
RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return RatPoly();
    std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return RatPoly(std::move(c));
}

RatPoly poly_pow(const RatPoly& a, unsigned k)
{
    RatPoly r(Rational(1));
    for (unsigned i = 0; i < k; ++i)
        r = r * a;
    return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero())
        throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db)
        return {RatPoly(), a};
    std::vector<Rational> q(a.degree() - db + 1);
    const Rational& lb = b.lead();
    for (int k = a.degree(); k >= db; --k) {
        Rational f = r[k] / lb;
        q[k - db] = f;
        if (sgn(f) == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            r[k - db + j] -= f * b.coeffs()[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly gcd(RatPoly a, RatPoly b)
{
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& a)
{
    std::vector<RatPoly> out;
    if (a.degree() <= 0)
        return out;
    RatPoly f = a.monic();
    RatPoly fp = f.derivative();
    RatPoly g = gcd(f, fp);
    RatPoly b = divmod(f, g).first;
    RatPoly c = divmod(fp, g).first;
    RatPoly d = c - b.derivative();
    while (b.degree() > 0) {
        RatPoly s = gcd(b, d);
        out.push_back(s);
        b = divmod(b, s).first;
        c = divmod(d, s).first;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0)
        out.pop_back();
    return out;
}

namespace {

std::vector<Integer> divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& a)
{
    std::vector<Rational> roots;
    if (a.degree() < 1)
        return roots;
    // strip x^k so the constant term is nonzero
    std::size_t low = 0;
    while (sgn(a.coeffs()[low]) == 0)
        ++low;
    if (low > 0)
        roots.emplace_back(0);
    // clear denominators
    Integer l = 1;
    for (auto& c : a.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    for (std::size_t k = low; k < a.coeffs().size(); ++k) {
        Rational v = a.coeffs()[k] * l;
        z.push_back(v.get_num());
    }
    RatPoly red(std::vector<Rational>(a.coeffs().begin() + low, a.coeffs().end()));
    for (auto& p : divisors(z.front()))
        for (auto& q : divisors(z.back()))
            for (int s : {1, -1}) {
                Rational r(p * s, q);
                r.canonicalize();
                if (sgn(red.eval(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace haal
