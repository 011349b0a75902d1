#include "haal/intpoly.hpp"

#include "haal/errors.hpp"

#include <cctype>
#include <sstream>

namespace haal {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending)
{
    for (long v : ascending)
        c_.emplace_back(v);
    trim();
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPoly IntPoly::x_power(unsigned k)
{
    std::vector<Integer> c(k + 1, Integer(0));
    c[k] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::from_rat(const RatPoly& p)
{
    std::vector<Integer> c;
    for (auto& q : p.coeffs()) {
        if (!is_integer(q))
            throw Error(Errc::InvalidParams, "polynomial has a non-integer coefficient " + to_string(q));
        c.push_back(q.get_num());
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::primitive_of(const RatPoly& p)
{
    if (p.is_zero())
        return {};
    Integer l = 1;
    for (auto& q : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> c;
    Integer g = 0;
    for (auto& q : p.coeffs()) {
        Rational s = q * l;
        c.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.back().get_mpz_t());
    }
    for (auto& v : c)
        v /= g;
    return IntPoly(std::move(c));
}

Integer IntPoly::eval(const Integer& x) const
{
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

Rational IntPoly::eval(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + Rational(*it);
    return r;
}

double IntPoly::eval(double x) const
{
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + it->get_d();
    return r;
}

IntPoly IntPoly::derivative() const
{
    std::vector<Integer> d;
    for (std::size_t k = 1; k < c_.size(); ++k)
        d.push_back(c_[k] * Integer(static_cast<unsigned long>(k)));
    return IntPoly(std::move(d));
}

RatPoly IntPoly::to_rat() const
{
    std::vector<Rational> c;
    for (auto& v : c_)
        c.emplace_back(v);
    return RatPoly(std::move(c));
}

std::string IntPoly::str() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Integer& v = c_[k];
        if (v == 0)
            continue;
        Integer mag = abs(v);
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1)
            os << mag.get_str();
        if (k >= 1)
            os << "x";
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

bool operator<(const IntPoly& a, const IntPoly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
        if (a.c_[k] != b.c_[k])
            return a.c_[k] < b.c_[k];
    return false;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> c(std::max(a.coeffs().size(), b.coeffs().size()), Integer(0));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(k) + b.coeff(k);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a)
{
    std::vector<Integer> c = a.coeffs();
    for (auto& v : c)
        v = -v;
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> c(a.coeffs().size() + b.coeffs().size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntPoly(std::move(c));
}

IntPoly operator*(const Integer& s, const IntPoly& a)
{
    std::vector<Integer> c = a.coeffs();
    for (auto& v : c)
        v *= s;
    return IntPoly(std::move(c));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero())
        throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
    auto [q, r] = divmod(a.to_rat(), b.to_rat());
    if (!r.is_zero())
        throw Error(Errc::InvalidParams, b.str() + " does not divide " + a.str());
    return IntPoly::from_rat(q);
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    IntPoly run()
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '[')
            return array();
        if (pos_ >= s_.size())
            throw ParseError(pos_, "empty polynomial");
        std::vector<Integer> c;
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size())
                break;
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError(pos_, std::string("expected '+' or '-' but found '") + s_[pos_] + "'");
            }
            first = false;
            term(sign, c);
        }
        return IntPoly(std::move(c));
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    Integer number()
    {
        std::size_t start = pos_;
        while (digit())
            ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    void term(int sign, std::vector<Integer>& c)
    {
        Integer coef = 1;
        bool have_coef = false;
        if (digit()) {
            coef = number();
            have_coef = true;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip();
                if (pos_ >= s_.size() || s_[pos_] != 'x')
                    throw ParseError(pos_, "expected 'x' after '*'");
            }
        }
        unsigned long k = 0;
        if (pos_ < s_.size() && s_[pos_] == 'x') {
            ++pos_;
            k = 1;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip();
                if (!digit())
                    throw ParseError(pos_, "expected an exponent after '^'");
                std::size_t at = pos_;
                Integer e = number();
                if (!e.fits_ulong_p() || e > 100000)
                    throw ParseError(at, "exponent too large");
                k = e.get_ui();
            }
        } else if (!have_coef) {
            if (pos_ >= s_.size())
                throw ParseError(pos_, "dangling sign at end of input");
            throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
        }
        skip();
        if (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-')
            throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
        if (c.size() <= k)
            c.resize(k + 1, Integer(0));
        c[k] += sign * coef;
    }

    IntPoly array()
    {
        ++pos_;
        std::vector<Integer> c;
        while (true) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == ']' && c.empty()) {
                ++pos_;
                break;
            }
            int sign = 1;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            }
            if (!digit())
                throw ParseError(pos_, "expected an integer coefficient");
            c.push_back(sign * number());
            skip();
            if (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (pos_ < s_.size() && s_[pos_] == ']') {
                ++pos_;
                break;
            }
            throw ParseError(pos_, "expected ',' or ']'");
        }
        skip();
        if (pos_ != s_.size())
            throw ParseError(pos_, "trailing characters after coefficient array");
        return IntPoly(std::move(c));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).run(); }

IntPoly h_poly(long m) { return IntPoly{1, -m, 1}; }
IntPoly f_poly(long m, long n) { return IntPoly{-1, n, -m, 1}; }

}  // namespace haal
