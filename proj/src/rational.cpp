#include "haal/rational.hpp"

#include "haal/errors.hpp"

#include <cctype>

namespace haal {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    bool neg = false;
    std::size_t off = text.size() - s.size();
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational q;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string_view::npos) {
        auto num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError(off, "malformed rational '" + std::string(text) + "'");
        Integer d{std::string(den)};
        if (d == 0)
            throw ParseError(off + slash + 1, "zero denominator");
        q = Rational(Integer(std::string(num)), d);
        q.canonicalize();
    } else if (dot != std::string_view::npos) {
        auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp))
            throw ParseError(off, "malformed decimal '" + std::string(text) + "'");
        Integer num(std::string(ip.empty() ? "0" : ip) + std::string(fp));
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        q = Rational(num, den);
        q.canonicalize();
    } else {
        if (!all_digits(s))
            throw ParseError(off, "malformed integer '" + std::string(text) + "'");
        q = Rational(Integer(std::string(s)));
    }
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

double to_double(const Rational& q)
{
    return q.get_d();
}

}  // namespace haal
