#include "hardcore/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hardcore {

namespace {

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_text(s))
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

Rational parse_decimal(std::string_view s)
{
    long exponent = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string_view::npos) {
        exponent = parse_integer(s.substr(e + 1)).get_si();
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string digits(s.substr(0, dot));
    if (dot != std::string_view::npos) {
        std::string_view frac = s.substr(dot + 1);
        digits += frac;
        exponent -= static_cast<long>(frac.size());
    }
    if (digits.empty() || !is_integer_text(digits))
        throw std::invalid_argument("bad number '" + std::string(s) + "'");
    Rational value(parse_integer(digits));
    value *= pow(Rational(10), exponent);
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (is_integer_text(text))
        return Rational(parse_integer(text));
    return parse_decimal(text);
}

std::string to_string(const Integer& x)
{
    return x.get_str();
}

std::string to_string(const Rational& x)
{
    return x.get_str();
}

Integer pow(const Integer& base, unsigned long exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw std::domain_error("zero to a negative power");
        return pow(Rational(1 / base), -exponent);
    }
    auto e = static_cast<unsigned long>(exponent);
    Rational out(pow(base.get_num(), e), pow(base.get_den(), e));
    return out;
}

Integer floor(const Rational& x)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

Integer ceil(const Rational& x)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

Rational simplest_in(const Rational& lo, const Rational& hi)
{
    if (lo > hi)
        throw std::invalid_argument("simplest_in: empty interval");
    if (lo <= 0 && hi >= 0)
        return Rational(0);
    if (hi < 0)
        return -simplest_in(-hi, -lo);
    // Continued-fraction descent on 0 < lo <= hi.
    Integer c = ceil(lo);
    if (c <= hi)
        return Rational(c);
    Integer f = floor(lo);
    Rational inner = simplest_in(1 / (hi - f), 1 / (lo - f));
    return Rational(f) + 1 / inner;
}

}  // namespace hardcore
