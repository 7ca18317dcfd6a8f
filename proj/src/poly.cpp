#include "hardcore/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hardcore {

namespace {

// Integer pseudo-remainder of a by b, reduced to its primitive part.
IntPoly primitive_prem(IntPoly a, const IntPoly& b)
{
    const Integer& lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        auto shift = static_cast<std::size_t>(a.degree() - b.degree());
        Integer la = a.leading();
        a = a * lb - b.shifted(shift) * la;
    }
    return primitive_part(a);
}

template <class Coeff>
std::string text_of(const Poly<Coeff>& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k)
            out += ',';
        out += to_string(p[k]);
    }
    return out;
}

template <class Coeff>
std::string pretty_of(const Poly<Coeff>& p, std::string_view var)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Coeff c = p[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        bool unit = c == 1;
        if (!unit || k == 0)
            out += to_string(c);
        if (k >= 1)
            out += std::string(var);
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

std::vector<std::string> split_commas(std::string_view text)
{
    std::vector<std::string> out;
    while (true) {
        auto comma = text.find(',');
        out.emplace_back(text.substr(0, comma));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

RatPoly to_rat(const IntPoly& p)
{
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& a : p.coefficients())
        c.emplace_back(a);
    return RatPoly(std::move(c));
}

std::pair<IntPoly, Rational> primitive_part(const RatPoly& p)
{
    if (p.is_zero())
        return {IntPoly(), Rational(1)};
    Integer den_lcm = 1;
    for (const auto& c : p.coefficients())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(p.size());
    for (const auto& c : p.coefficients())
        ints.push_back(c.get_num() * (den_lcm / c.get_den()));
    IntPoly raw(std::move(ints));
    IntPoly prim = primitive_part(raw);
    // p = raw / den_lcm and raw = content * prim (sign folded into content).
    Rational scale(raw.leading(), prim.leading());
    scale /= den_lcm;
    return {prim, scale};
}

IntPoly primitive_part(const IntPoly& p)
{
    if (p.is_zero())
        return p;
    Integer g = 0;
    for (const auto& c : p.coefficients())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (p.leading() < 0)
        g = -g;
    std::vector<Integer> out;
    out.reserve(p.size());
    for (const auto& c : p.coefficients())
        out.push_back(c / g);
    return IntPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {RatPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
    std::vector<Rational> r = a.coefficients();
    const Rational& lb = b.leading();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = r[k + db] / lb;
        q[k] = f;
        if (f == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            r[k + j] -= f * b[j];
    }
    r.resize(db);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

RatPoly make_monic(const RatPoly& p)
{
    if (p.is_zero())
        return p;
    return p * Rational(1 / p.leading());
}

RatPoly gcd(const RatPoly& a, const RatPoly& b)
{
    if (a.is_zero())
        return make_monic(b);
    if (b.is_zero())
        return make_monic(a);
    IntPoly x = primitive_part(a).first, y = primitive_part(b).first;
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = primitive_prem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(to_rat(x));
}

RatPoly square_free_part(const RatPoly& p)
{
    if (p.is_zero())
        return p;
    return make_monic(exact_div(p, gcd(p, p.derivative())));
}

std::string to_text(const IntPoly& p) { return text_of(p); }
std::string to_text(const RatPoly& p) { return text_of(p); }
std::string to_pretty(const IntPoly& p, std::string_view var) { return pretty_of(p, var); }
std::string to_pretty(const RatPoly& p, std::string_view var) { return pretty_of(p, var); }

IntPoly parse_int_poly(std::string_view text)
{
    std::vector<Integer> c;
    for (const auto& field : split_commas(text)) {
        Rational r = parse_rational(field);
        if (r.get_den() != 1)
            throw std::invalid_argument("expected integer coefficient, got '" + field + "'");
        c.push_back(r.get_num());
    }
    return IntPoly(std::move(c));
}

RatPoly parse_rat_poly(std::string_view text)
{
    std::vector<Rational> c;
    for (const auto& field : split_commas(text))
        c.push_back(parse_rational(field));
    return RatPoly(std::move(c));
}

}  // namespace hardcore
