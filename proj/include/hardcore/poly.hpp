#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "hardcore/rational.hpp"

namespace hardcore {

/// Dense univariate polynomial sum_k c_k x^k in canonical form (no trailing zero
/// coefficients; the zero polynomial has no coefficients).
template <class Coeff>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Poly(const Coeff& constant) : c_{constant} { trim(); }

    static Poly monomial(const Coeff& c, std::size_t k)
    {
        std::vector<Coeff> v(k + 1, Coeff(0));
        v[k] = c;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(Coeff(1), 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    Coeff operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
    const Coeff& leading() const { return c_.back(); }
    const std::vector<Coeff>& coefficients() const { return c_; }

    /// Coefficients padded with zeros to exactly `length` entries (length >= size()).
    std::vector<Coeff> padded(std::size_t length) const
    {
        std::vector<Coeff> v = c_;
        v.resize(std::max(length, c_.size()), Coeff(0));
        return v;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Coeff& s)
    {
        for (auto& c : c_)
            c *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a)
    {
        for (auto& c : a.c_)
            c = -c;
        return a;
    }
    friend Poly operator*(Poly a, const Coeff& s) { return a *= s; }
    friend Poly operator*(const Coeff& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const
    {
        if (c_.size() <= 1)
            return Poly();
        std::vector<Coeff> out(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            out[k - 1] = c_[k] * Coeff(static_cast<unsigned long>(k));
        return Poly(std::move(out));
    }

    /// Multiplies by x^k.
    Poly shifted(std::size_t k) const
    {
        if (is_zero())
            return Poly();
        std::vector<Coeff> out(k, Coeff(0));
        out.insert(out.end(), c_.begin(), c_.end());
        return Poly(std::move(out));
    }

    Poly pow(unsigned e) const
    {
        Poly result{Coeff(1)}, base = *this;
        while (e) {
            if (e & 1u)
                result *= base;
            e >>= 1;
            if (e)
                base *= base;
        }
        return result;
    }

    /// p(q(x)).
    Poly compose(const Poly& q) const
    {
        Poly out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            out = out * q + Poly(*it);
        return out;
    }

    template <class X>
    auto evaluate(const X& x) const
    {
        using R = std::conditional_t<std::is_same_v<X, Rational> || std::is_same_v<Coeff, Rational>, Rational, Coeff>;
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    /// Sum of coefficients, i.e. the value at 1.
    Coeff coefficient_sum() const
    {
        Coeff s(0);
        for (const auto& c : c_)
            s += c;
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rat(const IntPoly& p);

/// Content-free integer polynomial with positive leading coefficient, plus the signed
/// rational factor such that p = scale * primitive.
std::pair<IntPoly, Rational> primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// Euclidean division over Q. Throws on division by the zero polynomial.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// a / b when b divides a exactly; throws otherwise.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);
/// Monic gcd over Q; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly make_monic(const RatPoly& p);
/// p / gcd(p, p'), monic.
RatPoly square_free_part(const RatPoly& p);

/// Comma-separated coefficients from degree 0 upward, e.g. "1,9,30,44,24".
std::string to_text(const IntPoly& p);
std::string to_text(const RatPoly& p);
IntPoly parse_int_poly(std::string_view text);
RatPoly parse_rat_poly(std::string_view text);

/// Human-readable form, highest degree first: "3x^3 + 2x - 1".
std::string to_pretty(const IntPoly& p, std::string_view var = "x");
std::string to_pretty(const RatPoly& p, std::string_view var = "x");

}  // namespace hardcore
