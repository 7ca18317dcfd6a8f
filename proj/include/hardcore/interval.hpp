#pragma once

#include <string>

#include "hardcore/poly.hpp"
#include "hardcore/rational.hpp"

namespace hardcore {

/// Closed interval [lo, hi] with exact rational endpoints.
///
/// Every operation returns an enclosure of the exact image. Transcendental functions
/// round their endpoints outward to a dyadic grid so that sizes stay bounded.
class RationalInterval {
public:
    RationalInterval() = default;
    explicit RationalInterval(const Rational& x) : lo_(x), hi_(x) {}
    RationalInterval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RationalInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const RationalInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }

    /// Endpoints moved outward to multiples of 2^-bits.
    RationalInterval rounded(unsigned bits) const;

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator-(const RationalInterval& a);
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
    /// Throws std::domain_error if b contains zero.
    friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);
    RationalInterval pow(unsigned e) const;

    bool operator==(const RationalInterval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

    std::string to_string() const;
    /// Decimal rendering of both endpoints with `digits` significant digits (display only).
    std::string to_decimal(int digits = 20) const;

private:
    Rational lo_{0};
    Rational hi_{0};
};

/// Decimal rendering with `digits` significant digits (display only).
std::string to_decimal(const Rational& x, int digits = 20);

/// Number of binary digits needed so that 2^-bits <= tol.
unsigned bits_for_tolerance(const Rational& tol);

/// Default lower limit for tolerance refinement in certified comparisons (1e-30).
Rational tolerance_floor();

RationalInterval log_interval(const Rational& x, const Rational& tol);
RationalInterval log1p_interval(const Rational& x, const Rational& tol);
RationalInterval exp_interval(const Rational& x, const Rational& tol);
/// Principal branch W on [0, inf), certified by interval evaluation of w*e^w at the endpoints.
RationalInterval lambert_w_interval(const Rational& x, const Rational& tol);
/// W(x)/x over every x in a positive interval (decreasing, limit 1 at 0).
RationalInterval lambert_w_over_x_interval(const RationalInterval& x, const Rational& tol);
/// h(x) = -x log x - (1-x) log(1-x), with h(0) = h(1) = 0.
RationalInterval entropy_interval(const Rational& x, const Rational& tol);
/// (1/n) log Z(lambda).
RationalInterval free_energy_interval(const IntPoly& z, int n, const Rational& lambda, const Rational& tol);

/// Monotone-increasing lift of log to an interval with positive endpoints.
RationalInterval log_interval(const RationalInterval& x, const Rational& tol);

}  // namespace hardcore
