#pragma once

#include <string>

#include "hardcore/poly.hpp"

namespace hardcore {

/// Ratio of rational polynomials, kept gcd-reduced with a monic denominator so that
/// equality of values is equality of representations.
class RatFunc {
public:
    RatFunc() : num_(), den_{Rational(1)} {}
    RatFunc(RatPoly num, RatPoly den);
    explicit RatFunc(const RatPoly& p) : num_(p), den_{Rational(1)} {}
    explicit RatFunc(const IntPoly& p) : RatFunc(to_rat(p)) {}
    explicit RatFunc(const Rational& c) : num_{c}, den_{Rational(1)} {}

    static RatFunc ratio(const IntPoly& num, const IntPoly& den) { return RatFunc(to_rat(num), to_rat(den)); }

    const RatPoly& numerator() const { return num_; }
    const RatPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Throws std::domain_error at a pole.
    Rational evaluate(const Rational& x) const;

    RatFunc derivative() const;
    /// x * d/dx, the operator taking a log-partition density to occupancy and occupancy to variance.
    RatFunc x_d_dx() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// "(num)/(den)" in the variable `var`.
    std::string to_pretty(std::string_view var = "x") const;

private:
    void normalize();

    RatPoly num_;
    RatPoly den_;
};

inline RatFunc lambda_d_dlambda(const RatFunc& f) { return f.x_d_dx(); }

}  // namespace hardcore
