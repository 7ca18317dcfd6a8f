#include "hardcore/ratfunc.hpp"

#include <stdexcept>

namespace hardcore {

RatFunc::RatFunc(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize()
{
    if (num_.is_zero()) {
        den_ = RatPoly{Rational(1)};
        return;
    }
    RatPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFunc::evaluate(const Rational& x) const
{
    Rational d = den_.evaluate(x);
    if (d == 0)
        throw std::domain_error("rational function evaluated at a pole x=" + to_string(x));
    return num_.evaluate(x) / d;
}

RatFunc RatFunc::derivative() const
{
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::x_d_dx() const
{
    return RatFunc((num_.derivative() * den_ - num_ * den_.derivative()).shifted(1), den_ * den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.den_ == b.den_)
        return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a)
{
    RatFunc out = a;
    out.num_ = -out.num_;
    return out;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b)
{
    return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero())
        throw std::domain_error("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_pretty(std::string_view var) const
{
    if (den_ == RatPoly{Rational(1)})
        return hardcore::to_pretty(num_, var);
    return "(" + hardcore::to_pretty(num_, var) + ")/(" + hardcore::to_pretty(den_, var) + ")";
}

}  // namespace hardcore
