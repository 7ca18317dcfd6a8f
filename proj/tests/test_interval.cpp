#include <doctest.h>

#include <cmath>

#include "hardcore/interval.hpp"

using namespace hardcore;

namespace {

Rational q(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

Rational tol(int digits)
{
    return pow(Rational(1, 10), digits);
}

// Decimal string constant as an exact rational.
Rational dec(const char* s)
{
    return parse_rational(s);
}

bool near(const RationalInterval& x, const Rational& value, const Rational& slack)
{
    return x.lo() - slack <= value && value <= x.hi() + slack;
}

}  // namespace

TEST_CASE("interval arithmetic encloses exact results")
{
    RationalInterval a(q(1, 3), q(1, 2)), b(Rational(-1), Rational(2));
    CHECK((a + b) == RationalInterval(q(-2, 3), q(5, 2)));
    CHECK((a * b) == RationalInterval(q(-1, 2), Rational(1)));
    CHECK(b.pow(2) == RationalInterval(Rational(0), Rational(4)));
    CHECK_THROWS_AS(a / b, std::domain_error);
    CHECK((RationalInterval(Rational(1)) / a) == RationalInterval(Rational(2), Rational(3)));
    RationalInterval r = RationalInterval(q(1, 3)).rounded(10);
    CHECK(r.contains(q(1, 3)));
    CHECK(r.width() <= q(1, 512));
}

TEST_CASE("logarithm enclosures")
{
    // ln 2 to 36 digits.
    Rational ln2 = dec("0.693147180559945309417232121458176568");
    RationalInterval l = log_interval(Rational(2), tol(30));
    CHECK(l.width() <= tol(30));
    CHECK(near(l, ln2, tol(35)));
    CHECK(log_interval(Rational(1), tol(20)).contains(Rational(0)));
    for (const Rational& x : {q(1, 1000), q(7, 5), Rational(1000), q(123456, 7)}) {
        RationalInterval e = log_interval(x, tol(25));
        CHECK(e.width() <= tol(25));
        CHECK(std::abs(e.midpoint().get_d() - std::log(x.get_d())) < 1e-13);
    }
    RationalInterval l1p = log1p_interval(q(1, 100), tol(25));
    CHECK(std::abs(l1p.midpoint().get_d() - std::log1p(0.01)) < 1e-16);
    CHECK_THROWS(log_interval(Rational(0), tol(10)));
}

TEST_CASE("exponential enclosures")
{
    Rational e = dec("2.718281828459045235360287471352662497");
    RationalInterval x = exp_interval(Rational(1), tol(30));
    CHECK(x.width() <= tol(30));
    CHECK(near(x, e, tol(35)));
    for (const Rational& t : {q(-5, 2), q(1, 7), Rational(10)}) {
        RationalInterval y = exp_interval(t, tol(20));
        CHECK(std::abs(y.midpoint().get_d() / std::exp(t.get_d()) - 1) < 1e-14);
    }
}

TEST_CASE("Lambert W enclosures")
{
    // The omega constant W(1).
    Rational omega = dec("0.567143290409783872999968662210355549");
    RationalInterval w = lambert_w_interval(Rational(1), tol(30));
    CHECK(w.width() <= tol(30));
    CHECK(near(w, omega, tol(35)));
    CHECK(lambert_w_interval(Rational(0), tol(10)).contains(Rational(0)));
    for (const Rational& x : {q(1, 50), Rational(3), Rational(100)}) {
        RationalInterval v = lambert_w_interval(x, tol(25));
        double m = v.midpoint().get_d();
        CHECK(std::abs(m * std::exp(m) / x.get_d() - 1) < 1e-13);
    }
    RationalInterval r = lambert_w_over_x_interval(RationalInterval(q(1, 100), q(1, 100)), tol(25));
    // mpmath: lambertw(0.01)/0.01
    CHECK(near(r, dec("0.990147384359501188533632681657"), tol(24)));
    CHECK(lambert_w_over_x_interval(RationalInterval(Rational(0), Rational(0)), tol(10)).contains(Rational(1)));
}

TEST_CASE("entropy and free energy enclosures")
{
    Rational ln2 = dec("0.693147180559945309417232121458176568");
    CHECK(near(entropy_interval(q(1, 2), tol(30)), ln2, tol(34)));
    CHECK(entropy_interval(Rational(0), tol(10)) == RationalInterval(Rational(0)));
    CHECK(entropy_interval(Rational(1), tol(10)) == RationalInterval(Rational(0)));
    // Empty graph on two vertices: F = log(1 + lambda) = log 2 at lambda = 1.
    RationalInterval f = free_energy_interval(IntPoly{1, 2, 1}, 2, Rational(1), tol(30));
    CHECK(near(f, ln2, tol(34)));
}
