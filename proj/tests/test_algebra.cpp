#include <doctest.h>

#include <random>

#include "hardcore/multipoly.hpp"
#include "hardcore/poly.hpp"
#include "hardcore/ratfunc.hpp"
#include "hardcore/rational.hpp"

using namespace hardcore;

namespace {

Rational q(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

IntPoly random_int_poly(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = coef(rng);
    return IntPoly(c);
}

}  // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("3/16") == q(3, 16));
    CHECK(parse_rational("-6/8") == q(-3, 4));
    CHECK(parse_rational("0.25") == q(1, 4));
    CHECK(parse_rational("1e-3") == q(1, 1000));
    CHECK(parse_rational("12") == 12);
    CHECK(to_string(q(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("floor, ceil and simplest rational in an interval")
{
    CHECK(hardcore::floor(q(-7, 2)) == -4);
    CHECK(hardcore::ceil(q(-7, 2)) == -3);
    CHECK(simplest_in(q(1, 3), q(1, 2)) == q(1, 2));
    CHECK(simplest_in(q(3, 10), q(4, 10)) == q(1, 3));
    CHECK(simplest_in(q(-5, 2), q(-3, 2)) == -2);
    CHECK(simplest_in(q(7, 3), q(7, 3)) == q(7, 3));
}

TEST_CASE("integer polynomial arithmetic")
{
    IntPoly a{1, 2, 1};
    IntPoly b{1, 1};
    CHECK(b * b == a);
    CHECK(a.derivative() == IntPoly{2, 2});
    CHECK(b.pow(3) == IntPoly{1, 3, 3, 1});
    CHECK(a.evaluate(Rational(2)) == 9);
    CHECK((a - a).is_zero());
    CHECK(IntPoly{1, 2}.compose(IntPoly{0, 1, 1}) == IntPoly{1, 2, 2});
    CHECK(IntPoly{1, 2}.shifted(2) == IntPoly{0, 0, 1, 2});
    CHECK(to_text(IntPoly{1, 9, 30}) == "1,9,30");
    CHECK(parse_int_poly("1, 9,30") == IntPoly{1, 9, 30});
    CHECK(to_pretty(IntPoly{-1, 2, 0, 3}) == "3x^3 + 2x - 1");
}

TEST_CASE("gcd, exact division and square-free parts over Q")
{
    RatPoly p = to_rat(IntPoly{1, 1}.pow(2) * IntPoly{2, 1});
    RatPoly r = to_rat(IntPoly{1, 1} * IntPoly{-3, 1});
    CHECK(gcd(p, r) == to_rat(IntPoly{1, 1}));
    CHECK(exact_div(p, to_rat(IntPoly{1, 1})) == to_rat(IntPoly{2, 3, 1}));
    CHECK_THROWS(exact_div(p, to_rat(IntPoly{5, 1})));
    CHECK(square_free_part(p) == to_rat(IntPoly{2, 3, 1}));
}

TEST_CASE("gcd divides both arguments on random inputs")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        IntPoly common = random_int_poly(rng, 3), a = random_int_poly(rng, 4), b = random_int_poly(rng, 4);
        if (common.is_zero() || a.is_zero() || b.is_zero())
            continue;
        RatPoly x = to_rat(common * a), y = to_rat(common * b);
        RatPoly g = gcd(x, y);
        CHECK_NOTHROW(exact_div(x, g));
        CHECK_NOTHROW(exact_div(y, g));
        CHECK(g.degree() >= common.degree());
    }
}

TEST_CASE("rational functions normalise to a canonical form")
{
    RatFunc f(to_rat(IntPoly{1, 2, 1}), to_rat(IntPoly{2, 2}));
    CHECK(f.numerator() == RatPoly{q(1, 2), q(1, 2)});
    CHECK(f.denominator() == RatPoly{Rational(1)});
    RatFunc a = RatFunc::ratio(IntPoly{0, 1}, IntPoly{1, 1});
    RatFunc b = RatFunc::ratio(IntPoly{1}, IntPoly{1, 1});
    CHECK(a + b == RatFunc(Rational(1)));
    CHECK(a.evaluate(Rational(3)) == q(3, 4));
    CHECK(a.derivative() == RatFunc::ratio(IntPoly{1}, IntPoly{1, 2, 1}));
    CHECK(a.x_d_dx() == RatFunc::ratio(IntPoly{0, 1}, IntPoly{1, 2, 1}));
    CHECK_THROWS_AS(b.evaluate(Rational(-1)), std::domain_error);
}

TEST_CASE("multivariate polynomials")
{
    VariableList vars{"a", "b"};
    MultiPoly a = MultiPoly::variable(vars, "a"), b = MultiPoly::variable(vars, "b");
    MultiPoly one = MultiPoly::constant(vars, Rational(1));
    MultiPoly s = (a + b).pow(2);
    CHECK(s == a * a + Rational(2) * a * b + b * b);
    CHECK(s.derivative("a") == Rational(2) * a + Rational(2) * b);
    CHECK(s.evaluate({{"a", Rational(2)}, {"b", Rational(3)}}) == 25);
    CHECK(s.compose("b", one - a) == one);
    CHECK(s.total_degree() == 2);
    CHECK((a - b).to_string() == "a - b");
    CHECK(((a * a * b) * Rational(3) - one).to_string() == "3*a^2*b - 1");
    CHECK_THROWS(MultiPoly::variable(vars, "c"));
    CHECK_THROWS(a + MultiPoly::variable({"a"}, "a"));
}
