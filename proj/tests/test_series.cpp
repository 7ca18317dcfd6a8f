#include <doctest.h>

#include "hardcore/bounds.hpp"
#include "hardcore/graph.hpp"
#include "hardcore/series.hpp"

using namespace hardcore;

namespace {

Rational q(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

const VariableList none;
const VariableList xy{"x", "y"};

}  // namespace

TEST_CASE("elementary series")
{
    MultiSeries l = log1p_series(none, 5);
    for (int k = 1; k <= 5; ++k)
        CHECK(l.coefficient(k).constant_term() == q(k % 2 ? 1 : -1, k));
    CHECK(l.coefficient(6).is_zero());

    MultiSeries one = MultiSeries::from_rationals(none, 6, {Rational(1)});
    MultiSeries geometric = (one - MultiSeries::lambda(none, 6)).inverse();
    for (int k = 0; k <= 6; ++k)
        CHECK(geometric.coefficient(k).constant_term() == 1);

    std::vector<Rational> w = lambert_w_over_x_coefficients(3);
    CHECK(w == std::vector<Rational>{Rational(1), Rational(-1), q(3, 2), q(-8, 3)});
}

TEST_CASE("ring operations")
{
    MultiPoly x = MultiPoly::variable(xy, "x"), y = MultiPoly::variable(xy, "y");
    MultiSeries a(xy, 4, {MultiPoly::constant(xy, Rational(1)), x, y * y, x * y});
    MultiSeries b(xy, 4, {MultiPoly::constant(xy, Rational(2)), y, x});
    CHECK((a * b) / b == a);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    CHECK(a.pow(3) == a * a * a);
    CHECK_THROWS(a / MultiSeries(xy, 4, {x}));
    CHECK(a.truncate(2).coefficient(3).is_zero());
    CHECK(a.assign({{"x", Rational(2)}, {"y", Rational(3)}}).coefficient(3).constant_term() == 6);

    MultiSeries lam = MultiSeries::lambda(none, 4);
    // exp(log(1+lambda)) - 1 = lambda.
    std::vector<Rational> exp_minus_one{Rational(0), Rational(1), q(1, 2), q(1, 6), q(1, 24)};
    CHECK(MultiSeries::compose(exp_minus_one, log1p_series(none, 4)) == lam);
}

TEST_CASE("parsing")
{
    MultiPoly x = MultiPoly::variable(xy, "x"), y = MultiPoly::variable(xy, "y");
    CHECK(parse_multipoly(xy, "(3+x-x^2)/2") == q(1, 2) * (MultiPoly::constant(xy, Rational(3)) + x - x * x));
    CHECK(parse_multipoly(xy, "-2*x*y^2 + 7") == Rational(-2) * x * y * y + MultiPoly::constant(xy, Rational(7)));
    CHECK_THROWS(parse_multipoly(xy, "z + 1"));
    CHECK_THROWS(parse_multipoly(xy, "(x + 1"));
}

TEST_CASE("g series matches a hand expansion")
{
    // lambda/(1+lambda) * (1 - dL + 3/2 d^2 L^2) with L = lambda - lambda^2/2.
    VariableList dv{"d"};
    MultiPoly d = MultiPoly::variable(dv, "d");
    MultiPoly one = MultiPoly::constant(dv, Rational(1));
    MultiSeries g = g_series("d", 3);
    CHECK(g.coefficient(0).is_zero());
    CHECK(g.coefficient(1) == one);
    CHECK(g.coefficient(2) == -(one + d));
    CHECK(g.coefficient(3) == one + q(3, 2) * d + q(3, 2) * d * d);
    CHECK_THROWS(g_series("d", 9));
}

TEST_CASE("g series agrees with the certified Lambert-W enclosure")
{
    const Rational l = q(1, 1000);
    const Rational tol = q(1, 1000000000) * q(1, 1000000000) * q(1, 1000000000);
    // Ninth Taylor coefficient of g at d = 1, 2, 5 (mpmath), so the order-8 truncation
    // error should be close to c9 * lambda^9.
    const std::vector<std::pair<int, double>> next{{1, 834.88036}, {2, 80927.771}, {5, 68682555.0}};
    for (const auto& [d, c9] : next) {
        Rational s = g_series("d", 8).assign({{"d", Rational(d)}}).evaluate(l);
        RationalInterval exact = g_tf_interval(d, l, tol);
        double ratio = Rational((exact.midpoint() - s) / pow(l, 9)).get_d() / c9;
        CHECK(ratio > 0.9);
        CHECK(ratio < 1.1);
    }
    // mpmath: 1, -2, 4, -8.5, 19.3333 at d = 1.
    MultiSeries g1 = g_series("d", 5).assign({{"d", Rational(1)}});
    CHECK(g1.coefficient(4).constant_term() == q(-17, 2));
    CHECK(g1.coefficient(5).constant_term() == q(58, 3));
}

TEST_CASE("t series ingredients")
{
    MultiSeries tpp = tdoubleprime_series(3);
    VariableList dv{"d_v"};
    MultiPoly d = MultiPoly::variable(dv, "d_v");
    CHECK(tpp.coefficient(1) == MultiPoly::constant(dv, Rational(1)));
    CHECK(tpp.coefficient(2) == -d);

    MultiSeries t = t_series(2);
    // g(d_v - 1) - g(d_v) = lambda^2 + O(lambda^3), so t starts at lambda.
    CHECK(t.coefficient(0).is_zero());
    CHECK(t.coefficient(1).is_constant());
    CHECK(t.coefficient(1).constant_term() == 1);
}

TEST_CASE("series prover reports")
{
    for (const SeriesReport& r : {verify_t_coefficients(), verify_tprime_coefficients(),
                                  verify_tdoubleprime_coefficients(), verify_fidentity()}) {
        for (const auto& c : r.checks)
            CHECK_MESSAGE((c.ok || c.exploratory), std::string(r.name + "/" + c.id + ": " + c.detail));
        CHECK(r.ok());
        CHECK(to_json(r)["checks"].size() == r.checks.size());
    }
}

TEST_CASE("b coefficients")
{
    for (const char* spec : {"cycle:5", "petersen", "kab:1,2", "kab:3,3"}) {
        Graph g = generate(spec);
        BCoefficients b = b_coefficients(g);
        CHECK(b.b[0] == 1);
        CHECK(b.b[1] == 0);
        CHECK(b.b[2] == 0);
        CHECK(b.b[3] == b.closed_form);
        CHECK(verify_b_coefficients(g).ok());
    }
    // Regular graphs: closed form is -d/2.
    CHECK(b_coefficients(generate("cycle:5")).closed_form == -1);
    CHECK(b_coefficients(generate("petersen")).closed_form == q(-3, 2));
    // K_{1,2}: -(1/6)[(2 + 7 + 7) + 2 * (1 + 7)] = -16/3.
    CHECK(b_coefficients(generate("kab:1,2")).closed_form == q(-16, 3));
    CHECK_THROWS(b_coefficients(generate("kn:3")));
    CHECK_THROWS(b_coefficients(generate("path:2 + empty:1")));
}
