#include <doctest.h>

#include <random>

#include "hardcore/orderings.hpp"

using namespace hardcore;

namespace {

const IntPoly p_cubed{1, 9, 30, 45, 30, 9, 1};
const IntPoly q_first{1, 9, 30, 44, 24};
const IntPoly q_second{1, 9, 30, 44, 24, 9};
const IntPoly q_third{1, 9, 30, 44, 24, 10};

Rational q(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// V_P(x) evaluated straight from the definition.
Rational var_value(const IntPoly& p, const Rational& x)
{
    Rational z = p.evaluate(x), d1 = p.derivative().evaluate(x), d2 = p.derivative().derivative().evaluate(x);
    return (x * x * d2 + x * d1) / z - x * x * d1 * d1 / (z * z);
}

Rational occ_value(const IntPoly& p, const Rational& x)
{
    return x * p.derivative().evaluate(x) / p.evaluate(x);
}

}  // namespace

TEST_CASE("parsing kinds")
{
    CHECK(parse_ordering_kind("fv") == OrderingKind::fv);
    CHECK(parse_ordering_kind("VAR") == OrderingKind::var);
    CHECK(to_string(OrderingKind::coef) == "COEF");
    CHECK_THROWS(parse_ordering_kind("nope"));
}

TEST_CASE("preconditions")
{
    CHECK_THROWS(compare(OrderingKind::count, IntPoly{2, 1}, IntPoly{1}));
    CHECK_THROWS(compare(OrderingKind::count, IntPoly{1, -1}, IntPoly{1}));
}

TEST_CASE("free volume and variance both hold for the first pair")
{
    CHECK(compare(OrderingKind::fv, p_cubed, q_first).ok());
    CHECK(compare(OrderingKind::var, p_cubed, q_first).ok());
    IntPoly factored = IntPoly{1, 3, 1}.pow(3);
    CHECK(factored == p_cubed);
    CHECK(IntPoly{1, 2}.pow(3) * IntPoly{1, 3} == q_first);

    IntPoly expected = IntPoly::monomial(3, 3) * IntPoly{1, 2}.pow(4) * IntPoly{1, 3, 1}.pow(4) *
                       IntPoly{3, 32, 118, 176, 86};
    CHECK(var_difference_certificate(p_cubed, q_first) == to_rat(expected));
}

TEST_CASE("free volume fails at k = 4 while variance holds")
{
    Verdict fv = compare(OrderingKind::fv, p_cubed, q_second);
    REQUIRE(fv.status == Status::fails);
    CHECK(std::get<CoefficientIndex>(fv.witness).k == 4);
    CHECK(*fv.margin == 24 * 9 - 30 * 9);
    CHECK(compare(OrderingKind::var, p_cubed, q_second).ok());

    RatPoly cert = var_difference_certificate(p_cubed, q_second);
    CHECK(cert.degree() == 21);
    CHECK(cert.leading() == 513);
    CHECK(cert[20] == 8136);
    CHECK(cert[3] == 9);
    CHECK(cert[2] == 0);
}

TEST_CASE("coefficient order fails at x^5 while variance holds")
{
    Verdict coef = compare(OrderingKind::coef, p_cubed, q_third);
    REQUIRE(coef.status == Status::fails);
    CHECK(std::get<CoefficientIndex>(coef.witness).k == 5);
    CHECK(compare(OrderingKind::var, p_cubed, q_third).ok());
}

TEST_CASE("free volume holds while variance fails")
{
    struct Case {
        IntPoly p, q;
        Rational vq, vp;
    };
    std::vector<Case> cases{
        {IntPoly{1, 4, 2, 2}, IntPoly{1, 2, 1, 1}, q(26, 25), q(74, 81)},
        {IntPoly{1, 10, 210, 21, 21, 21}, IntPoly{1, 10, 10, 1, 1, 1}, q(53, 48), q(18619, 20164)},
        {IntPoly{1, 10, 1, 20010, 2001, 2001}, IntPoly{1, 10, 1, 10, 1, 1}, q(293, 192), q(68604293, 192384192)},
    };
    for (const auto& c : cases) {
        CHECK(compare(OrderingKind::fv, c.p, c.q).ok());
        Verdict var = compare(OrderingKind::var, c.p, c.q);
        REQUIRE(var.status == Status::fails);
        Rational x0 = std::get<Rational>(var.witness);
        CHECK(var_value(c.p, x0) < var_value(c.q, x0));
        CHECK(var_value(c.q, Rational(1)) == c.vq);
        CHECK(var_value(c.p, Rational(1)) == c.vp);
    }
}

TEST_CASE("count, max and padding")
{
    CHECK(compare(OrderingKind::count, IntPoly{1, 3}, IntPoly{1, 1, 1}).ok());
    CHECK(compare(OrderingKind::count, IntPoly{1, 1}, IntPoly{1, 1, 1}).status == Status::fails);
    // Q has a higher degree, so P's padded leading coefficient is zero.
    CHECK(compare(OrderingKind::max, IntPoly{1, 5}, IntPoly{1, 1, 1}).status == Status::fails);
    CHECK(compare(OrderingKind::max, IntPoly{1, 1, 2}, IntPoly{1, 5, 2}).ok());
}

TEST_CASE("partition and occupancy witnesses are genuine")
{
    // 1 + 4x and 1 + x + x^2 cross at x = 3.
    Verdict part = compare(OrderingKind::part, IntPoly{1, 4}, IntPoly{1, 1, 1});
    REQUIRE(part.status == Status::fails);
    Rational x0 = std::get<Rational>(part.witness);
    CHECK(IntPoly{1, 4}.evaluate(x0) < IntPoly{1, 1, 1}.evaluate(x0));

    Verdict occ = compare(OrderingKind::occ, IntPoly{1, 4}, IntPoly{1, 1, 1});
    REQUIRE(occ.status == Status::fails);
    Rational y0 = std::get<Rational>(occ.witness);
    CHECK(occ_value(IntPoly{1, 4}, y0) < occ_value(IntPoly{1, 1, 1}, y0));
}

TEST_CASE("internal zeros make free volume vacuous")
{
    // Positive coefficients are needed for FV => OCC: here every cross product is zero.
    ImplicationReport r = implication_web_check(IntPoly{1, 0, 3}, IntPoly{1, 0, 5});
    CHECK(r.verdicts.at(OrderingKind::fv).ok());
    CHECK(r.verdicts.at(OrderingKind::occ).status == Status::fails);
}

TEST_CASE("reflexivity")
{
    ImplicationReport r = implication_web_check(p_cubed, p_cubed);
    for (OrderingKind k : all_orderings)
        CHECK(r.verdicts.at(k).ok());
    CHECK(r.violations.empty());
    CHECK(var_difference_certificate(p_cubed, p_cubed).is_zero());
}

TEST_CASE("verdicts agree with sampled evaluation")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> deg(1, 5), coeff(1, 12);
    const std::vector<Rational> grid{q(1, 10), q(1, 2), Rational(1), Rational(3), Rational(20)};
    for (int trial = 0; trial < 200; ++trial) {
        auto draw = [&] {
            std::vector<Integer> c{Integer(1)};
            int d = deg(rng);
            for (int i = 1; i <= d; ++i)
                c.emplace_back(coeff(rng));
            return IntPoly(c);
        };
        IntPoly a = draw(), b = draw();
        bool part_sampled = true, occ_sampled = true, var_sampled = true;
        for (const Rational& x : grid) {
            part_sampled &= a.evaluate(x) >= b.evaluate(x);
            occ_sampled &= occ_value(a, x) >= occ_value(b, x);
            var_sampled &= var_value(a, x) >= var_value(b, x);
        }
        // A violation at any sample must be reported; holding everywhere implies holding on samples.
        if (!part_sampled)
            CHECK(compare(OrderingKind::part, a, b).status == Status::fails);
        if (!occ_sampled)
            CHECK(compare(OrderingKind::occ, a, b).status == Status::fails);
        if (!var_sampled)
            CHECK(compare(OrderingKind::var, a, b).status == Status::fails);
        ImplicationReport r = implication_web_check(a, b);
        std::string why = r.violations.empty() ? std::string() : r.violations.front();
        CHECK_MESSAGE(r.violations.empty(), (to_text(a) + " vs " + to_text(b) + ": " + why));
    }
}

TEST_CASE("report json")
{
    auto j = to_json(implication_web_check(p_cubed, q_second));
    CHECK(j["verdicts"]["FV"]["status"] == "fails");
    CHECK(j["violations"].empty());
}
