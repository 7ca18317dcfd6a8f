#include <doctest.h>

#include <algorithm>

#include "hardcore/bounds.hpp"
#include "hardcore/engine.hpp"
#include "hardcore/graph_corpus.hpp"

using namespace hardcore;

namespace {

Rational q(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

const BoundCheck& find(const std::vector<BoundCheck>& checks, const std::string& name)
{
    auto it = std::find_if(checks.begin(), checks.end(), [&](const BoundCheck& c) { return c.bound == name; });
    REQUIRE_MESSAGE(it != checks.end(), name);
    return *it;
}

bool is_equality(const BoundCheck& c)
{
    return c.verdict.ok() && c.verdict.note.find("equality") != std::string::npos;
}

const Rational tol = q(1, 100000) * q(1, 100000) * q(1, 100000) * q(1, 100000);

}  // namespace

TEST_CASE("log sums are compared by clearing exponents")
{
    CHECK(compare_log_sums({{Rational(2), Rational(1)}}, {{Rational(4), q(1, 2)}}) == 0);
    CHECK(compare_log_sums({{Rational(3), Rational(1)}}, {{Rational(2), Rational(1)}}) == 1);
    // 5^(1/3) against 4^(1/4): 5^4 = 625 > 64 = 4^3.
    CHECK(compare_log_sums({{Rational(5), q(1, 3)}}, {{Rational(4), q(1, 4)}}) == 1);
    CHECK(compare_log_sums({{Rational(2), Rational(1)}, {Rational(3), Rational(1)}}, {{Rational(6), Rational(1)}}) == 0);
    RationalInterval ln2 = log_sum_interval({{Rational(2), Rational(1)}}, tol);
    Rational ref = parse_rational("0.693147180559945309417232121458176568");
    CHECK(abs(ln2.midpoint() - ref) <= tol);
    CHECK(ln2.width() <= tol);
}

TEST_CASE("free energy bounds")
{
    auto path3 = check_free_energy_bounds(generate("path:3"), Rational(1));
    for (const auto& c : path3)
        CHECK_MESSAGE(c.verdict.ok(), c.bound);
    CHECK(find(path3, "Fdegrees.lower").verdict.ok());

    CHECK(is_equality(find(check_free_energy_bounds(generate("kn:4"), q(2, 3)), "Fregular.lower")));
    CHECK(is_equality(find(check_free_energy_bounds(generate("kab:2,2"), Rational(1)), "Fregular.upper")));
    CHECK(is_equality(find(check_free_energy_bounds(generate("empty:3"), Rational(1)), "Ftrivial.upper")));
}

TEST_CASE("occupancy bounds")
{
    CHECK(is_equality(check_occupancy_degrees(generate("kn:4"), q(3, 16))));
    CHECK(is_equality(check_occupancy_degrees(generate("kn:3 + kn:2"), q(1, 3))));

    Graph star = generate("kab:1,3");
    Rational l = q(3, 16);
    Rational bound = (l / (1 + 4 * l) + 3 * (l / (1 + 2 * l))) / 4;
    BoundCheck c = check_occupancy_degrees(star, l);
    CHECK(c.verdict.ok());
    CHECK(c.lhs == to_string(bound));
    CHECK(*c.verdict.margin == occupancy_fraction(star).evaluate(l) - bound);
    CHECK(*c.verdict.margin > 0);

    for (const auto& check : check_occupancy_bounds(generate("petersen"), q(1, 10)))
        CHECK_MESSAGE((check.verdict.ok() || check.exploratory), check.bound);
}

TEST_CASE("triangle-free occupancy bound")
{
    CHECK(check_occupancy_tf(generate("petersen"), q(1, 10000), tol).verdict.ok());
    CHECK(check_occupancy_tf(generate("cycle:5"), q(1, 100), tol).verdict.ok());
    BoundCheck empty = check_occupancy_tf(generate("empty:4"), Rational(2), tol);
    CHECK(empty.verdict.status != Status::fails);
    CHECK_THROWS(check_occupancy_tf(generate("kn:3"), q(1, 100), tol));

    RationalInterval g0 = g_tf_interval(0, Rational(1), tol);
    CHECK(g0.contains(q(1, 2)));
    CHECK(g_tf_interval(2, Rational(1), tol).hi() < q(1, 2));
}

TEST_CASE("variance bounds")
{
    const int n = 5;
    auto kn = check_variance_bounds(generate("kn:5"), q(1, 2 * n));
    CHECK(is_equality(find(kn, "Vtrivial.lower")));
    auto empty = check_variance_bounds(generate("empty:5"), q(1, n));
    CHECK(is_equality(find(empty, "Vtrivial.upper")));
    CHECK(find(check_variance_bounds(generate("path:5"), q(1, 10)), "Vregular.conjecture").exploratory);
}

TEST_CASE("five-vertex path threshold")
{
    auto checks = check_p5_threshold();
    CHECK(checks.size() == 4);
    for (const auto& c : checks)
        CHECK_MESSAGE(c.verdict.ok(), c.bound);
    IsolatingInterval root = p5_largest_crossing(q(1, 1000));
    CHECK(root.lo > 32);
    CHECK(root.hi <= 33);

    // Direct evaluation through the engine.
    RatFunc v = variance_fraction(generate("path:5"));
    CHECK(v.evaluate(Rational(33)) > Rational(33) / (34 * 34));
    CHECK(v.evaluate(Rational(1)) <= q(1, 4));
}

TEST_CASE("cycle variance ratio")
{
    for (int n : {4, 7, 12}) {
        Rational l = q(5, 2);
        Rational expected = variance_fraction(generate("cycle:" + std::to_string(n))).evaluate(l) /
                            (l / ((1 + l) * (1 + l)));
        CHECK(cycle_variance_ratio(n, l) == expected);
    }
    CHECK(cycle_variance_ratio(500, Rational(10000)) > 10);
    CHECK(check_cycle_growth(500, {Rational(100), Rational(1000), Rational(10000)}).verdict.ok());
    CHECK(check_cycle_growth(4, {Rational(1)}).verdict.ok());
}

TEST_CASE("local occupancy")
{
    CHECK(check_local_occupancy(generate("kn:2"), Rational(0), Rational(0), Rational(1)).verdict.status ==
          Status::fails);
    for (const char* spec : {"petersen", "path:4", "kab:2,3", "kn:4"}) {
        Rational l = q(1, 2);
        CHECK(check_local_occupancy(generate(spec), 1 + 1 / l, Rational(1), l).verdict.ok());
    }
}

TEST_CASE("weighted marginal sums")
{
    for (int d = 0; d <= 4; ++d)
        CHECK(is_equality(check_weighted_marginal_sum(generate("kn:" + std::to_string(d + 1)), Rational(2),
                                                      MarginalWeight::f, tol)));
    CHECK(check_weighted_marginal_sum(generate("petersen"), q(1, 100), MarginalWeight::g_tf, tol).verdict.ok());
}

TEST_CASE("combined chain")
{
    for (const auto& c : check_combined_chain(generate("path:4"), Rational(1), tol))
        CHECK_MESSAGE(c.verdict.ok(), c.bound);
    for (const auto& c : check_combined_chain(generate("kn:5"), Rational(4), tol))
        CHECK_MESSAGE(c.verdict.ok(), c.bound);
    for (const auto& c : check_combined_chain(generate("empty:3"), Rational(1), tol))
        CHECK_MESSAGE(c.verdict.ok(), c.bound);
}

TEST_CASE("occupancy counterexamples at lambda = 5")
{
    auto checks = check_edge_occ_counterexamples(Rational(5));
    CHECK(checks.size() == 9);
    for (const auto& c : checks)
        CHECK_MESSAGE(c.verdict.ok(), c.bound);
    Rational pasch_e = occupancy_fraction(generate("pasch")).evaluate(Rational(5));
    CHECK(pasch_e == q(25495, 53001));
}

TEST_CASE("vertex-based free energy upper bound")
{
    CHECK(check_vertex_f_upper(generate("path:4"), Rational(1)).verdict.status == Status::fails);
    // Still violated at small fugacity: F - rhs is about 1.2e-9 at 1/100.
    CHECK(check_vertex_f_upper(generate("path:4"), q(1, 100)).verdict.status == Status::fails);
    CHECK(check_vertex_f_upper(generate("path:4"), Rational(1)).exploratory);
    CHECK(check_vertex_f_upper(generate("cycle:4"), Rational(1)).verdict.ok());
}

TEST_CASE("json rendering")
{
    auto j = to_json(check_occupancy_degrees(generate("kn:3"), q(1, 3)));
    CHECK(j["bound"] == "Edegrees");
    CHECK(j["graph"] == "kn:3");
    CHECK(j["lambda"] == "1/3");
    CHECK(j["status"] == "holds");
    CHECK(j.contains("lhs"));
    CHECK(j.contains("rhs"));
}

TEST_CASE("check_all_bounds covers triangle-free extras only when applicable")
{
    auto tf = check_all_bounds(generate("cycle:5"), q(1, 100), tol);
    CHECK(std::any_of(tf.begin(), tf.end(), [](const BoundCheck& c) { return c.bound == "EdegreesTF"; }));
    auto tri = check_all_bounds(generate("kn:3"), q(1, 100), tol);
    CHECK(std::none_of(tri.begin(), tri.end(), [](const BoundCheck& c) { return c.bound == "EdegreesTF"; }));
}
