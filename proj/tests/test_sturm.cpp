#include <doctest.h>

#include <random>

#include "hardcore/sturm.hpp"

using namespace hardcore;

namespace {

Rational q(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// Product of (den*x - num) over the given rational roots.
RatPoly with_roots(const std::vector<Rational>& roots)
{
    RatPoly p{Rational(1)};
    for (const auto& r : roots)
        p = p * RatPoly{Rational(-r), Rational(1)};
    return p;
}

}  // namespace

TEST_CASE("Sturm chains count roots in half-open intervals")
{
    RatPoly p = with_roots({Rational(-2), Rational(1), Rational(3)});
    SturmChain chain(square_free_integer(p));
    CHECK(chain.count_roots(Rational(-10), Rational(10)) == 3);
    CHECK(chain.count_roots(Rational(0), Rational(3)) == 2);
    CHECK(chain.count_roots(Rational(1), Rational(3)) == 1);
    CHECK(chain.count_roots(Rational(3), Rational(4)) == 0);
}

TEST_CASE("real root isolation separates known rational and irrational roots")
{
    RatPoly p = with_roots({q(1, 3), q(1, 2), Rational(5)}) * RatPoly{Rational(-2), Rational(0), Rational(1)};
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 5);
    std::vector<Rational> expect_inside{Rational(-1), q(1, 3), q(1, 2), Rational(1), Rational(5)};
    // -sqrt2 < 1/3 < 1/2 < sqrt2 < 5; neighbouring intervals may share a non-root endpoint.
    for (std::size_t i = 1; i < roots.size(); ++i)
        CHECK(roots[i - 1].hi <= roots[i].lo);
    std::vector<IsolatingInterval> fine;
    for (const auto& iv : roots)
        fine.push_back(refine_root(p, iv, q(1, 1000)));
    CHECK(fine[0].hi < -1);
    CHECK(fine[0].lo > -2);
    CHECK(fine[1].lo <= q(1, 3));
    CHECK(fine[1].hi >= q(1, 3));
    CHECK(fine[2].lo <= q(1, 2));
    CHECK(fine[2].hi >= q(1, 2));
    CHECK(fine[3].lo > 1);
    CHECK(fine[3].hi < 2);
    CHECK(fine[4].lo <= 5);
    CHECK(fine[4].hi >= 5);
    IsolatingInterval s = refine_root(p, roots[3], q(1, 1000000));
    CHECK(s.width() <= q(1, 1000000));
    CHECK(s.lo * s.lo <= 2);
    CHECK(s.hi * s.hi >= 2);
    CHECK(isolate_positive_roots(p).size() == 4);
}

TEST_CASE("sign evaluation matches direct evaluation")
{
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> c(-20, 20);
    for (int i = 0; i < 100; ++i) {
        IntPoly p{c(rng), c(rng), c(rng), c(rng)};
        Rational x = q(c(rng), 7);
        CHECK(sign_at(p, x) == sign(p.evaluate(x)));
    }
}

TEST_CASE("nonnegativity on the half-line")
{
    // (x - 1)^2 touches zero; x^2 - x + 1/8 dips below zero between its roots.
    CHECK(sturm_nonneg_on_halfline(with_roots({Rational(1), Rational(1)})).ok());
    Verdict dip = sturm_nonneg_on_halfline(RatPoly{q(1, 8), Rational(-1), Rational(1)});
    CHECK(dip.status == Status::fails);
    REQUIRE(std::holds_alternative<Rational>(dip.witness));
    Rational w = std::get<Rational>(dip.witness);
    CHECK(RatPoly{q(1, 8), Rational(-1), Rational(1)}.evaluate(w) < 0);
    CHECK(sturm_nonneg_on_halfline(RatPoly{Rational(1), Rational(3), Rational(0), Rational(2)}).ok());
    CHECK(sturm_nonneg_on_halfline(RatPoly{Rational(-1)}).status == Status::fails);
    // Negative on (-inf, 0) only.
    CHECK(sturm_nonneg_on_halfline(RatPoly{Rational(0), Rational(1)}).ok());
}

TEST_CASE("nonnegativity on a closed interval")
{
    RatPoly p = with_roots({Rational(-1), Rational(2)});  // negative on (-1, 2)
    CHECK(sturm_nonneg_on_interval(p, Rational(2), Rational(5)).ok());
    CHECK(sturm_nonneg_on_interval(p, Rational(-3), Rational(-1)).ok());
    CHECK(sturm_nonneg_on_interval(p, Rational(0), Rational(1)).status == Status::fails);
    // y^4 (1 - 2y^2) is nonnegative on [-1/2, 1/2] with a quadruple root at 0.
    RatPoly y4{Rational(0), Rational(0), Rational(0), Rational(0), Rational(1), Rational(0), Rational(-2)};
    CHECK(sturm_nonneg_on_interval(y4, q(-1, 2), q(1, 2)).ok());
    CHECK(sturm_nonneg_on_interval(y4, Rational(-1), Rational(1)).status == Status::fails);
}
