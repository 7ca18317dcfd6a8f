#include "hardcore/bounds.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "hardcore/engine.hpp"
#include "hardcore/graph_corpus.hpp"

namespace hardcore {

namespace {

constexpr int display_digits = 20;

std::string graph_name(const Graph& g)
{
    return g.label().empty() ? "g6:" + encode_graph6(g) : g.label();
}

BoundCheck make_check(std::string bound, const Graph& g, const Rational& lambda)
{
    BoundCheck c;
    c.bound = std::move(bound);
    c.graph = graph_name(g);
    c.lambda = lambda;
    return c;
}

void require_positive(const Rational& lambda)
{
    if (lambda <= 0)
        throw std::invalid_argument("lambda must be positive");
}

// lhs <= rhs, decided exactly.
BoundCheck exact_le(std::string bound, const Graph& g, const Rational& lambda, const Rational& lhs, const Rational& rhs)
{
    BoundCheck c = make_check(std::move(bound), g, lambda);
    c.lhs = to_string(lhs);
    c.rhs = to_string(rhs);
    Rational margin = rhs - lhs;
    c.verdict = margin >= 0 ? Verdict::holds(margin) : Verdict::fails(lambda, margin);
    if (margin == 0)
        c.verdict.note = "equality";
    return c;
}

// sum(lhs) <= sum(rhs) for weighted logarithms, decided exactly.
BoundCheck log_le(std::string bound, const Graph& g, const Rational& lambda, const std::vector<LogTerm>& lhs,
                  const std::vector<LogTerm>& rhs)
{
    BoundCheck c = make_check(std::move(bound), g, lambda);
    Rational tol(1, 100000);
    tol *= tol * tol * tol;
    c.lhs = log_sum_interval(lhs, tol).to_decimal(display_digits);
    c.rhs = log_sum_interval(rhs, tol).to_decimal(display_digits);
    int s = compare_log_sums(lhs, rhs);
    c.verdict = s <= 0 ? Verdict::holds() : Verdict::fails(lambda);
    c.verdict.note = s == 0 ? "equality (exact power comparison)" : "exact power comparison";
    return c;
}

struct Enclosures {
    RationalInterval lhs;
    RationalInterval rhs;
};

// lhs <= rhs from enclosures, refining the tolerance by factors of ten down to the floor.
Verdict certified_le(const std::function<Enclosures(const Rational&)>& enclose, Rational tol, Enclosures* last)
{
    const Rational floor_tol = tolerance_floor();
    if (tol < floor_tol)
        tol = floor_tol;
    while (true) {
        Enclosures e = enclose(tol);
        if (last)
            *last = e;
        if (e.lhs.hi() <= e.rhs.lo())
            return Verdict::holds(Rational(e.rhs.lo() - e.lhs.hi()));
        if (e.lhs.lo() > e.rhs.hi())
            return Verdict::fails(EnclosurePair{e.lhs, e.rhs}, Rational(e.rhs.hi() - e.lhs.lo()));
        if (tol <= floor_tol)
            return Verdict::inconclusive(EnclosurePair{e.lhs, e.rhs});
        tol /= 10;
        if (tol < floor_tol)
            tol = floor_tol;
    }
}

Integer lcm_of(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

RationalInterval scaled(const RationalInterval& x, const Rational& s)
{
    return x * RationalInterval(s);
}

std::vector<Rational> marginal_values(const Graph& g, const Rational& lambda)
{
    PartitionFunctionCache cache(g);
    const VertexSet all = g.all_vertices();
    Rational z = cache.polynomial(all).evaluate(lambda);
    std::vector<Rational> out;
    for (int u = 0; u < g.order(); ++u) {
        VertexSet rest = all & ~(g.neighbors(u) | (VertexSet{1} << u));
        out.push_back(lambda * cache.polynomial(rest).evaluate(lambda) / z);
    }
    return out;
}

RatFunc scalar(const Rational& c)
{
    return RatFunc(c);
}

RatFunc edge_sum_function(const Graph& g)
{
    RatFunc sum;
    for (const auto& [u, v] : g.edges()) {
        int a = g.degree(u), b = g.degree(v);
        IntPoly zk = complete_bipartite_polynomial(a, b);
        RatFunc ek = RatFunc::ratio(zk.derivative().shifted(1), zk * Integer(a + b));
        Rational w(a + b, a * b);
        w.canonicalize();
        sum += scalar(w) * ek;
    }
    return scalar(Rational(1, g.order())) * sum;
}

struct DisplayedCounterexample {
    std::string spec;
    RatFunc occupancy;
    RatFunc edge_sum;
};

RatPoly rp(std::initializer_list<long> coeffs)
{
    std::vector<Rational> v;
    for (long c : coeffs)
        v.emplace_back(c);
    return RatPoly(std::move(v));
}

std::vector<DisplayedCounterexample> displayed_counterexamples()
{
    const RatPoly x = RatPoly::x();
    const RatPoly s = rp({1, 1});
    const RatPoly one = rp({1});
    auto frac = [](const RatPoly& num, const RatPoly& den) { return RatFunc(num, den); };
    auto c = [](long p, long q) {
        Rational r(p, q);
        r.canonicalize();
        return RatFunc(r);
    };
    std::vector<DisplayedCounterexample> out;

    RatFunc e1 = frac(x * rp({6, 16, 12, 4}), rp({1, 6, 8, 4, 1}) * Rational(6));
    RatFunc s1 = c(1, 6) * (frac(x * (s.pow(2) * Rational(3) + s * Rational(2)), (s.pow(3) + s.pow(2) - one) * Rational(2)) +
                            frac(x * (s.pow(3) * Rational(4) + one), (s.pow(4) + x) * Rational(4)) +
                            frac(x * Rational(3) * (s.pow(3) * Rational(4) + s * Rational(2)),
                                 (s.pow(4) + s.pow(2) - one) * Rational(8)));
    out.push_back({"g1", e1, s1});

    RatFunc e2 = frac(x * rp({6, 18, 12, 4}), rp({1, 6, 9, 4, 1}) * Rational(6));
    RatFunc s2 = c(1, 6) * (frac(x * Rational(2) * (s.pow(2) * Rational(3) + one), (s.pow(3) + x) * Rational(3)) +
                            frac(x * Rational(2) * (s.pow(2) * Rational(3) + s * Rational(2)),
                                 (s.pow(3) + s.pow(2) - one) * Rational(3)));
    out.push_back({"g2", e2, s2});

    RatFunc e3 = frac(x * rp({10, 66, 126, 80, 30, 6}), rp({1, 10, 33, 42, 20, 6, 1}) * Rational(10));
    RatFunc s3 = frac(x * (s.pow(2) * Rational(3) + s * Rational(2)), (s.pow(3) + s.pow(2) - one) * Rational(5));
    out.push_back({"pasch", e3, s3});
    return out;
}

BoundCheck identity_check(std::string bound, const Graph& g, const RatFunc& computed, const RatFunc& displayed)
{
    BoundCheck c = make_check(std::move(bound), g, Rational(0));
    c.lhs = computed.to_pretty("λ");
    c.rhs = displayed.to_pretty("λ");
    if (computed == displayed) {
        c.verdict = Verdict::holds(Rational(0));
        c.verdict.note = "identical reduced rational functions";
    } else {
        c.verdict = Verdict::fails(Location{"rational functions differ"});
    }
    return c;
}

}  // namespace

nlohmann::json to_json(const BoundCheck& check)
{
    nlohmann::json j{{"bound", check.bound},
                     {"graph", check.graph},
                     {"lambda", to_string(check.lambda)},
                     {"status", to_string(check.verdict.status)},
                     {"lhs", check.lhs},
                     {"rhs", check.rhs},
                     {"margin", check.verdict.margin ? nlohmann::json(to_string(*check.verdict.margin)) : nlohmann::json()},
                     {"witness", witness_to_json(check.verdict.witness)}};
    if (check.exploratory)
        j["exploratory"] = true;
    if (!check.verdict.note.empty())
        j["note"] = check.verdict.note;
    return j;
}

RationalInterval g_tf_interval(int d, const Rational& lambda, const Rational& tol)
{
    if (d < 0 || lambda <= 0)
        throw std::invalid_argument("g needs d >= 0 and lambda > 0");
    Rational base = lambda / (1 + lambda);
    if (d == 0)
        return RationalInterval(base);
    RationalInterval l = log1p_interval(lambda, tol / (4 * d));
    RationalInterval x(l.lo() * d, l.hi() * d);
    return scaled(lambert_w_over_x_interval(x, tol / 2), base);
}

Rational triangle_free_range_constant()
{
    return Rational(1, 100);
}

int compare_log_sums(const std::vector<LogTerm>& lhs, const std::vector<LogTerm>& rhs)
{
    Integer common = 1;
    for (const auto* side : {&lhs, &rhs})
        for (const auto& t : *side) {
            if (t.base <= 0 || t.weight < 0)
                throw std::invalid_argument("log terms need positive bases and nonnegative weights");
            common = lcm_of(common, t.weight.get_den());
        }
    auto power = [&](const std::vector<LogTerm>& side) {
        Rational out = 1;
        for (const auto& t : side) {
            Rational e = t.weight * common;
            out *= pow(t.base, e.get_num().get_si());
        }
        return out;
    };
    int c = cmp(power(lhs), power(rhs));
    return (c > 0) - (c < 0);
}

RationalInterval log_sum_interval(const std::vector<LogTerm>& terms, const Rational& tol)
{
    RationalInterval sum(Rational(0));
    Rational each = tol / static_cast<long>(terms.size() + 1);
    for (const auto& t : terms) {
        Rational w = t.weight == 0 ? Rational(1) : t.weight;
        sum = sum + scaled(log_interval(t.base, each / w), t.weight);
    }
    return sum;
}

std::vector<BoundCheck> check_free_energy_bounds(const Graph& g, const Rational& lambda)
{
    require_positive(lambda);
    const int n = g.order();
    const Rational z = independence_polynomial(g).evaluate(lambda);
    const std::vector<LogTerm> f_g{{z, Rational(1, n)}};
    const DegreeMap dm = degree_map(g);
    const int delta = dm.max_degree;
    std::vector<BoundCheck> out;

    out.push_back(log_le("Ftrivial.lower", g, lambda, {{1 + n * lambda, Rational(1, n)}}, f_g));
    out.push_back(log_le("Ftrivial.upper", g, lambda, f_g, {{1 + lambda, Rational(1)}}));
    out.push_back(log_le("Fregular.lower", g, lambda, {{1 + (delta + 1) * lambda, Rational(1, delta + 1)}}, f_g));
    if (delta >= 1 && dm.max_degree == g.min_degree()) {
        Rational b = 2 * pow(Rational(1 + lambda), delta) - 1;
        out.push_back(log_le("Fregular.upper", g, lambda, f_g, {{b, Rational(1, 2 * delta)}}));
    }

    std::map<int, int> by_degree;
    for (int d : dm.degree)
        ++by_degree[d];
    std::vector<LogTerm> lower;
    for (const auto& [d, count] : by_degree) {
        Rational w(count, n * (d + 1));
        w.canonicalize();
        lower.push_back({1 + (d + 1) * lambda, w});
    }
    out.push_back(log_le("Fdegrees.lower", g, lambda, lower, f_g));

    std::map<std::pair<int, int>, int> by_pair;
    for (const auto& p : edge_degree_pairs(g))
        ++by_pair[p];
    std::vector<LogTerm> upper;
    for (const auto& [p, count] : by_pair) {
        Rational w(count, n * p.first * p.second);
        w.canonicalize();
        upper.push_back({complete_bipartite_polynomial(p.first, p.second).evaluate(lambda), w});
    }
    if (by_degree.count(0)) {
        Rational w(by_degree[0], n);
        w.canonicalize();
        upper.push_back({1 + lambda, w});
    }
    out.push_back(log_le("Fdegrees.upper", g, lambda, f_g, upper));
    return out;
}

BoundCheck check_occupancy_degrees(const Graph& g, const Rational& lambda)
{
    require_positive(lambda);
    const int n = g.order();
    Rational e = occupancy_at(independence_polynomial(g), n, lambda);
    Rational bound = 0;
    for (int d : g.degrees())
        bound += f_lambda(d, lambda);
    bound /= n;
    BoundCheck c = exact_le("Edegrees", g, lambda, bound, e);
    int delta = g.max_degree();
    c.exploratory = lambda > Rational(3, (delta + 1) * (delta + 1));
    return c;
}

std::vector<BoundCheck> check_occupancy_bounds(const Graph& g, const Rational& lambda)
{
    require_positive(lambda);
    const int n = g.order();
    Rational e = occupancy_at(independence_polynomial(g), n, lambda);
    const int delta = g.max_degree();
    std::vector<BoundCheck> out;
    out.push_back(exact_le("Etrivial.lower", g, lambda, lambda / (1 + n * lambda), e));
    out.push_back(exact_le("Etrivial.upper", g, lambda, e, lambda / (1 + lambda)));
    out.push_back(exact_le("Eregular.lower", g, lambda, f_lambda(delta, lambda), e));
    if (delta >= 1 && delta == g.min_degree()) {
        Rational s = 1 + lambda;
        Rational bound = lambda * pow(s, delta - 1) / (2 * pow(s, delta) - 1);
        out.push_back(exact_le("Eregular.upper", g, lambda, e, bound));
    }
    out.push_back(check_occupancy_degrees(g, lambda));
    return out;
}

BoundCheck check_occupancy_tf(const Graph& g, const Rational& lambda, const Rational& tol)
{
    require_positive(lambda);
    if (!is_triangle_free(g))
        throw std::invalid_argument("check_occupancy_tf requires a triangle-free graph");
    const int n = g.order();
    Rational e = occupancy_at(independence_polynomial(g), n, lambda);
    std::map<int, int> by_degree;
    for (int d : g.degrees())
        ++by_degree[d];
    auto enclose = [&](const Rational& t) {
        RationalInterval sum(Rational(0));
        for (const auto& [d, count] : by_degree)
            sum = sum + scaled(g_tf_interval(d, lambda, t), Rational(count));
        return Enclosures{scaled(sum, Rational(1, n)), RationalInterval(e)};
    };
    BoundCheck c = make_check("EdegreesTF", g, lambda);
    Enclosures last;
    c.verdict = certified_le(enclose, tol, &last);
    c.lhs = last.lhs.to_decimal(display_digits);
    c.rhs = to_string(e);
    if (last.lhs.lo() == last.lhs.hi() && last.lhs.lo() == e)
        c.verdict.note = "equality";
    int delta = g.max_degree();
    if (delta > 0)
        c.exploratory = lambda > triangle_free_range_constant() / pow(Rational(delta), 4);
    return c;
}

std::vector<BoundCheck> check_variance_bounds(const Graph& g, const Rational& lambda)
{
    require_positive(lambda);
    const int n = g.order();
    Rational v = variance_at(independence_polynomial(g), n, lambda);
    std::vector<BoundCheck> out;
    BoundCheck lower = exact_le("Vtrivial.lower", g, lambda, lambda / pow(Rational(1 + n * lambda), 2), v);
    lower.exploratory = !(lambda < Rational(1, 2 * n - 1));
    out.push_back(lower);
    BoundCheck upper = exact_le("Vtrivial.upper", g, lambda, v, lambda / pow(Rational(1 + lambda), 2));
    upper.exploratory = lambda > Rational(1, n);
    out.push_back(upper);
    int delta = g.max_degree();
    BoundCheck conj = exact_le("Vregular.conjecture", g, lambda, lambda / pow(Rational(1 + (delta + 1) * lambda), 2), v);
    conj.exploratory = true;
    out.push_back(conj);
    return out;
}

namespace {

RatFunc p5_difference()
{
    RatFunc v = variance_fraction(generate("path:5"));
    RatFunc bound = RatFunc::ratio(IntPoly::x(), IntPoly{Integer(1), Integer(2), Integer(1)});
    return v - bound;
}

}  // namespace

IsolatingInterval p5_largest_crossing(const Rational& width)
{
    RatFunc diff = p5_difference();
    auto roots = isolate_positive_roots(diff.numerator());
    if (roots.empty())
        throw std::logic_error("difference numerator has no positive root");
    return refine_root(diff.numerator(), roots.back(), width);
}

std::vector<BoundCheck> check_p5_threshold()
{
    const Graph p5 = generate("path:5");
    const IntPoly z = independence_polynomial(p5);
    std::vector<BoundCheck> out;

    Rational at33(33);
    Rational v33 = variance_at(z, 5, at33), b33 = at33 / (34 * 34);
    BoundCheck strict = make_check("P5.strict_at_33", p5, at33);
    strict.lhs = to_string(v33);
    strict.rhs = to_string(b33);
    strict.verdict = v33 > b33 ? Verdict::holds(Rational(v33 - b33)) : Verdict::fails(at33, Rational(v33 - b33));
    out.push_back(strict);

    RatFunc diff = p5_difference();
    const RatPoly& num = diff.numerator();
    const RatPoly& den = diff.denominator();
    BoundCheck beyond = make_check("P5.no_crossing_beyond_33", p5, at33);
    Verdict den_positive = sturm_nonneg_on_halfline(den);
    bool den_ok = den_positive.ok() && den.evaluate(Rational(0)) > 0 && isolate_positive_roots(den).empty();
    IntPoly q = square_free_integer(num);
    auto tail = isolate_roots_in(num, at33, root_bound(q) + at33);
    Rational num33 = num.evaluate(at33);
    IsolatingInterval top = p5_largest_crossing(Rational(1, 1000));
    beyond.lhs = "largest root of the difference numerator in [" + to_string(top.lo) + ", " + to_string(top.hi) + "]";
    beyond.rhs = "33";
    if (den_ok && tail.empty() && num33 > 0)
        beyond.verdict = Verdict::holds(num33);
    else
        beyond.verdict = Verdict::fails(tail.empty() ? at33 : tail.front().lo);
    out.push_back(beyond);

    BoundCheck window = make_check("P5.largest_crossing_in_(32,33]", p5, Rational(0));
    window.lhs = "[" + to_string(top.lo) + ", " + to_string(top.hi) + "]";
    window.rhs = "(32, 33]";
    bool inside = top.lo >= 32 && num.evaluate(Rational(32)) != 0 && top.hi <= 33 && top.width() <= Rational(1, 1000);
    window.verdict = inside ? Verdict::holds() : Verdict::fails(top.lo);
    out.push_back(window);

    Rational one(1);
    Rational v1 = variance_at(z, 5, one);
    BoundCheck reversed = exact_le("P5.reversed_at_1", p5, one, v1, Rational(1, 4));
    out.push_back(reversed);
    return out;
}

Rational cycle_variance_ratio(int n, const Rational& lambda)
{
    require_positive(lambda);
    IntPoly z = path_cycle_polynomial(PathCycle::cycle, n);
    return variance_at(z, n, lambda) / (lambda / pow(Rational(1 + lambda), 2));
}

BoundCheck check_cycle_growth(int n, const std::vector<Rational>& ladder)
{
    if (ladder.empty())
        throw std::invalid_argument("check_cycle_growth needs at least one lambda");
    BoundCheck c;
    c.bound = "cycle_growth";
    c.graph = "cycle:" + std::to_string(n);
    c.lambda = ladder.back();
    std::vector<Rational> ratios;
    for (const auto& l : ladder)
        ratios.push_back(cycle_variance_ratio(n, l));
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (i)
            c.lhs += ", ";
        c.lhs += "λ=" + to_string(ladder[i]) + ": " + to_decimal(ratios[i], 12);
    }
    c.rhs = ladder.size() > 1 ? "strictly increasing" : "no assertion";
    c.verdict = Verdict::holds();
    for (std::size_t i = 1; i < ratios.size(); ++i)
        if (!(ratios[i] > ratios[i - 1])) {
            c.verdict = Verdict::fails(ladder[i]);
            break;
        }
    return c;
}

BoundCheck check_local_occupancy(const Graph& g, const Rational& beta, const Rational& gamma, const Rational& lambda)
{
    require_positive(lambda);
    if (g.max_degree() > 20)
        throw std::invalid_argument("local occupancy enumeration supports maximum degree at most 20");
    BoundCheck c = make_check("lococc", g, lambda);
    PartitionFunctionCache cache(g);
    const Rational occupied = lambda / (1 + lambda);
    std::optional<Rational> worst;
    std::string worst_at;
    for (int u = 0; u < g.order(); ++u) {
        VertexSet nu = g.neighbors(u);
        for (VertexSet f = nu;; f = (f - 1) & nu) {
            const IntPoly& zf = cache.polynomial(f);
            Rational zv = zf.evaluate(lambda);
            Rational value = beta * occupied / zv + gamma * lambda * zf.derivative().evaluate(lambda) / zv;
            Rational slack = value - 1;
            if (!worst || slack < *worst) {
                worst = slack;
                std::string members;
                for (VertexSet r = f; r; r &= r - 1)
                    members += (members.empty() ? "" : ",") + std::to_string(lowest_vertex(r));
                worst_at = "u=" + std::to_string(u) + " F={" + members + "}";
            }
            if (f == 0)
                break;
        }
    }
    if (!worst) {
        c.verdict = Verdict::holds();
        return c;
    }
    c.lhs = to_string(Rational(*worst + 1));
    c.rhs = "1";
    c.verdict = *worst >= 0 ? Verdict::holds(*worst) : Verdict::fails(Location{worst_at}, *worst);
    c.verdict.note = "minimum over (u, F) at " + worst_at + "; beta=" + to_string(beta) + " gamma=" + to_string(gamma);
    return c;
}

BoundCheck check_weighted_marginal_sum(const Graph& g, const Rational& lambda, MarginalWeight weight,
                                       const Rational& tol)
{
    require_positive(lambda);
    const int n = g.order();
    std::vector<Rational> p = marginal_values(g, lambda);
    std::vector<int> deg = g.degrees();
    if (weight == MarginalWeight::f) {
        Rational sum = 0;
        for (int u = 0; u < n; ++u)
            sum += p[static_cast<std::size_t>(u)] / f_lambda(deg[static_cast<std::size_t>(u)], lambda);
        sum /= n;
        return exact_le("marginal_sum.f", g, lambda, Rational(1), sum);
    }
    if (!is_triangle_free(g))
        throw std::invalid_argument("the Lambert-W weight requires a triangle-free graph");
    auto enclose = [&](const Rational& t) {
        RationalInterval sum(Rational(0));
        Rational each = t / (4 * n);
        for (int u = 0; u < n; ++u) {
            const Rational& pu = p[static_cast<std::size_t>(u)];
            RationalInterval w = g_tf_interval(deg[static_cast<std::size_t>(u)], lambda, each * lambda * lambda);
            sum = sum + RationalInterval(pu) / w;
        }
        return Enclosures{RationalInterval(Rational(1)), scaled(sum, Rational(1, n))};
    };
    BoundCheck c = make_check("marginal_sum.g_tf", g, lambda);
    Enclosures last;
    c.verdict = certified_le(enclose, tol, &last);
    c.lhs = "1";
    c.rhs = last.rhs.to_decimal(display_digits);
    return c;
}

namespace {

// Replaces an inconclusive enclosure verdict by an exact power comparison when the
// powers stay below a few million bits.
void exact_log_fallback(BoundCheck& c, const std::vector<LogTerm>& lhs, const std::vector<LogTerm>& rhs)
{
    if (c.verdict.status != Status::inconclusive)
        return;
    auto bits = [](const Rational& r) {
        return static_cast<double>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2) + mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
    };
    Integer common = 1;
    for (const auto* side : {&lhs, &rhs})
        for (const auto& t : *side)
            common = lcm_of(common, t.weight.get_den());
    double cost = 0;
    for (const auto* side : {&lhs, &rhs})
        for (const auto& t : *side)
            cost += Rational(t.weight * common).get_d() * bits(t.base);
    if (cost >= 4.0e6)
        return;
    int s = compare_log_sums(lhs, rhs);
    c.verdict = s <= 0 ? Verdict::holds() : Verdict::fails(c.lambda);
    c.verdict.note = s == 0 ? "equality (exact power comparison)" : "exact power comparison";
}

}  // namespace

std::vector<BoundCheck> check_combined_chain(const Graph& g, const Rational& lambda, const Rational& tol)
{
    require_positive(lambda);
    const int n = g.order();
    const IntPoly zp = independence_polynomial(g);
    const Rational z = zp.evaluate(lambda);
    const Rational e = occupancy_at(zp, n, lambda);
    if (!(e > 0 && e < 1))
        throw std::invalid_argument("the combined chain needs 0 < E < 1");
    std::vector<BoundCheck> out;

    const Rational c1 = (1 + lambda) * e / lambda;
    auto first = [&](const Rational& t) {
        RationalInterval lhs = scaled(log1p_interval(lambda, t / (2 * c1)), c1);
        return Enclosures{lhs, free_energy_interval(zp, n, lambda, t / 2)};
    };
    BoundCheck b1 = make_check("combined.first", g, lambda);
    Enclosures last;
    b1.verdict = certified_le(first, tol, &last);
    exact_log_fallback(b1, {{1 + lambda, c1}}, {{z, Rational(1, n)}});
    b1.lhs = last.lhs.to_decimal(display_digits);
    b1.rhs = last.rhs.to_decimal(display_digits);
    out.push_back(b1);

    auto middle = [&](const Rational& t) {
        RationalInterval log_l = lambda == 1 ? RationalInterval(Rational(0)) : log_interval(lambda, t / 4);
        return scaled(log_l, e) + entropy_interval(e, t / 4);
    };
    auto second = [&](const Rational& t) { return Enclosures{free_energy_interval(zp, n, lambda, t / 2), middle(t)}; };
    BoundCheck b2 = make_check("combined.second", g, lambda);
    b2.verdict = certified_le(second, tol, &last);
    // (1/n) log Z + E log E + (1-E) log(1-E) <= E log(lambda), all weights nonnegative.
    exact_log_fallback(b2, {{z, Rational(1, n)}, {e, e}, {1 - e, 1 - e}}, {{lambda, e}});
    b2.lhs = last.lhs.to_decimal(display_digits);
    b2.rhs = last.rhs.to_decimal(display_digits);
    out.push_back(b2);

    auto third = [&](const Rational& t) {
        RationalInterval log_l = lambda == 1 ? RationalInterval(Rational(0)) : log_interval(lambda, t / 8);
        RationalInterval rhs = scaled(RationalInterval(Rational(1)) + log_l - log_interval(e, t / 8), e);
        return Enclosures{middle(t), rhs};
    };
    BoundCheck b3 = make_check("combined.third", g, lambda);
    b3.verdict = certified_le(third, tol, &last);
    b3.lhs = last.lhs.to_decimal(display_digits);
    b3.rhs = last.rhs.to_decimal(display_digits);
    out.push_back(b3);
    return out;
}

std::vector<BoundCheck> check_edge_occ_counterexamples(const Rational& lambda)
{
    require_positive(lambda);
    std::vector<BoundCheck> out;
    for (const auto& cx : displayed_counterexamples()) {
        Graph g = generate(cx.spec);
        RatFunc e = occupancy_fraction(g);
        RatFunc sum = edge_sum_function(g);
        out.push_back(identity_check("OCCcx." + cx.spec + ".occupancy_formula", g, e, cx.occupancy));
        out.push_back(identity_check("OCCcx." + cx.spec + ".edge_sum_formula", g, sum, cx.edge_sum));
        Rational ev = e.evaluate(lambda), sv = sum.evaluate(lambda);
        BoundCheck below = make_check("OCCcx." + cx.spec + ".edge_sum_below", g, lambda);
        below.lhs = to_string(sv);
        below.rhs = to_string(ev);
        below.verdict = sv < ev ? Verdict::holds(Rational(ev - sv)) : Verdict::fails(lambda, Rational(ev - sv));
        out.push_back(below);
    }
    return out;
}

BoundCheck check_vertex_f_upper(const Graph& g, const Rational& lambda)
{
    require_positive(lambda);
    const int n = g.order();
    const Rational z = independence_polynomial(g).evaluate(lambda);
    std::map<int, int> by_degree;
    for (int d : g.degrees())
        ++by_degree[d];
    std::vector<LogTerm> rhs;
    for (const auto& [d, count] : by_degree) {
        if (d == 0) {
            rhs.push_back({1 + lambda, Rational(count, n)});
            continue;
        }
        Rational w(count, 2 * d * n);
        w.canonicalize();
        rhs.push_back({2 * pow(Rational(1 + lambda), d) - 1, w});
    }
    BoundCheck c = log_le("Fvertex.upper", g, lambda, {{z, Rational(1, n)}}, rhs);
    c.exploratory = true;
    return c;
}

std::vector<BoundCheck> check_all_bounds(const Graph& g, const Rational& lambda, const Rational& tol)
{
    std::vector<BoundCheck> out = check_free_energy_bounds(g, lambda);
    auto append = [&](std::vector<BoundCheck> more) { out.insert(out.end(), more.begin(), more.end()); };
    append(check_occupancy_bounds(g, lambda));
    append(check_variance_bounds(g, lambda));
    bool tf = is_triangle_free(g);
    if (tf)
        out.push_back(check_occupancy_tf(g, lambda, tol));
    if (g.max_degree() <= 20)
        out.push_back(check_local_occupancy(g, 1 + 1 / lambda, Rational(1), lambda));
    out.push_back(check_weighted_marginal_sum(g, lambda, MarginalWeight::f, tol));
    if (tf)
        out.push_back(check_weighted_marginal_sum(g, lambda, MarginalWeight::g_tf, tol));
    append(check_combined_chain(g, lambda, tol));
    out.push_back(check_vertex_f_upper(g, lambda));
    return out;
}

}  // namespace hardcore
