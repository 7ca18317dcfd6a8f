// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hardcore/bounds.hpp"
#include "hardcore/engine.hpp"
#include "hardcore/graph_corpus.hpp"
#include "hardcore/orderings.hpp"
#include "hardcore/sampler.hpp"
#include "hardcore/series.hpp"

using namespace hardcore;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

Rational q(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

Rational power_of_ten(int e)
{
    return e >= 0 ? pow(Rational(10), e) : 1 / pow(Rational(10), -e);
}

bool independent(const Graph& g, VertexSet s)
{
    for (VertexSet r = s; r; r &= r - 1)
        if (g.neighbors(lowest_vertex(r)) & s)
            return false;
    return true;
}

// E and V straight from the weighted independent sets.
struct Moments {
    Rational e, v;
};

Moments moments(const Graph& g, const Rational& lambda)
{
    Rational z = 0, first = 0, second = 0;
    for (VertexSet s = 0; s < (VertexSet{1} << g.order()); ++s) {
        if (!independent(g, s))
            continue;
        int k = popcount(s);
        Rational w = pow(lambda, k);
        z += w;
        first += k * w;
        second += k * k * w;
    }
    Rational mean = first / z;
    return {mean / g.order(), (second / z - mean * mean) / g.order()};
}

Graph random_small_graph(std::mt19937_64& rng, int max_n)
{
    std::uniform_int_distribution<int> n(1, max_n);
    std::uniform_real_distribution<double> p(0.05, 0.8);
    return random_graph(n(rng), p(rng), rng);
}

bool all_ok(const std::vector<BoundCheck>& checks, std::string* which)
{
    for (const auto& c : checks)
        if (!c.exploratory && !c.verdict.ok()) {
            *which = c.bound + " on " + c.graph + " at " + to_string(c.lambda) + " is " + to_string(c.verdict.status);
            return false;
        }
    return true;
}

Rational var_at(const IntPoly& p, const Rational& x)
{
    Rational z = p.evaluate(x), d1 = p.derivative().evaluate(x), d2 = p.derivative().derivative().evaluate(x);
    return (x * x * d2 + x * d1) / z - x * x * d1 * d1 / (z * z);
}

Outcome ordering_examples()
{
    Outcome o;
    const IntPoly p{1, 9, 30, 45, 30, 9, 1};
    const IntPoly q1{1, 9, 30, 44, 24}, q2{1, 9, 30, 44, 24, 9}, q3{1, 9, 30, 44, 24, 10};

    o.require(compare(OrderingKind::fv, p, q1).ok(), "first pair FV");
    o.require(compare(OrderingKind::var, p, q1).ok(), "first pair VAR");
    IntPoly factored = IntPoly::monomial(3, 3) * IntPoly{1, 2}.pow(4) * IntPoly{1, 3, 1}.pow(4) *
                       IntPoly{3, 32, 118, 176, 86};
    o.require(var_difference_certificate(p, q1) == to_rat(factored), "first certificate");

    Verdict fv2 = compare(OrderingKind::fv, p, q2);
    o.require(fv2.status == Status::fails && std::get<CoefficientIndex>(fv2.witness).k == 4, "second pair FV at k=4");
    o.require(compare(OrderingKind::var, p, q2).ok(), "second pair VAR");
    IntPoly displayed{0, 0, 0, 9, 276, 3651, 27864, 137304, 460512, 1074906, 1748244, 1950525,
                      1472832, 864699, 739620, 926244, 887748, 554664, 223380, 56373, 8136, 513};
    o.require(var_difference_certificate(p, q2) == to_rat(displayed), "degree-21 certificate");

    Verdict coef3 = compare(OrderingKind::coef, p, q3);
    o.require(coef3.status == Status::fails && std::get<CoefficientIndex>(coef3.witness).k == 5, "third pair COEF");
    o.require(compare(OrderingKind::var, p, q3).ok(), "third pair VAR");

    struct Pair {
        IntPoly p, q;
        Rational vq, vp;
    };
    const std::vector<Pair> pairs{
        {IntPoly{1, 4, 2, 2}, IntPoly{1, 2, 1, 1}, q(26, 25), q(74, 81)},
        {IntPoly{1, 10, 210, 21, 21, 21}, IntPoly{1, 10, 10, 1, 1, 1}, q(53, 48), q(18619, 20164)},
        {IntPoly{1, 10, 1, 20010, 2001, 2001}, IntPoly{1, 10, 1, 10, 1, 1}, q(293, 192), q(68604293, 192384192)},
    };
    for (const auto& pr : pairs) {
        o.require(compare(OrderingKind::fv, pr.p, pr.q).ok(), "FV-without-VAR pair: FV");
        o.require(compare(OrderingKind::var, pr.p, pr.q).status == Status::fails, "FV-without-VAR pair: VAR should fail");
        o.require(var_at(pr.q, Rational(1)) == pr.vq && var_at(pr.p, Rational(1)) == pr.vp,
                  "FV-without-VAR pair: values at 1");
    }
    o.detail = o.pass ? "all four pair families, both certificates and three value pairs exact" : o.detail;
    return o;
}

Outcome counterexamples()
{
    Outcome o;
    auto checks = check_edge_occ_counterexamples(Rational(5));
    std::string which;
    o.require(checks.size() == 9, "expected nine checks");
    o.require(all_ok(checks, &which), which);
    for (const char* spec : {"g1", "g2"}) {
        Graph g = generate(spec);
        auto found = search_six_vertex_graphs(independence_polynomial(g), edge_degree_pairs(g));
        bool present = false;
        for (const auto& h : found)
            present = present || canonical_code(h) == canonical_code(g);
        o.require(!found.empty() && present, std::string("search did not recover ") + spec);
    }
    if (o.pass)
        o.detail = "G1, G2, Pasch formulas identical; edge sums below E at 5; search recovers G1 and G2";
    return o;
}

Outcome edegrees_corpus()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::vector<Graph> graphs = enumerate_graphs_up_to(7, true);
    const std::size_t exhaustive = graphs.size();
    for (int i = 0; i < 10000; ++i)
        graphs.push_back(random_small_graph(rng, 12));
    int equalities = 0;
    for (const Graph& g : graphs) {
        const int n = g.order();
        Rational lambda = Rational(3) / ((g.max_degree() + 1) * (g.max_degree() + 1));
        Rational bound = 0;
        for (int d : g.degrees())
            bound += lambda / (1 + (d + 1) * lambda);
        bound /= n;
        Rational e = moments(g, lambda).e;
        BoundCheck c = check_occupancy_degrees(g, lambda);
        o.require(c.verdict.ok() && *c.verdict.margin == e - bound, "Edegrees mismatch on " + encode_graph6(g));
        o.require(e >= bound, "oracle violation on " + encode_graph6(g));
        bool equal = e == bound;
        equalities += equal;
        o.require(equal == is_disjoint_union_of_cliques(g), "equality case mismatch on " + encode_graph6(g));
        if (!o.pass)
            break;
    }
    if (o.pass)
        o.detail = std::to_string(exhaustive) + " connected + 10000 random graphs; " + std::to_string(equalities) +
                   " equalities, all clique unions";
    return o;
}

Outcome vbounds_corpus()
{
    Outcome o;
    std::vector<Graph> graphs = enumerate_graphs_up_to(7, false);
    for (const Graph& g : graphs) {
        const int n = g.order();
        Rational low = q(1, 2 * n), high = q(1, n);
        Rational v_low = moments(g, low).v, v_high = moments(g, high).v;
        Rational lower = low / pow(Rational(1 + n * low), 2), upper = high / pow(Rational(1 + high), 2);
        auto a = check_variance_bounds(g, low), b = check_variance_bounds(g, high);
        const BoundCheck* lc = nullptr;
        const BoundCheck* uc = nullptr;
        for (const auto& c : a)
            if (c.bound == "Vtrivial.lower")
                lc = &c;
        for (const auto& c : b)
            if (c.bound == "Vtrivial.upper")
                uc = &c;
        o.require(lc && uc, "missing variance checks");
        if (!o.pass)
            break;
        o.require(lc->verdict.ok() && *lc->verdict.margin == v_low - lower, "lower bound on " + encode_graph6(g));
        o.require(uc->verdict.ok() && *uc->verdict.margin == upper - v_high, "upper bound on " + encode_graph6(g));
        if (g.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2))
            o.require(v_low == lower, "K_n lower equality");
        if (g.edge_count() == 0)
            o.require(v_high == upper, "empty graph upper equality");
        if (!o.pass)
            break;
    }
    if (o.pass)
        o.detail = std::to_string(graphs.size()) + " graphs; K_n and empty graphs attain equality";
    return o;
}

Outcome tf_spot_checks()
{
    Outcome o;
    const Rational tol = power_of_ten(-30);
    std::vector<Graph> graphs{generate("cycle:5"), generate("kab:3,3"), generate("petersen")};
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> n(2, 12);
    std::uniform_real_distribution<double> p(0.2, 0.7);
    while (graphs.size() < 103) {
        Graph g = random_triangle_free_graph(n(rng), p(rng), rng);
        if (g.max_degree() > 0)
            graphs.push_back(g);
    }
    for (const Graph& g : graphs) {
        Rational lambda = triangle_free_range_constant() / pow(Rational(g.max_degree()), 4);
        BoundCheck c = check_occupancy_tf(g, lambda, tol);
        o.require(c.verdict.status == Status::holds,
                  "EdegreesTF on " + encode_graph6(g) + " is " + to_string(c.verdict.status));
    }
    if (o.pass)
        o.detail = "103 graphs certified at lambda = 1e-2/Delta^4, tol 1e-30";
    return o;
}

Outcome series_prover()
{
    Outcome o;
    for (const SeriesReport& r : {verify_t_coefficients(), verify_tprime_coefficients(),
                                  verify_tdoubleprime_coefficients(), verify_fidentity()}) {
        for (const auto& c : r.checks)
            o.require(c.ok || c.exploratory, r.name + "/" + c.id);
    }
    for (const char* spec : {"cycle:5", "petersen", "kab:1,2", "kab:3,3"}) {
        SeriesReport r = verify_b_coefficients(generate(spec));
        for (const auto& c : r.checks)
            o.require(c.ok || c.exploratory, r.name + "/" + c.id);
    }
    if (o.pass)
        o.detail = "t, t', t'' coefficients, f identity and b0..b3 on four graphs exact";
    return o;
}

Outcome p5_threshold()
{
    Outcome o;
    std::string which;
    o.require(all_ok(check_p5_threshold(), &which), which);
    IsolatingInterval root = p5_largest_crossing(q(1, 1000000));
    o.require(root.lo > 32 && root.hi <= 33, "largest crossing outside (32, 33]");
    if (o.pass)
        o.detail = "largest crossing in [" + to_decimal(root.lo, 10) + ", " + to_decimal(root.hi, 10) + "]";
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    std::vector<Graph> graphs = enumerate_graphs_up_to(8, false);
    const std::size_t exhaustive = graphs.size();
    std::mt19937_64 rng(8675309);
    for (int i = 0; i < 200; ++i)
        graphs.push_back(random_small_graph(rng, 12));
    for (const Graph& g : graphs)
        o.require(independence_polynomial(g) == brute_force_polynomial(g), "mismatch on " + encode_graph6(g));
    for (int n = 3; n <= 20; ++n)
        o.require(path_cycle_polynomial(PathCycle::cycle, n) == brute_force_polynomial(generate("cycle:" + std::to_string(n))),
                  "cycle recurrence at n=" + std::to_string(n));
    if (o.pass)
        o.detail = std::to_string(exhaustive) + " graphs n<=8, 200 random n<=12, cycles 3..20";
    return o;
}

Outcome local_occupancy()
{
    Outcome o;
    std::vector<Graph> graphs = enumerate_graphs_up_to(7, false);
    const Rational tol = power_of_ten(-20);
    for (const Graph& g : graphs)
        for (const Rational& l : {q(1, 2), Rational(1), Rational(2)}) {
            BoundCheck a = check_local_occupancy(g, 1 + 1 / l, Rational(1), l);
            BoundCheck b = check_weighted_marginal_sum(g, l, MarginalWeight::f, tol);
            o.require(a.verdict.ok(), "lococc on " + encode_graph6(g));
            o.require(b.verdict.ok(), "f-weighted sum on " + encode_graph6(g));
        }
    if (o.pass)
        o.detail = std::to_string(graphs.size()) + " graphs at lambda in {1/2, 1, 2}";
    return o;
}

Outcome implication_web_pairs()
{
    Outcome o;
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> deg(0, 8), coeff(1, 50), shift(0, 6), coin(0, 1);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        // Positive coefficients up to the degree; every other pair is a perturbed copy.
        std::vector<Integer> ca{Integer(1)};
        int da = deg(rng);
        for (int k = 1; k <= da; ++k)
            ca.emplace_back(coeff(rng));
        std::vector<Integer> cb{Integer(1)};
        if (i % 2 == 0) {
            int db = deg(rng);
            for (int k = 1; k <= db; ++k)
                cb.emplace_back(coeff(rng));
        } else {
            int db = std::max(0, da - coin(rng));
            for (int k = 1; k <= db; ++k) {
                Integer c = ca[static_cast<std::size_t>(k)] - shift(rng);
                cb.push_back(c < 1 ? Integer(1) : c);
            }
        }
        IntPoly a(ca), b(cb);
        ImplicationReport r = implication_web_check(a, b);
        if (!r.violations.empty()) {
            ++violations;
            o.require(false, r.violations.front() + " on " + to_text(a) + " vs " + to_text(b));
        }
    }
    if (o.pass)
        o.detail = "10000 pairs, 0 violations";
    else
        o.detail += " (" + std::to_string(violations) + " violating pairs)";
    return o;
}

Outcome combined_chain()
{
    Outcome o;
    const Rational tol = power_of_ten(-20);
    std::vector<Graph> corpus = enumerate_graphs_up_to(8, false);
    std::mt19937_64 rng(4242);
    std::vector<Graph> sample;
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    while (sample.size() < 50)
        sample.push_back(corpus[pick(rng)]);
    std::string which;
    for (const Graph& g : sample)
        for (const Rational& l : {q(1, 4), Rational(1), Rational(4)})
            o.require(all_ok(check_combined_chain(g, l, tol), &which), which);

    // Empty graph: (1+lambda)E/lambda log(1+lambda) and F_G coincide.
    Graph empty = generate("empty:3");
    const Rational l(1);
    const Rational t = power_of_ten(-16);
    IntPoly z = independence_polynomial(empty);
    Rational c1 = (1 + l) * occupancy_at(z, 3, l) / l;
    RationalInterval gap = log1p_interval(l, t) * RationalInterval(c1) - free_energy_interval(z, 3, l, t);
    o.require(gap.contains_zero() && gap.width() <= power_of_ten(-15), "empty graph first link enclosure");
    if (o.pass)
        o.detail = "50 graphs x 3 fugacities certified; empty-graph gap width " + to_decimal(gap.width(), 3);
    return o;
}

Outcome sampler_matrix()
{
    Outcome o;
    const std::vector<std::string> specs{"path:5", "cycle:6", "kn:4", "kab:3,3", "petersen", "empty:4", "g1"};
    const std::vector<Rational> lambdas{q(1, 4), Rational(1), Rational(4)};
    int cases = 0, within = 0;
    std::string worst;
    for (std::size_t i = 0; i < specs.size() && cases < 20; ++i)
        for (std::size_t j = 0; j < lambdas.size() && cases < 20; ++j) {
            Graph g = generate(specs[i]);
            const Rational& l = lambdas[j];
            IntPoly z = independence_polynomial(g);
            double ne = Rational(g.order() * occupancy_at(z, g.order(), l)).get_d();
            double nv = Rational(g.order() * variance_at(z, g.order(), l)).get_d();
            EstimateReport r = estimate(g, l, 1000000, default_burn_in, 1000 + static_cast<std::uint64_t>(cases));
            bool ok = std::abs(r.n_e - ne) <= 3 * r.n_e_se && std::abs(r.n_v - nv) <= 3 * r.n_v_se;
            ++cases;
            within += ok;
            if (!ok && worst.empty()) {
                std::ostringstream s;
                s << specs[i] << " at " << to_string(l) << ": nE " << r.n_e << " vs " << ne << " (se " << r.n_e_se
                  << "), nV " << r.n_v << " vs " << nv << " (se " << r.n_v_se << ")";
                worst = s.str();
            }
        }
    o.require(within == cases, std::to_string(cases - within) + " of " + std::to_string(cases) + " outside 3 SE; first: " + worst);
    Graph g = generate("petersen");
    std::string a = to_json(estimate(g, Rational(1), 1000000, default_burn_in, 99)).dump();
    std::string b = to_json(estimate(g, Rational(1), 1000000, default_burn_in, 99)).dump();
    o.require(a == b, "fixed-seed runs differ");
    if (o.pass)
        o.detail = std::to_string(cases) + " cases within 3 SE; fixed-seed output identical";
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "ordering examples", 5, ordering_examples},
        {2, "occupancy counterexamples", 60, counterexamples},
        {3, "Edegrees corpus", 600, edegrees_corpus},
        {4, "Vbounds corpus", 300, vbounds_corpus},
        {5, "EdegreesTF spot checks", 300, tf_spot_checks},
        {6, "series prover", 60, series_prover},
        {7, "P5 threshold", 5, p5_threshold},
        {8, "oracle equivalence", 300, oracle_equivalence},
        {9, "local occupancy", 600, local_occupancy},
        {10, "implication web", 120, implication_web_pairs},
        {11, "combined chain", 300, combined_chain},
        {12, "sampler cross-validation", 300, sampler_matrix},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && seconds > c.limit_seconds) {
            o.pass = false;
            o.detail += "; exceeded the time limit";
        }
        failures += !o.pass;
        std::printf("%s %2d %s (%.1fs, limit %.0fs): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                    c.limit_seconds, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
