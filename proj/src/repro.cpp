#include "hardcore/repro.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>

#include "hardcore/bounds.hpp"
#include "hardcore/engine.hpp"
#include "hardcore/graph_corpus.hpp"
#include "hardcore/orderings.hpp"
#include "hardcore/sampler.hpp"
#include "hardcore/series.hpp"

namespace hardcore {

namespace {

using json = nlohmann::json;

Rational rat(long p, long q = 1)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

IntPoly poly(std::initializer_list<long> coeffs)
{
    std::vector<Integer> v;
    for (long c : coeffs)
        v.emplace_back(c);
    return IntPoly(std::move(v));
}

std::string status_word(Status s)
{
    switch (s) {
    case Status::holds:
        return "verified";
    case Status::fails:
        return "failed";
    case Status::inconclusive:
        return "inconclusive";
    }
    return "failed";
}

// Gathers checks and folds their outcome into one status.
class Collector {
public:
    void expect(bool ok) { status_ = combine(status_, ok ? Status::holds : Status::fails); }
    void expect_status(Status s) { status_ = combine(status_, s); }

    void add_bound(const BoundCheck& c)
    {
        if (!c.exploratory)
            expect_status(c.verdict.status);
        checks_.push_back(to_json(c));
    }

    void add_bounds(const std::vector<BoundCheck>& cs)
    {
        for (const auto& c : cs)
            add_bound(c);
    }

    // Only failures are kept in the payload for large sweeps.
    void tally_bound(const BoundCheck& c)
    {
        ++count_;
        if (c.exploratory)
            return;
        expect_status(c.verdict.status);
        if (c.verdict.status != Status::holds && failures_.size() < 20)
            failures_.push_back(to_json(c));
    }

    void add_series(const SeriesReport& r)
    {
        expect(r.ok());
        checks_.push_back(to_json(r));
    }

    void add_json(json j) { checks_.push_back(std::move(j)); }

    ReproItem finish(std::string id, std::string claim, json extra = json::object()) const
    {
        json payload{{"claim", std::move(claim)}};
        if (!checks_.empty())
            payload["checks"] = checks_;
        if (count_)
            payload["checked"] = count_;
        if (count_ || !failures_.empty())
            payload["failures"] = failures_;
        for (auto it = extra.begin(); it != extra.end(); ++it)
            payload[it.key()] = it.value();
        return {std::move(id), status_word(status_), std::move(payload)};
    }

private:
    Status status_ = Status::holds;
    json checks_ = json::array();
    json failures_ = json::array();
    long count_ = 0;
};

json verdict_entry(const std::string& what, const Verdict& v)
{
    json j = to_json(v);
    j["check"] = what;
    return j;
}

ReproItem ordering_pair(const std::string& id, const std::string& claim, const IntPoly& p, const IntPoly& q,
                        const std::map<OrderingKind, Status>& expected, const std::function<void(Collector&)>& extra)
{
    Collector c;
    for (const auto& [kind, want] : expected) {
        Verdict v = compare(kind, p, q);
        c.expect(v.status == want);
        json j = verdict_entry(to_string(kind), v);
        j["expected"] = to_string(want);
        c.add_json(j);
    }
    if (extra)
        extra(c);
    return c.finish(id, claim, {{"P", to_text(p)}, {"Q", to_text(q)}});
}

ReproItem orderings_fv_var_both_hold()
{
    IntPoly p = poly({1, 3, 1}).pow(3);
    IntPoly q = poly({1, 2}).pow(3) * poly({1, 3});
    return ordering_pair(
        "orderings.fv_var_both_hold", "P = (1+3x+x^2)^3 and Q = (1+2x)^3 (1+3x) satisfy P >=FV Q and P >=VAR Q", p, q,
        {{OrderingKind::fv, Status::holds}, {OrderingKind::var, Status::holds}}, [&](Collector& c) {
            RatPoly cert = var_difference_certificate(p, q);
            RatPoly expect = to_rat(poly({0, 0, 0, 3}) * poly({1, 2}).pow(4) * poly({1, 3, 1}).pow(4) *
                                    poly({3, 32, 118, 176, 86}));
            c.expect(cert == expect);
            c.add_json({{"check", "certificate"},
                        {"value", to_pretty(cert, "x")},
                        {"factored", "3x^3 (2x+1)^4 (x^2+3x+1)^4 (86x^4+176x^3+118x^2+32x+3)"},
                        {"status", cert == expect ? "holds" : "fails"}});
        });
}

ReproItem orderings_fv_fails_var_holds()
{
    IntPoly p = poly({1, 3, 1}).pow(3);
    IntPoly q = poly({1, 9, 30, 44, 24, 9});
    return ordering_pair(
        "orderings.fv_fails_var_holds", "Q = 1+9x+30x^2+44x^3+24x^4+9x^5: P >=FV Q fails at k = 4 while P >=VAR Q", p, q,
        {{OrderingKind::fv, Status::fails}, {OrderingKind::var, Status::holds}}, [&](Collector& c) {
            Verdict fv = compare(OrderingKind::fv, p, q);
            c.expect(fv.witness == Witness{CoefficientIndex{4}});
            RatPoly cert = var_difference_certificate(p, q);
            IntPoly expect{Integer(0),      Integer(0),      Integer(0),       Integer(9),       Integer(276),
                           Integer(3651),   Integer(27864),  Integer(137304),  Integer(460512),  Integer(1074906),
                           Integer(1748244), Integer(1950525), Integer(1472832), Integer(864699),  Integer(739620),
                           Integer(926244), Integer(887748), Integer(554664),  Integer(223380),  Integer(56373),
                           Integer(8136),   Integer(513)};
            bool ok = cert == to_rat(expect);
            c.expect(ok);
            c.add_json({{"check", "certificate"}, {"value", to_pretty(cert, "x")}, {"status", ok ? "holds" : "fails"}});
        });
}

ReproItem orderings_coef_fails_var_holds()
{
    IntPoly p = poly({1, 3, 1}).pow(3);
    IntPoly q = poly({1, 9, 30, 44, 24, 10});
    return ordering_pair("orderings.coef_fails_var_holds",
                         "Q = 1+9x+30x^2+44x^3+24x^4+10x^5: P >=COEF Q fails at x^5 while P >=VAR Q", p, q,
                         {{OrderingKind::coef, Status::fails}, {OrderingKind::var, Status::holds}}, [&](Collector& c) {
                             Verdict coef = compare(OrderingKind::coef, p, q);
                             c.expect(coef.witness == Witness{CoefficientIndex{5}});
                         });
}

ReproItem orderings_fv_holds_var_fails()
{
    struct Case {
        IntPoly p, q;
        Rational vp, vq;
    };
    std::vector<Case> cases{
        {poly({1, 4, 2, 2}), poly({1, 2, 1, 1}), rat(74, 81), rat(26, 25)},
        {poly({1, 10, 210, 21, 21, 21}), poly({1, 10, 10, 1, 1, 1}), rat(18619, 20164), rat(53, 48)},
        {poly({1, 10, 1, 20010, 2001, 2001}), poly({1, 10, 1, 10, 1, 1}), rat(68604293, 192384192), rat(293, 192)},
    };
    Collector c;
    for (const auto& k : cases) {
        Verdict fv = compare(OrderingKind::fv, k.p, k.q);
        Verdict var = compare(OrderingKind::var, k.p, k.q);
        Rational vp = var_of_polynomial(k.p).evaluate(Rational(1));
        Rational vq = var_of_polynomial(k.q).evaluate(Rational(1));
        bool ok = fv.status == Status::holds && var.status == Status::fails && vp == k.vp && vq == k.vq && vq > vp;
        c.expect(ok);
        c.add_json({{"P", to_text(k.p)},
                    {"Q", to_text(k.q)},
                    {"FV", to_json(fv)},
                    {"VAR", to_json(var)},
                    {"V_P(1)", to_string(vp)},
                    {"V_Q(1)", to_string(vq)}});
    }
    return c.finish("orderings.fv_holds_var_fails", "three pairs with P >=FV Q where V_Q(1) > V_P(1), so P >=VAR Q fails");
}

ReproItem counterexample(const std::string& name)
{
    Collector c;
    for (const auto& b : check_edge_occ_counterexamples(Rational(5)))
        if (b.bound.rfind("OCCcx." + name + ".", 0) == 0)
            c.add_bound(b);
    return c.finish("counterexample." + name,
                    "engine E_G equals the displayed rational function, the edge sum "
                    "(1/n) sum_uv ((d_u+d_v)/(d_u d_v)) E_{K_{d_u,d_v}} equals its display, and it is strictly below E_G at lambda = 5");
}

ReproItem counterexample_search()
{
    Collector c;
    for (const char* name : {"g1", "g2"}) {
        Graph target = generate(name);
        auto found = search_six_vertex_graphs(independence_polynomial(target), edge_degree_pairs(target));
        bool ok = found.size() == 1 && canonical_code(found.front()) == canonical_code(target);
        c.expect(ok);
        c.add_json({{"graph", name}, {"classes_found", found.size()}, {"matches_generator", ok}});
    }
    return c.finish("counterexample.six_vertex_search",
                    "among all 2^15 labelled graphs on six vertices, exactly one isomorphism class has the partition "
                    "function and edge degree pairs of each displayed formula");
}

ReproItem vertex_f_upper()
{
    Collector c;
    BoundCheck b = check_vertex_f_upper(generate("path:4"), Rational(1));
    c.expect(b.verdict.status == Status::fails);
    Rational lhs = pow(Rational(independence_polynomial(generate("path:4")).evaluate(Rational(1))), 2);
    c.expect(lhs == 64);
    c.add_json(to_json(b));
    return c.finish("bounds.vertex_f_upper_fails",
                    "F_G <= (1/n) sum_u F_{K_{d_u,d_u}} fails for the path on four vertices at lambda = 1 (Z^2 = 64 > 63)");
}

ReproItem p5_threshold()
{
    Collector c;
    c.add_bounds(check_p5_threshold());
    return c.finish("p5.threshold",
                    "V_{P5}(lambda) > lambda/(1+lambda)^2 at lambda = 33 and beyond, the largest crossing lies in (32, 33], "
                    "and the inequality is reversed at lambda = 1");
}

ReproItem cycle_growth()
{
    Collector c;
    std::vector<Rational> ladder{Rational(1), Rational(10), Rational(100), Rational(1000), Rational(10000)};
    c.add_bound(check_cycle_growth(500, ladder));
    return c.finish("cycle.growth", "V_{C_n}(lambda) / (lambda/(1+lambda)^2) increases along a lambda ladder for n = 500");
}

ReproItem cycle_recurrence()
{
    Collector c;
    for (int n = 3; n <= 20; ++n) {
        bool ok = path_cycle_polynomial(PathCycle::cycle, n) == independence_polynomial(generate("cycle:" + std::to_string(n)));
        c.expect(ok);
    }
    return c.finish("cycle.recurrence", "the cycle recurrence matches the memoized recursion for 3 <= n <= 20");
}

std::vector<Graph> small_corpus(int max_n, bool connected)
{
    return enumerate_graphs_up_to(max_n, connected);
}

ReproItem fbounds_corpus()
{
    Collector c;
    for (const auto& g : small_corpus(5, true))
        for (const Rational& l : {rat(1, 2), Rational(1), Rational(2)})
            for (const auto& b : check_free_energy_bounds(g, l))
                c.tally_bound(b);
    return c.finish("bounds.free_energy.corpus",
                    "trivial, regular and degree-sequence free energy bounds on connected graphs n <= 5, lambda in {1/2, 1, 2}");
}

ReproItem ebounds_corpus()
{
    Collector c;
    for (const auto& g : small_corpus(5, true))
        for (const Rational& l : {rat(1, 2), Rational(1), Rational(2)})
            for (const auto& b : check_occupancy_bounds(g, l))
                c.tally_bound(b);
    return c.finish("bounds.occupancy.corpus",
                    "trivial and regular occupancy bounds on connected graphs n <= 5, lambda in {1/2, 1, 2}");
}

ReproItem edegrees_corpus()
{
    Collector c;
    long equalities = 0;
    for (const auto& g : small_corpus(6, true)) {
        int d = g.max_degree();
        BoundCheck b = check_occupancy_degrees(g, rat(3, (d + 1) * (d + 1)));
        c.tally_bound(b);
        bool equal = b.verdict.margin && *b.verdict.margin == 0;
        equalities += equal;
        c.expect(equal == is_disjoint_union_of_cliques(g));
    }
    return c.finish("bounds.edegrees.corpus",
                    "(1/n) sum_u lambda/(1+(d_u+1)lambda) <= E_G at lambda = 3/(Delta+1)^2 on connected graphs n <= 6, "
                    "with equality exactly for cliques",
                    {{"equalities", equalities}});
}

ReproItem edegrees_tf_spot()
{
    Collector c;
    for (const char* spec : {"cycle:5", "kab:3,3", "petersen"}) {
        Graph g = generate(spec);
        int d = g.max_degree();
        c.add_bound(check_occupancy_tf(g, triangle_free_range_constant() / pow(Rational(d), 4), tolerance_floor() * 1000));
    }
    return c.finish("bounds.edegrees_tf.spot",
                    "(1/n) sum_u g(d_u) <= E_G for triangle-free graphs at lambda = c/Delta^4 with c = 1/100");
}

ReproItem vbounds_corpus()
{
    Collector c;
    for (const auto& g : small_corpus(5, false)) {
        int n = g.order();
        auto lower = check_variance_bounds(g, rat(1, 2 * n));
        auto upper = check_variance_bounds(g, rat(1, n));
        c.tally_bound(lower[0]);
        c.tally_bound(upper[1]);
    }
    return c.finish("bounds.variance.corpus",
                    "lambda/(1+n lambda)^2 <= V_G at lambda = 1/(2n) and V_G <= lambda/(1+lambda)^2 at lambda = 1/n, all graphs n <= 5");
}

ReproItem variance_two_paths()
{
    Collector c;
    long checked = 0;
    for (const auto& g : small_corpus(5, false)) {
        c.expect(variance_fraction(g) == variance_via_marginals(g));
        ++checked;
    }
    return c.finish("variance.pair_marginals",
                    "lambda dE/dlambda equals the pair-marginal expansion of the variance on all graphs n <= 5",
                    {{"graphs", checked}});
}

ReproItem local_occupancy_corpus()
{
    Collector c;
    for (const auto& g : small_corpus(5, true))
        for (const Rational& l : {rat(1, 2), Rational(1), Rational(2)}) {
            c.tally_bound(check_local_occupancy(g, 1 + 1 / l, Rational(1), l));
            c.tally_bound(check_weighted_marginal_sum(g, l, MarginalWeight::f, tolerance_floor()));
        }
    return c.finish("bounds.local_occupancy.corpus",
                    "local (1+1/lambda, 1)-occupancy and (1/n) sum_u Pr(u in I)/f(d_u) >= 1 on connected graphs n <= 5");
}

ReproItem combined_chain()
{
    Collector c;
    for (const char* spec : {"empty:3", "kn:4", "path:4", "cycle:5", "petersen"})
        for (const Rational& l : {rat(1, 4), Rational(1), Rational(4)})
            for (const auto& b : check_combined_chain(generate(spec), l, rat(1, 1000000)))
                c.tally_bound(b);
    return c.finish("bounds.combined_chain",
                    "((1+lambda)log(1+lambda)/lambda) E <= F <= E log(lambda) + h(E) <= E log(e lambda / E)");
}

ReproItem series_item(const std::string& id, const std::string& claim, const SeriesReport& r)
{
    Collector c;
    c.add_series(r);
    return c.finish(id, claim);
}

ReproItem b_coefficients()
{
    Collector c;
    for (const char* spec : {"cycle:5", "petersen", "kab:1,2", "kab:3,3"})
        c.add_series(verify_b_coefficients(generate(spec)));
    return c.finish("series.b_coefficients",
                    "b0 = 1, b1 = b2 = 0 and b3 = -(1/2n) sum_u [d_u + 7 sum_v (d_u-d_v)^2] from the truncated expansion");
}

ReproItem sampler_cross_check()
{
    struct Case {
        const char* spec;
        Rational lambda;
        std::uint64_t seed;
    };
    Collector c;
    for (const Case& k : {Case{"kab:3,3", Rational(1), 1}, Case{"kn:5", Rational(2), 2}, Case{"path:5", Rational(33), 3}}) {
        Graph g = generate(k.spec);
        IntPoly z = independence_polynomial(g);
        int n = g.order();
        EstimateReport r = estimate(g, k.lambda, 1000000, default_burn_in, k.seed);
        double ne = Rational(n * occupancy_at(z, n, k.lambda)).get_d();
        double nv = Rational(n * variance_at(z, n, k.lambda)).get_d();
        bool ok = std::abs(r.n_e - ne) <= 3 * r.n_e_se && std::abs(r.n_v - nv) <= 3 * r.n_v_se;
        json j = to_json(r);
        j["exact_nE"] = ne;
        j["exact_nV"] = nv;
        if (std::string(k.spec) == "path:5") {
            // The exact margin is about 2.6e-4, far below 3 standard errors at this run length.
            Rational bound = 5 * k.lambda / pow(Rational(1 + k.lambda), 2);
            j["n_lambda_over_1plus_lambda_sq"] = bound.get_d();
            j["exact_above_bound"] = n * variance_at(z, n, k.lambda) > bound;
            j["estimate_above_bound_at_3se"] = r.n_v - 3 * r.n_v_se > bound.get_d();
            ok = ok && n * variance_at(z, n, k.lambda) > bound;
        }
        c.expect(ok);
        c.add_json(j);
    }
    return c.finish("sampler.cross_check",
                    "Glauber estimates of nE and nV agree with the exact values within 3 standard errors");
}

const std::map<std::string, std::function<ReproItem()>>& registry()
{
    static const std::map<std::string, std::function<ReproItem()>> items{
        {"bounds.combined_chain", combined_chain},
        {"bounds.edegrees.corpus", edegrees_corpus},
        {"bounds.edegrees_tf.spot", edegrees_tf_spot},
        {"bounds.free_energy.corpus", fbounds_corpus},
        {"bounds.local_occupancy.corpus", local_occupancy_corpus},
        {"bounds.occupancy.corpus", ebounds_corpus},
        {"bounds.variance.corpus", vbounds_corpus},
        {"bounds.vertex_f_upper_fails", vertex_f_upper},
        {"counterexample.g1", [] { return counterexample("g1"); }},
        {"counterexample.g2", [] { return counterexample("g2"); }},
        {"counterexample.pasch", [] { return counterexample("pasch"); }},
        {"counterexample.six_vertex_search", counterexample_search},
        {"cycle.growth", cycle_growth},
        {"cycle.recurrence", cycle_recurrence},
        {"orderings.coef_fails_var_holds", orderings_coef_fails_var_holds},
        {"orderings.fv_fails_var_holds", orderings_fv_fails_var_holds},
        {"orderings.fv_holds_var_fails", orderings_fv_holds_var_fails},
        {"orderings.fv_var_both_hold", orderings_fv_var_both_hold},
        {"p5.threshold", p5_threshold},
        {"sampler.cross_check", sampler_cross_check},
        {"series.b_coefficients", b_coefficients},
        {"series.fidentity",
         [] {
             return series_item("series.fidentity",
                                "(f(d_v-1)-f(d_v))/f(d_u) = f(d_v-1) + (d_u-d_v) f(d_v-1) f(d_v) with f(d) = lambda/(1+(d+1)lambda)",
                                verify_fidentity());
         }},
        {"series.sampled_truncations",
         [] {
             return series_item("series.sampled_truncations",
                                "the truncated expansions of t, t' and t'' are one-sided bounds at sampled lambda",
                                verify_sampled_truncations());
         }},
        {"series.t",
         [] {
             return series_item("series.t", "Taylor coefficients a1..a4 of t = (g(d_v-1)-g(d_v))/g(d_u) and 12a4 >= -431 Delta^3",
                                verify_t_coefficients());
         }},
        {"series.tdoubleprime",
         [] {
             return series_item("series.tdoubleprime", "g(d_v-1) = lambda - d_v lambda^2 + (3d_v^2-3d_v+2)lambda^3/2 + O(lambda^4)",
                                verify_tdoubleprime_coefficients());
         }},
        {"series.tprime",
         [] {
             return series_item("series.tprime", "coefficients of t' = g(d_w-d_uw) - g(d_w), a'4 >= 11/8 and the relaxation",
                                verify_tprime_coefficients());
         }},
        {"variance.pair_marginals", variance_two_paths},
    };
    return items;
}

}  // namespace

std::vector<std::string> repro_ids()
{
    std::vector<std::string> ids;
    for (const auto& [id, fn] : registry())
        ids.push_back(id);
    return ids;
}

ReproItem run_repro(const std::string& id)
{
    auto it = registry().find(id);
    if (it == registry().end())
        throw std::invalid_argument("unknown repro id '" + id + "'");
    return it->second();
}

std::vector<ReproItem> run_all_repro()
{
    std::vector<std::future<ReproItem>> pending;
    for (const auto& [id, fn] : registry())
        pending.push_back(std::async(std::launch::async, fn));
    std::vector<ReproItem> out;
    for (auto& f : pending)
        out.push_back(f.get());
    std::sort(out.begin(), out.end(), [](const ReproItem& a, const ReproItem& b) { return a.id < b.id; });
    return out;
}

nlohmann::json to_json(const ReproItem& item)
{
    return {{"id", item.id}, {"status", item.status}, {"payload", item.payload}};
}

int repro_exit_code(const std::vector<ReproItem>& items)
{
    bool inconclusive = false;
    for (const auto& i : items) {
        if (i.status == "failed")
            return 2;
        inconclusive = inconclusive || i.status == "inconclusive";
    }
    return inconclusive ? 3 : 0;
}

}  // namespace hardcore
