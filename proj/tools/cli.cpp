#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardcore/bounds.hpp"
#include "hardcore/engine.hpp"
#include "hardcore/orderings.hpp"
#include "hardcore/repro.hpp"
#include "hardcore/sampler.hpp"

namespace hardcore {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational default_tolerance()
{
    if (const char* env = std::getenv("HARDCORE_LAB_TOL")) {
        try {
            Rational t = parse_rational(env);
            if (t > 0)
                return t;
        } catch (const std::exception&) {
        }
        throw UsageError("HARDCORE_LAB_TOL must be a positive rational, got '" + std::string(env) + "'");
    }
    Rational t(1, 10);
    return pow(t, 20);
}

Rational parse_positive(const std::string& text, const char* what)
{
    Rational r;
    try {
        r = parse_rational(text);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + " must be a rational like 3/16 or 0.25, got '" + text + "'");
    }
    if (r <= 0)
        throw UsageError(std::string(what) + " must be positive, got '" + text + "'");
    return r;
}

Graph load_graph(const std::string& spec)
{
    try {
        return resolve_graph(spec);
    } catch (const std::exception& e) {
        throw UsageError("cannot read graph '" + spec + "': " + e.what());
    }
}

std::string graph_name(const Graph& g, const std::string& spec)
{
    return g.label().empty() ? spec : g.label();
}

// Exploratory checks only count when nothing else was requested.
Status fold(const std::vector<BoundCheck>& checks)
{
    bool only_exploratory = std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.exploratory; });
    Status s = Status::holds;
    for (const auto& c : checks)
        if (only_exploratory || !c.exploratory)
            s = combine(s, c.verdict.status);
    return s;
}

// Writes to a sibling temporary file and renames it into place.
void write_atomically(const std::string& path, const std::string& text)
{
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw UsageError("cannot write '" + tmp.string() + "'");
        f << text;
        if (!f.flush())
            throw UsageError("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, target);
}

json poly_report(const Graph& g, const std::string& spec)
{
    IntPoly z = independence_polynomial(g);
    return {{"graph", graph_name(g, spec)},
            {"n", g.order()},
            {"edges", g.edge_count()},
            {"Z", to_text(z)},
            {"Z_pretty", to_pretty(z, "λ")}};
}

json quantities_report(const Graph& g, const std::string& spec, const Rational& lambda, const Rational& tol)
{
    HardCoreProfile profile(g);
    const int n = g.order();
    const IntPoly& z = profile.partition_function();
    json marginals = json::array();
    for (int u = 0; u < n; ++u)
        marginals.push_back(to_string(profile.marginal(u).evaluate(lambda)));
    RationalInterval f = free_energy_interval(z, n, lambda, tol);
    return {{"graph", graph_name(g, spec)},
            {"n", n},
            {"lambda", to_string(lambda)},
            {"Z", to_string(z.evaluate(lambda))},
            {"E", to_string(profile.occupancy().evaluate(lambda))},
            {"V", to_string(profile.variance().evaluate(lambda))},
            {"F", {{"lo", to_string(f.lo())}, {"hi", to_string(f.hi())}, {"decimal", f.to_decimal(25)}}},
            {"marginals", marginals},
            {"tol", to_string(tol)}};
}

std::vector<BoundCheck> run_bound(const std::string& name, const Graph& g, const Rational& lambda, const Rational& tol)
{
    if (name == "all")
        return check_all_bounds(g, lambda, tol);
    if (name == "free_energy")
        return check_free_energy_bounds(g, lambda);
    if (name == "occupancy")
        return check_occupancy_bounds(g, lambda);
    if (name == "edegrees")
        return {check_occupancy_degrees(g, lambda)};
    if (name == "edegrees_tf")
        return {check_occupancy_tf(g, lambda, tol)};
    if (name == "variance")
        return check_variance_bounds(g, lambda);
    if (name == "lococc")
        return {check_local_occupancy(g, 1 + 1 / lambda, Rational(1), lambda)};
    if (name == "marginal_f")
        return {check_weighted_marginal_sum(g, lambda, MarginalWeight::f, tol)};
    if (name == "marginal_g")
        return {check_weighted_marginal_sum(g, lambda, MarginalWeight::g_tf, tol)};
    if (name == "combined")
        return check_combined_chain(g, lambda, tol);
    if (name == "vertex_f")
        return {check_vertex_f_upper(g, lambda)};
    throw UsageError("unknown bound '" + name +
                     "'; expected one of all, free_energy, occupancy, edegrees, edegrees_tf, variance, lococc, "
                     "marginal_f, marginal_g, combined, vertex_f");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations for the hard-core model on small graphs", "hardcore_lab"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "Write the report to this file instead of standard output");

    std::string graph_spec, lambda_text, tol_text, kind_text, poly_a, poly_b, bound_name, repro_id = "all";
    std::uint64_t steps = 1000000, seed = 1, burn_in = default_burn_in;
    bool list_ids = false;
    const char* graph_help = "Generator spec (e.g. petersen, kab:3,3, path:5), g6:<graph6> or @<edge-list file>";

    auto* poly = app.add_subcommand("poly", "Independence polynomial of a graph");
    poly->add_option("graph", graph_spec, graph_help)->required();

    auto* quantities = app.add_subcommand("quantities", "Exact Z, E, V, marginals and an enclosure of F");
    quantities->add_option("graph", graph_spec, graph_help)->required();
    quantities->add_option("--lambda", lambda_text, "Fugacity, e.g. 3/16")->required();
    quantities->add_option("--tol", tol_text, "Enclosure width for F (default HARDCORE_LAB_TOL or 1e-20)");

    auto* order = app.add_subcommand("order", "Decide P >=kind Q; kind 'all' checks every ordering and the implications");
    order->add_option("kind", kind_text, "COUNT, PART, COEF, OCC, MAX, FV, VAR or all")->required();
    order->add_option("P", poly_a, "Coefficients from degree 0, e.g. 1,9,30,45,30,9,1")->required();
    order->add_option("Q", poly_b, "Coefficients from degree 0")->required();

    auto* bound = app.add_subcommand("bound", "Check a bound on a graph");
    bound->add_option("name", bound_name,
                      "all, free_energy, occupancy, edegrees, edegrees_tf, variance, lococc, marginal_f, marginal_g, "
                      "combined, vertex_f")
        ->required();
    bound->add_option("graph", graph_spec, graph_help)->required();
    bound->add_option("--lambda", lambda_text, "Fugacity")->required();
    bound->add_option("--tol", tol_text, "Starting tolerance for certified comparisons");

    auto* sample = app.add_subcommand("sample", "Glauber dynamics estimates of nE and nV");
    sample->add_option("graph", graph_spec, graph_help)->required();
    sample->add_option("--lambda", lambda_text, "Fugacity")->required();
    sample->add_option("--steps", steps, "Recorded steps")->capture_default_str();
    sample->add_option("--seed", seed, "Generator seed")->capture_default_str();
    sample->add_option("--burn-in", burn_in, "Discarded initial steps")->capture_default_str();

    auto* repro = app.add_subcommand("repro", "Regenerate the reproduced results as JSON lines");
    repro->add_option("id", repro_id, "Item id or 'all'")->capture_default_str();
    repro->add_flag("--list", list_ids, "Print the item ids");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return 1;
    }

    std::ostringstream report;
    int code = 0;
    try {
        Rational tol = tol_text.empty() ? default_tolerance() : parse_positive(tol_text, "--tol");
        if (*poly) {
            report << poly_report(load_graph(graph_spec), graph_spec).dump() << "\n";
        } else if (*quantities) {
            Rational lambda = parse_positive(lambda_text, "--lambda");
            report << quantities_report(load_graph(graph_spec), graph_spec, lambda, tol).dump() << "\n";
        } else if (*order) {
            IntPoly p, q;
            try {
                p = parse_int_poly(poly_a);
                q = parse_int_poly(poly_b);
            } catch (const std::exception& e) {
                throw UsageError(std::string("polynomials are comma-separated integer coefficients: ") + e.what());
            }
            if (kind_text == "all" || kind_text == "ALL") {
                ImplicationReport r = implication_web_check(p, q);
                report << to_json(r).dump() << "\n";
                code = r.violations.empty() ? 0 : 2;
            } else {
                OrderingKind kind;
                try {
                    kind = parse_ordering_kind(kind_text);
                } catch (const std::exception& e) {
                    throw UsageError(e.what());
                }
                Verdict v = compare(kind, p, q);
                json j = to_json(v);
                j["ordering"] = to_string(kind);
                report << j.dump() << "\n";
                code = exit_code(v.status);
            }
        } else if (*bound) {
            Rational lambda = parse_positive(lambda_text, "--lambda");
            Graph g = load_graph(graph_spec);
            std::vector<BoundCheck> checks = run_bound(bound_name, g, lambda, tol);
            json arr = json::array();
            for (const auto& c : checks)
                arr.push_back(to_json(c));
            Status s = fold(checks);
            report << json{{"graph", graph_name(g, graph_spec)},
                           {"lambda", to_string(lambda)},
                           {"status", to_string(s)},
                           {"checks", arr}}
                          .dump()
                   << "\n";
            code = exit_code(s);
        } else if (*sample) {
            Rational lambda = parse_positive(lambda_text, "--lambda");
            Graph g = load_graph(graph_spec);
            EstimateReport r;
            try {
                r = estimate(g, lambda, steps, burn_in, seed);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            json j = to_json(r);
            if (g.order() <= 30) {
                IntPoly z = independence_polynomial(g);
                j["exact_nE"] = to_string(Rational(g.order() * occupancy_at(z, g.order(), lambda)));
                j["exact_nV"] = to_string(Rational(g.order() * variance_at(z, g.order(), lambda)));
            }
            report << j.dump() << "\n";
        } else if (*repro) {
            if (list_ids) {
                for (const auto& id : repro_ids())
                    report << id << "\n";
            } else {
                std::vector<ReproItem> items;
                if (repro_id == "all") {
                    items = run_all_repro();
                } else {
                    try {
                        items.push_back(run_repro(repro_id));
                    } catch (const std::invalid_argument& e) {
                        throw UsageError(std::string(e.what()) + "; run 'repro --list' for the ids");
                    }
                }
                for (const auto& item : items)
                    report << to_json(item).dump() << "\n";
                code = repro_exit_code(items);
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (out_path.empty())
        out << report.str();
    else
        write_atomically(out_path, report.str());
    return code;
}

}  // namespace hardcore
