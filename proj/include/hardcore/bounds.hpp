#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hardcore/graph.hpp"
#include "hardcore/interval.hpp"
#include "hardcore/sturm.hpp"
#include "hardcore/verdict.hpp"

namespace hardcore {

/// One evaluated bound. `lhs` and `rhs` are display strings (exact rationals or decimal
/// enclosures); the verdict is always decided exactly or by certified enclosures.
/// Exploratory checks lie outside the range where the bound is proven.
struct BoundCheck {
    std::string bound;
    std::string graph;
    Rational lambda;
    std::string lhs;
    std::string rhs;
    Verdict verdict;
    bool exploratory = false;
};

/// {"bound","graph","lambda","status","lhs","rhs","margin","witness"} plus
/// "exploratory" and "note" when set.
nlohmann::json to_json(const BoundCheck& check);

/// The unspecified constant c in the triangle-free range lambda <= c / Delta^4.
Rational triangle_free_range_constant();

/// g(d) = (lambda/(1+lambda)) W(dL)/(dL) with L = log(1+lambda); g(0) = lambda/(1+lambda).
RationalInterval g_tf_interval(int d, const Rational& lambda, const Rational& tol);

/// weight * log(base), with base > 0 and weight >= 0.
struct LogTerm {
    Rational base;
    Rational weight;
};

/// Sign of sum(lhs) - sum(rhs), decided by raising both sides to a common integer power.
int compare_log_sums(const std::vector<LogTerm>& lhs, const std::vector<LogTerm>& rhs);
RationalInterval log_sum_interval(const std::vector<LogTerm>& terms, const Rational& tol);

/// Ftrivial, Fregular (lower for max degree, upper when regular), Fdegrees lower and upper.
std::vector<BoundCheck> check_free_energy_bounds(const Graph& g, const Rational& lambda);

/// Etrivial, Eregular and the degree-sequence bound (exploratory above 3/(Delta+1)^2).
std::vector<BoundCheck> check_occupancy_bounds(const Graph& g, const Rational& lambda);
/// Only the degree-sequence bound (1/n) sum_u lambda/(1+(d_u+1)lambda) <= E_G.
BoundCheck check_occupancy_degrees(const Graph& g, const Rational& lambda);

/// Lambert-W degree-sequence bound for triangle-free graphs.
BoundCheck check_occupancy_tf(const Graph& g, const Rational& lambda, const Rational& tol);

/// Vtrivial lower (lambda < 1/(2n-1)) and upper (lambda <= 1/n); the Delta-version
/// lower bound is always exploratory.
std::vector<BoundCheck> check_variance_bounds(const Graph& g, const Rational& lambda);

/// Threshold for the five-vertex path: strict inequality at 33, no crossing beyond 33,
/// and the reversed inequality at lambda = 1.
std::vector<BoundCheck> check_p5_threshold();
/// Isolating interval of the largest positive root of the numerator of V_{P5} - lambda/(1+lambda)^2.
IsolatingInterval p5_largest_crossing(const Rational& width);

/// V_{C_n}(lambda) / (lambda/(1+lambda)^2), computed from the cycle recurrence.
Rational cycle_variance_ratio(int n, const Rational& lambda);

/// The same ratio along a ladder; strictly increasing is asserted
/// only when the ladder has at least two rungs.
BoundCheck check_cycle_growth(int n, const std::vector<Rational>& ladder);

/// beta (lambda/(1+lambda)) / Z_F + gamma lambda Z_F'/Z_F >= 1 for every u and every
/// induced subgraph F of G[N(u)]. Requires Delta <= 20.
BoundCheck check_local_occupancy(const Graph& g, const Rational& beta, const Rational& gamma, const Rational& lambda);

enum class MarginalWeight { f, g_tf };

/// (1/n) sum_u Pr(u in I) / w(d_u) >= 1 with w = f_lambda (exact) or the Lambert-W weight g (enclosed).
BoundCheck check_weighted_marginal_sum(const Graph& g, const Rational& lambda, MarginalWeight weight,
                                       const Rational& tol);

/// The three-step chain between E_G and F_G: first, second and third links.
std::vector<BoundCheck> check_combined_chain(const Graph& g, const Rational& lambda, const Rational& tol);

/// For G1, G2 and the Pasch graph: engine E equals the displayed formula, the engine edge sum
/// equals the displayed edge sum, and the edge sum is strictly below E at lambda.
std::vector<BoundCheck> check_edge_occ_counterexamples(const Rational& lambda);

/// F_G <= (1/n) sum_u F_{K_{d_u,d_u}} (degree-0 vertices use log(1+lambda)); fails for path:4 at 1.
BoundCheck check_vertex_f_upper(const Graph& g, const Rational& lambda);

/// Every bound above that applies to g at lambda, for the CLI `bound all`.
std::vector<BoundCheck> check_all_bounds(const Graph& g, const Rational& lambda, const Rational& tol);

}  // namespace hardcore
