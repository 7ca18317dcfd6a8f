#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hardcore/graph.hpp"
#include "hardcore/poly.hpp"
#include "hardcore/ratfunc.hpp"

namespace hardcore {

inline constexpr std::size_t default_cache_limit = std::size_t{1} << 22;

/// Memoized vertex-deletion recursion Z_S = Z_{S-v} + lambda * Z_{S-N[v]} over residual
/// vertex sets S of one graph. Branches on the vertex of highest residual degree, lowest
/// index on ties. Throws std::length_error once the memo would exceed `limit` entries.
class PartitionFunctionCache {
public:
    explicit PartitionFunctionCache(const Graph& g, std::size_t limit = default_cache_limit);

    /// Independence polynomial of the subgraph induced by `subset`.
    const IntPoly& polynomial(VertexSet subset);
    std::size_t size() const { return memo_.size(); }

private:
    IntPoly compute(VertexSet subset);

    const Graph& g_;
    std::size_t limit_;
    std::unordered_map<VertexSet, IntPoly> memo_;
};

IntPoly independence_polynomial(const Graph& g, std::size_t cache_limit = default_cache_limit);
IntPoly independence_polynomial(const Graph& g, VertexSet subset, std::size_t cache_limit = default_cache_limit);

/// Counts independent sets by size over all 2^n subsets (n <= 30).
IntPoly brute_force_polynomial(const Graph& g);

enum class PathCycle { path, cycle };

/// Transfer recurrences Z_{P_n} = Z_{P_{n-1}} + x Z_{P_{n-2}} and Z_{C_n} = Z_{P_{n-1}} + x Z_{P_{n-3}}.
IntPoly path_cycle_polynomial(PathCycle kind, int n);

/// 1 + n x.
IntPoly complete_graph_polynomial(int n);
/// (1+x)^a + (1+x)^b - 1.
IntPoly complete_bipartite_polynomial(int a, int b);

/// p_u = lambda Z_{G-N[u]} / Z_G.
RatFunc marginal(const Graph& g, int u);
/// p_uv = lambda^2 Z_{G-N[u]-N[v]} / Z_G for non-adjacent u != v, 0 for adjacent pairs.
RatFunc pair_marginal(const Graph& g, int u, int v);

/// x P'(x) / P(x).
RatFunc occupancy_of_polynomial(const IntPoly& p);
/// V_P = ((x^2 P'' + x P') P - x^2 P'^2) / P^2. Requires P(0) = 1 and nonnegative coefficients.
RatFunc var_of_polynomial(const IntPoly& p);

/// E_G = lambda Z'/(n Z).
RatFunc occupancy_fraction(const Graph& g);
/// V_G = lambda dE/dlambda.
RatFunc variance_fraction(const Graph& g);
/// V_G from marginals: (1/n) [sum_u p_u + sum_{u != v} p_uv - (sum_u p_u)^2].
RatFunc variance_via_marginals(const Graph& g);

/// Point values of E and V from a partition function on n vertices.
Rational occupancy_at(const IntPoly& z, int n, const Rational& lambda);
Rational variance_at(const IntPoly& z, int n, const Rational& lambda);

/// f_lambda(d) = lambda / (1 + (d+1) lambda), the occupancy fraction of K_{d+1}.
Rational f_lambda(int d, const Rational& lambda);
RatFunc f_lambda_function(int d);

/// Exact hard-core quantities of one graph. Pair marginals are filled on demand.
class HardCoreProfile {
public:
    explicit HardCoreProfile(Graph g);
    HardCoreProfile(const HardCoreProfile&) = delete;
    HardCoreProfile& operator=(const HardCoreProfile&) = delete;

    const Graph& graph() const { return g_; }
    const IntPoly& partition_function() const { return z_; }
    const RatFunc& occupancy() const { return e_; }
    const RatFunc& variance() const { return v_; }
    const RatFunc& marginal(int u) const { return marginals_.at(static_cast<std::size_t>(u)); }
    const RatFunc& pair_marginal(int u, int v);

private:
    Graph g_;
    PartitionFunctionCache cache_;
    IntPoly z_;
    RatFunc e_;
    RatFunc v_;
    std::vector<RatFunc> marginals_;
    std::map<std::pair<int, int>, RatFunc> pairs_;
};

}  // namespace hardcore
