#include "hardcore/engine.hpp"

#include <stdexcept>

namespace hardcore {

namespace {

VertexSet closed_neighborhood(const Graph& g, int u)
{
    return g.neighbors(u) | (VertexSet{1} << u);
}

void check_vertex(const Graph& g, int u)
{
    if (u < 0 || u >= g.order())
        throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
}

}  // namespace

PartitionFunctionCache::PartitionFunctionCache(const Graph& g, std::size_t limit) : g_(g), limit_(limit) {}

const IntPoly& PartitionFunctionCache::polynomial(VertexSet subset)
{
    if (auto it = memo_.find(subset); it != memo_.end())
        return it->second;
    IntPoly z = compute(subset);
    if (memo_.size() >= limit_)
        throw std::length_error("independence polynomial memo exceeded its entry limit");
    return memo_.emplace(subset, std::move(z)).first->second;
}

IntPoly PartitionFunctionCache::compute(VertexSet subset)
{
    int best = -1, best_degree = -1;
    for (VertexSet rest = subset; rest; rest &= rest - 1) {
        int v = lowest_vertex(rest);
        int d = popcount(g_.neighbors(v) & subset);
        if (d > best_degree) {
            best = v;
            best_degree = d;
        }
    }
    if (best < 0)
        return IntPoly{Integer(1)};
    if (best_degree == 0)
        return IntPoly{Integer(1), Integer(1)}.pow(static_cast<unsigned>(popcount(subset)));
    VertexSet without = subset & ~(VertexSet{1} << best);
    VertexSet outside = subset & ~closed_neighborhood(g_, best);
    IntPoly a = polynomial(without);
    const IntPoly& b = polynomial(outside);
    return a + b.shifted(1);
}

IntPoly independence_polynomial(const Graph& g, std::size_t cache_limit)
{
    return independence_polynomial(g, g.all_vertices(), cache_limit);
}

IntPoly independence_polynomial(const Graph& g, VertexSet subset, std::size_t cache_limit)
{
    PartitionFunctionCache cache(g, cache_limit);
    return cache.polynomial(subset & g.all_vertices());
}

IntPoly brute_force_polynomial(const Graph& g)
{
    const int n = g.order();
    if (n > 30)
        throw std::invalid_argument("brute_force_polynomial supports at most 30 vertices");
    std::vector<Integer> counts(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool independent = true;
        for (VertexSet rest = mask; rest && independent; rest &= rest - 1)
            independent = (g.neighbors(lowest_vertex(rest)) & mask) == 0;
        if (independent)
            ++counts[static_cast<std::size_t>(popcount(mask))];
    }
    return IntPoly(std::move(counts));
}

IntPoly path_cycle_polynomial(PathCycle kind, int n)
{
    if (kind == PathCycle::path && n < 0)
        throw std::invalid_argument("path length must be nonnegative");
    if (kind == PathCycle::cycle && n < 3)
        throw std::invalid_argument("cycle length must be at least 3");
    // paths[k] = Z_{P_k}, with Z_{P_{-1}} = 1 so that the recurrence starts cleanly.
    std::vector<IntPoly> paths{IntPoly{Integer(1)}, IntPoly{Integer(1), Integer(1)}};
    int needed = kind == PathCycle::path ? n : n - 1;
    while (static_cast<int>(paths.size()) <= needed)
        paths.push_back(paths[paths.size() - 1] + paths[paths.size() - 2].shifted(1));
    if (kind == PathCycle::path)
        return paths[static_cast<std::size_t>(n)];
    return paths[static_cast<std::size_t>(n - 1)] + paths[static_cast<std::size_t>(n - 3)].shifted(1);
}

IntPoly complete_graph_polynomial(int n)
{
    if (n < 0)
        throw std::invalid_argument("complete graph order must be nonnegative");
    return IntPoly{Integer(1), Integer(n)};
}

IntPoly complete_bipartite_polynomial(int a, int b)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("complete bipartite sides must be nonnegative");
    IntPoly one_plus{Integer(1), Integer(1)};
    return one_plus.pow(static_cast<unsigned>(a)) + one_plus.pow(static_cast<unsigned>(b)) - IntPoly{Integer(1)};
}

RatFunc marginal(const Graph& g, int u)
{
    check_vertex(g, u);
    PartitionFunctionCache cache(g);
    IntPoly rest = cache.polynomial(g.all_vertices() & ~closed_neighborhood(g, u));
    return RatFunc::ratio(rest.shifted(1), cache.polynomial(g.all_vertices()));
}

RatFunc pair_marginal(const Graph& g, int u, int v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v)
        throw std::invalid_argument("pair_marginal requires distinct vertices");
    if (g.adjacent(u, v))
        return RatFunc();
    PartitionFunctionCache cache(g);
    VertexSet keep = g.all_vertices() & ~closed_neighborhood(g, u) & ~closed_neighborhood(g, v);
    IntPoly rest = cache.polynomial(keep);
    return RatFunc::ratio(rest.shifted(2), cache.polynomial(g.all_vertices()));
}

RatFunc occupancy_of_polynomial(const IntPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("occupancy of the zero polynomial");
    return RatFunc::ratio(p.derivative().shifted(1), p);
}

RatFunc var_of_polynomial(const IntPoly& p)
{
    if (p.is_zero() || p[0] != 1)
        throw std::invalid_argument("var_of_polynomial requires P(0) = 1");
    for (const auto& c : p.coefficients())
        if (c < 0)
            throw std::invalid_argument("var_of_polynomial requires nonnegative coefficients");
    IntPoly d1 = p.derivative(), d2 = d1.derivative();
    IntPoly num = (d2.shifted(2) + d1.shifted(1)) * p - (d1 * d1).shifted(2);
    return RatFunc::ratio(num, p * p);
}

RatFunc occupancy_fraction(const Graph& g)
{
    if (g.order() == 0)
        throw std::invalid_argument("occupancy fraction of the empty vertex set");
    IntPoly z = independence_polynomial(g);
    return RatFunc::ratio(z.derivative().shifted(1), z * Integer(g.order()));
}

RatFunc variance_fraction(const Graph& g)
{
    return occupancy_fraction(g).x_d_dx();
}

RatFunc variance_via_marginals(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        throw std::invalid_argument("variance fraction of the empty vertex set");
    PartitionFunctionCache cache(g);
    const VertexSet all = g.all_vertices();
    IntPoly z = cache.polynomial(all);
    // Numerators over the common denominator Z: A = sum_u lambda Z_{G-N[u]}, B = sum_{u != v} lambda^2 Z_{G-N[u]-N[v]}.
    IntPoly a, b;
    for (int u = 0; u < n; ++u) {
        VertexSet ru = all & ~closed_neighborhood(g, u);
        a += cache.polynomial(ru).shifted(1);
        for (int v = 0; v < n; ++v) {
            if (v == u || g.adjacent(u, v))
                continue;
            b += cache.polynomial(ru & ~closed_neighborhood(g, v)).shifted(2);
        }
    }
    IntPoly num = (a + b) * z - a * a;
    return RatFunc::ratio(num, z * z * Integer(n));
}

Rational occupancy_at(const IntPoly& z, int n, const Rational& lambda)
{
    Rational zv = z.evaluate(lambda);
    if (zv == 0)
        throw std::domain_error("partition function vanishes");
    return lambda * z.derivative().evaluate(lambda) / (zv * n);
}

Rational variance_at(const IntPoly& z, int n, const Rational& lambda)
{
    Rational zv = z.evaluate(lambda);
    if (zv == 0)
        throw std::domain_error("partition function vanishes");
    IntPoly d1 = z.derivative();
    Rational z1 = d1.evaluate(lambda), z2 = d1.derivative().evaluate(lambda);
    Rational first = (lambda * lambda * z2 + lambda * z1) / zv;
    Rational mean = lambda * z1 / zv;
    return (first - mean * mean) / n;
}

Rational f_lambda(int d, const Rational& lambda)
{
    return lambda / (1 + (d + 1) * lambda);
}

RatFunc f_lambda_function(int d)
{
    return RatFunc::ratio(IntPoly::x(), IntPoly{Integer(1), Integer(d + 1)});
}

HardCoreProfile::HardCoreProfile(Graph g) : g_(std::move(g)), cache_(g_)
{
    if (g_.order() == 0)
        throw std::invalid_argument("HardCoreProfile needs at least one vertex");
    const VertexSet all = g_.all_vertices();
    z_ = cache_.polynomial(all);
    e_ = RatFunc::ratio(z_.derivative().shifted(1), z_ * Integer(g_.order()));
    v_ = e_.x_d_dx();
    for (int u = 0; u < g_.order(); ++u)
        marginals_.push_back(RatFunc::ratio(cache_.polynomial(all & ~closed_neighborhood(g_, u)).shifted(1), z_));
}

const RatFunc& HardCoreProfile::pair_marginal(int u, int v)
{
    check_vertex(g_, u);
    check_vertex(g_, v);
    if (u == v)
        throw std::invalid_argument("pair_marginal requires distinct vertices");
    auto key = std::minmax(u, v);
    if (auto it = pairs_.find(key); it != pairs_.end())
        return it->second;
    RatFunc value;
    if (!g_.adjacent(u, v)) {
        VertexSet keep = g_.all_vertices() & ~closed_neighborhood(g_, u) & ~closed_neighborhood(g_, v);
        value = RatFunc::ratio(cache_.polynomial(keep).shifted(2), z_);
    }
    return pairs_.emplace(key, std::move(value)).first->second;
}

}  // namespace hardcore
