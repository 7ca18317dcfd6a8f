#include "hardcore/graph_corpus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hardcore/engine.hpp"
#include "hardcore/random.hpp"

namespace hardcore {

namespace {

constexpr int max_canonical_order = 11;

using Partition = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into every cell until stable. New cells are
// ordered by their count vectors, which keeps the result isomorphism-invariant.
Partition refine(const Graph& g, Partition cells)
{
    while (true) {
        std::vector<VertexSet> masks;
        masks.reserve(cells.size());
        for (const auto& cell : cells) {
            VertexSet m = 0;
            for (int v : cell)
                m |= VertexSet{1} << v;
            masks.push_back(m);
        }
        Partition next;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(masks.size());
                for (VertexSet m : masks)
                    sig.push_back(popcount(g.neighbors(v) & m));
                groups[sig].push_back(v);
            }
            for (auto& [sig, members] : groups)
                next.push_back(std::move(members));
        }
        if (next.size() == cells.size())
            return next;
        cells = std::move(next);
    }
}

std::uint64_t code_of(const Graph& g, const Partition& discrete)
{
    std::vector<int> perm;
    for (const auto& cell : discrete)
        perm.push_back(cell.front());
    std::uint64_t code = 0;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
    return code;
}

bool twins(const Graph& g, int v, int w)
{
    VertexSet strip = (VertexSet{1} << v) | (VertexSet{1} << w);
    return (g.neighbors(v) & ~strip) == (g.neighbors(w) & ~strip);
}

void search(const Graph& g, const Partition& cells, std::uint64_t& best_code, Partition& best)
{
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
        std::uint64_t code = code_of(g, cells);
        if (best.empty() || code > best_code) {
            best_code = code;
            best = cells;
        }
        return;
    }
    auto index = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> explored;
    for (int v : *target) {
        // Swapping twins is an automorphism that fixes the current partition.
        if (std::any_of(explored.begin(), explored.end(), [&](int w) { return twins(g, v, w); }))
            continue;
        explored.push_back(v);
        Partition child(cells.begin(), cells.begin() + static_cast<long>(index));
        child.push_back({v});
        std::vector<int> rest;
        for (int w : *target)
            if (w != v)
                rest.push_back(w);
        child.push_back(rest);
        child.insert(child.end(), cells.begin() + static_cast<long>(index) + 1, cells.end());
        search(g, refine(g, std::move(child)), best_code, best);
    }
}

std::pair<std::uint64_t, std::vector<int>> canonical_labelling(const Graph& g)
{
    const int n = g.order();
    if (n > max_canonical_order)
        throw std::invalid_argument("canonical labelling supports at most 11 vertices");
    if (n == 0)
        return {0, {}};
    Partition start(1);
    for (int v = 0; v < n; ++v)
        start[0].push_back(v);
    std::uint64_t best_code = 0;
    Partition best;
    search(g, refine(g, std::move(start)), best_code, best);
    std::vector<int> perm;
    for (const auto& cell : best)
        perm.push_back(cell.front());
    return {best_code, perm};
}

std::vector<std::vector<Graph>> graph_levels(int max_n)
{
    if (max_n < 1 || max_n > 9)
        throw std::invalid_argument("graph enumeration supports 1 <= n <= 9");
    std::vector<std::vector<Graph>> levels(static_cast<std::size_t>(max_n) + 1);
    levels[1].push_back(Graph(1));
    for (int n = 2; n <= max_n; ++n) {
        std::map<std::uint64_t, Graph> seen;
        for (const Graph& base : levels[static_cast<std::size_t>(n) - 1]) {
            const int k = n - 1;
            for (VertexSet nbrs = 0; nbrs < (VertexSet{1} << k); ++nbrs) {
                Graph g(n);
                for (const auto& [a, b] : base.edges())
                    g.add_edge(a, b);
                for (VertexSet rest = nbrs; rest; rest &= rest - 1)
                    g.add_edge(lowest_vertex(rest), k);
                auto [code, perm] = canonical_labelling(g);
                if (!seen.count(code))
                    seen.emplace(code, canonical_form(g));
            }
        }
        for (auto& [code, g] : seen)
            levels[static_cast<std::size_t>(n)].push_back(std::move(g));
    }
    return levels;
}

}  // namespace

Graph canonical_form(const Graph& g)
{
    auto [code, perm] = canonical_labelling(g);
    const int n = g.order();
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        position[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    Graph out(n, g.label());
    for (const auto& [a, b] : g.edges())
        out.add_edge(position[static_cast<std::size_t>(a)], position[static_cast<std::size_t>(b)]);
    return out;
}

std::uint64_t canonical_code(const Graph& g)
{
    return canonical_labelling(g).first;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only)
{
    auto levels = graph_levels(n);
    std::vector<Graph> out;
    for (auto& g : levels[static_cast<std::size_t>(n)])
        if (!connected_only || is_connected(g))
            out.push_back(std::move(g));
    return out;
}

std::vector<Graph> enumerate_graphs_up_to(int max_n, bool connected_only)
{
    auto levels = graph_levels(max_n);
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : levels[static_cast<std::size_t>(n)])
            if (!connected_only || is_connected(g))
                out.push_back(std::move(g));
    return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(rng) < p)
                g.add_edge(u, v);
    return g;
}

Graph random_triangle_free_graph(int n, double p, std::mt19937_64& rng)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[uniform_index(rng, i)]);
    Graph g(n);
    for (const auto& [u, v] : pairs)
        if (uniform01(rng) < p && (g.neighbors(u) & g.neighbors(v)) == 0)
            g.add_edge(u, v);
    return g;
}

bool is_disjoint_union_of_cliques(const Graph& g)
{
    for (const auto& [u, v] : g.edges()) {
        VertexSet cu = g.neighbors(u) | (VertexSet{1} << u);
        VertexSet cv = g.neighbors(v) | (VertexSet{1} << v);
        if (cu != cv)
            return false;
    }
    return true;
}

std::vector<std::pair<int, int>> edge_degree_pairs(const Graph& g)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& [u, v] : g.edges())
        out.push_back(std::minmax(g.degree(u), g.degree(v)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Graph> search_six_vertex_graphs(const IntPoly& independence_poly,
                                            const std::vector<std::pair<int, int>>& edge_pairs)
{
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            slots.emplace_back(u, v);
    std::vector<std::pair<int, int>> wanted = edge_pairs;
    for (auto& [a, b] : wanted)
        std::tie(a, b) = std::minmax(a, b);
    std::sort(wanted.begin(), wanted.end());
    std::map<std::uint64_t, Graph> found;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != wanted.size())
            continue;
        Graph g(6);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u)
                g.add_edge(slots[i].first, slots[i].second);
        if (edge_degree_pairs(g) != wanted)
            continue;
        if (independence_polynomial(g) != independence_poly)
            continue;
        std::uint64_t code = canonical_code(g);
        if (!found.count(code))
            found.emplace(code, g);
    }
    std::vector<Graph> out;
    for (auto& [code, g] : found)
        out.push_back(std::move(g));
    return out;
}

}  // namespace hardcore
