#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hardcore/graph.hpp"
#include "hardcore/poly.hpp"

namespace hardcore {

/// Canonical relabelling by colour refinement plus individualisation.
/// Isomorphic graphs map to identical graphs. Supported for n <= 11.
Graph canonical_form(const Graph& g);

/// Upper-triangle adjacency code of the canonical form; for graphs of the same order,
/// equal iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class on exactly n vertices (n <= 9),
/// built by vertex augmentation of the classes on n-1 vertices.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

/// All classes for 1 <= n <= max_n, in increasing order.
std::vector<Graph> enumerate_graphs_up_to(int max_n, bool connected_only);

/// Erdős–Rényi G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// Random triangle-free graph: edges offered in random order with density `p`,
/// kept only if they close no triangle.
Graph random_triangle_free_graph(int n, double p, std::mt19937_64& rng);

bool is_disjoint_union_of_cliques(const Graph& g);

/// Multiset of sorted (d_u, d_v) over edges, sorted.
std::vector<std::pair<int, int>> edge_degree_pairs(const Graph& g);

/// Exhaustive search over all 2^15 labelled graphs on six vertices for those with
/// the given independence polynomial and edge degree-pair multiset.
/// Returns one representative per isomorphism class.
std::vector<Graph> search_six_vertex_graphs(const IntPoly& independence_poly,
                                            const std::vector<std::pair<int, int>>& edge_pairs);

}  // namespace hardcore
