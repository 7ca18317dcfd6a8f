#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hardcore {

/// Vertex subset of a graph with at most 64 vertices, bit i set for vertex i.
using VertexSet = std::uint64_t;

inline constexpr int max_vertices = 64;

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline int lowest_vertex(VertexSet s) { return __builtin_ctzll(s); }

/// Simple undirected graph on vertices 0..n-1 with bit-vector adjacency.
///
/// Adjacency is kept symmetric and irreflexive by construction. A Graph is
/// assembled with add_edge and then treated as an immutable value.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::string label = {});

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string label = {});

    void add_edge(int u, int v);

    int order() const { return n_; }
    std::size_t edge_count() const;
    VertexSet neighbors(int u) const { return adj_[u]; }
    VertexSet all_vertices() const;
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    int degree(int u) const { return popcount(adj_[u]); }
    int max_degree() const;
    int min_degree() const;
    std::vector<int> degrees() const;
    std::vector<std::pair<int, int>> edges() const;

    /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
    Graph induced(VertexSet keep) const;
    Graph disjoint_union(const Graph& other) const;

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::string label_;
};

struct DegreeMap {
    std::vector<int> degree;
    int max_degree = 0;
};

DegreeMap degree_map(const Graph& g);

/// Closed and open neighbourhoods up to distance two, with codegrees d_uw.
struct NeighborhoodData {
    VertexSet open = 0;            // N(u)
    VertexSet closed = 0;          // N[u]
    VertexSet second = 0;          // N²(u): distance exactly two
    VertexSet second_closed = 0;   // N²[u]: distance at most two
    std::vector<std::pair<int, int>> codegrees;  // (w, |N(u) ∩ N(w)|) for w in N²(u)
};

NeighborhoodData neighborhood_data(const Graph& g, int u);

bool is_triangle_free(const Graph& g);

/// Whether sum_{v in N(u)} d_v == d_u + sum_{w in N²(u)} d_uw. Throws if g has a triangle.
bool tf_edge_count_identity(const Graph& g, int u);

bool is_connected(const Graph& g);

/// Builds a graph from a generator spec:
///   kn:n  empty:n  kab:a,b  path:n  cycle:n  petersen  pasch  g1  g2
/// joined with `+` for disjoint unions and prefixed `k*` for k-fold copies,
/// e.g. "3*kab:1,2" or "kab:1,2 + kn:3".
Graph generate(std::string_view spec);

/// graph6 text encoding (n <= 64).
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// "u v" per line, 0-indexed; '#' starts a comment. Vertex count is one past the largest index
/// unless a line "n <count>" is given.
Graph parse_edge_list(std::string_view text);

/// Resolves the CLI graph argument: a generator spec, "g6:<graph6>" or "@<edge-list file>".
Graph resolve_graph(std::string_view arg);

}  // namespace hardcore
