#include "hardcore/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hardcore {

namespace {

void check_vertex(int n, int u)
{
    if (u < 0 || u >= n)
        throw std::out_of_range("vertex " + std::to_string(u) + " out of range for n=" + std::to_string(n));
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer '" + std::string(s) + "' in " + std::string(what));
    return value;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view what)
{
    std::vector<int> out;
    while (true) {
        auto comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma), what));
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

Graph complete_graph(int n)
{
    Graph g(n, "kn:" + std::to_string(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b)
{
    Graph g(a + b, "kab:" + std::to_string(a) + "," + std::to_string(b));
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n, "path:" + std::to_string(n));
    for (int u = 0; u + 1 < n; ++u)
        g.add_edge(u, u + 1);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    g.set_label("cycle:" + std::to_string(n));
    return g;
}

Graph petersen_graph()
{
    Graph g(10, "petersen");
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

// Point/block incidence graph of the Pasch configuration: points 0..5, blocks 6..9.
Graph pasch_graph()
{
    static constexpr int blocks[4][3] = {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}};
    Graph g(10, "pasch");
    for (int b = 0; b < 4; ++b)
        for (int p : blocks[b])
            g.add_edge(p, 6 + b);
    return g;
}

// Frozen output of the six-vertex search (see graph_corpus.hpp: search_six_vertex_graphs).
// K_{2,3} with a pendant at a degree-3 vertex.
Graph g1_graph()
{
    return Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}}, "g1");
}

// 4-cycle with one pendant on each of two opposite vertices.
Graph g2_graph()
{
    return Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}}, "g2");
}

void require_range(int n, int lo, int hi, std::string_view what)
{
    if (n < lo || n > hi)
        throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) + " out of range [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
}

Graph generate_atom(std::string_view spec)
{
    spec = trim(spec);
    auto colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

    if (colon == std::string_view::npos) {
        if (name == "petersen")
            return petersen_graph();
        if (name == "pasch")
            return pasch_graph();
        if (name == "g1")
            return g1_graph();
        if (name == "g2")
            return g2_graph();
        throw std::invalid_argument("unknown graph spec '" + std::string(spec) + "'");
    }
    if (name == "kn") {
        int n = parse_int(args, spec);
        require_range(n, 1, max_vertices, "kn");
        return complete_graph(n);
    }
    if (name == "empty") {
        int n = parse_int(args, spec);
        require_range(n, 0, max_vertices, "empty");
        return Graph(n, "empty:" + std::to_string(n));
    }
    if (name == "path") {
        int n = parse_int(args, spec);
        require_range(n, 0, max_vertices, "path");
        return path_graph(n);
    }
    if (name == "cycle") {
        int n = parse_int(args, spec);
        require_range(n, 3, max_vertices, "cycle");
        return cycle_graph(n);
    }
    if (name == "kab") {
        auto ab = parse_int_list(args, spec);
        if (ab.size() != 2)
            throw std::invalid_argument("kab needs two sizes, e.g. kab:2,3");
        require_range(ab[0], 0, max_vertices, "kab");
        require_range(ab[1], 0, max_vertices - ab[0], "kab");
        return complete_bipartite(ab[0], ab[1]);
    }
    throw std::invalid_argument("unknown graph spec '" + std::string(spec) + "'");
}

Graph generate_term(std::string_view term)
{
    term = trim(term);
    auto star = term.find('*');
    if (star == std::string_view::npos)
        return generate_atom(term);
    int copies = parse_int(term.substr(0, star), term);
    if (copies < 1)
        throw std::invalid_argument("copy count must be positive in '" + std::string(term) + "'");
    Graph base = generate_atom(term.substr(star + 1));
    if (static_cast<long>(copies) * base.order() > max_vertices)
        throw std::invalid_argument("graph exceeds 64 vertices: '" + std::string(term) + "'");
    Graph out(0);
    for (int i = 0; i < copies; ++i)
        out = out.disjoint_union(base);
    out.set_label(std::to_string(copies) + "*" + base.label());
    return out;
}

}  // namespace

Graph::Graph(int n, std::string label) : n_(n), adj_(static_cast<std::size_t>(n), 0), label_(std::move(label))
{
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("graph order must be in [0,64], got " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges, std::string label)
{
    Graph g(n, std::move(label));
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v)
{
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u] |= VertexSet{1} << v;
    adj_[v] |= VertexSet{1} << u;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (auto a : adj_)
        twice += popcount(a);
    return twice / 2;
}

VertexSet Graph::all_vertices() const
{
    return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

int Graph::max_degree() const
{
    int m = 0;
    for (int u = 0; u < n_; ++u)
        m = std::max(m, degree(u));
    return m;
}

int Graph::min_degree() const
{
    if (n_ == 0)
        return 0;
    int m = n_;
    for (int u = 0; u < n_; ++u)
        m = std::min(m, degree(u));
    return m;
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int u = 0; u < n_; ++u)
        d[u] = degree(u);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(VertexSet keep) const
{
    keep &= all_vertices();
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    int m = 0;
    for (VertexSet s = keep; s; s &= s - 1)
        index[lowest_vertex(s)] = m++;
    Graph h(m);
    for (VertexSet s = keep; s; s &= s - 1) {
        int u = lowest_vertex(s);
        for (VertexSet t = adj_[u] & keep; t; t &= t - 1) {
            int v = lowest_vertex(t);
            if (u < v)
                h.add_edge(index[u], index[v]);
        }
    }
    return h;
}

Graph Graph::disjoint_union(const Graph& other) const
{
    if (n_ + other.n_ > max_vertices)
        throw std::invalid_argument("disjoint union exceeds 64 vertices");
    Graph h(n_ + other.n_);
    for (auto [u, v] : edges())
        h.add_edge(u, v);
    for (auto [u, v] : other.edges())
        h.add_edge(n_ + u, n_ + v);
    if (label_.empty())
        h.label_ = other.label_;
    else if (other.label_.empty())
        h.label_ = label_;
    else
        h.label_ = label_ + " + " + other.label_;
    return h;
}

DegreeMap degree_map(const Graph& g)
{
    DegreeMap m;
    m.degree = g.degrees();
    m.max_degree = g.max_degree();
    return m;
}

NeighborhoodData neighborhood_data(const Graph& g, int u)
{
    check_vertex(g.order(), u);
    NeighborhoodData d;
    d.open = g.neighbors(u);
    d.closed = d.open | (VertexSet{1} << u);
    VertexSet reach = d.closed;
    for (VertexSet s = d.open; s; s &= s - 1)
        reach |= g.neighbors(lowest_vertex(s));
    d.second = reach & ~d.closed;
    d.second_closed = reach;
    for (VertexSet s = d.second; s; s &= s - 1) {
        int w = lowest_vertex(s);
        d.codegrees.emplace_back(w, popcount(d.open & g.neighbors(w)));
    }
    return d;
}

bool is_triangle_free(const Graph& g)
{
    for (auto [u, v] : g.edges())
        if (g.neighbors(u) & g.neighbors(v))
            return false;
    return true;
}

bool tf_edge_count_identity(const Graph& g, int u)
{
    if (!is_triangle_free(g))
        throw std::invalid_argument("tf_edge_count_identity requires a triangle-free graph");
    auto nd = neighborhood_data(g, u);
    long lhs = 0;
    for (VertexSet s = nd.open; s; s &= s - 1)
        lhs += g.degree(lowest_vertex(s));
    long rhs = g.degree(u);
    for (auto [w, duw] : nd.codegrees)
        rhs += duw;
    return lhs == rhs;
}

bool is_connected(const Graph& g)
{
    if (g.order() <= 1)
        return true;
    VertexSet seen = 1, frontier = 1;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet s = frontier; s; s &= s - 1)
            next |= g.neighbors(lowest_vertex(s));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.all_vertices();
}

Graph generate(std::string_view spec)
{
    spec = trim(spec);
    if (spec.empty())
        throw std::invalid_argument("empty graph spec");
    std::vector<Graph> parts;
    while (true) {
        auto plus = spec.find('+');
        parts.push_back(generate_term(spec.substr(0, plus)));
        if (plus == std::string_view::npos)
            break;
        spec.remove_prefix(plus + 1);
    }
    Graph out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out = out.disjoint_union(parts[i]);
    return out;
}

Graph parse_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    if (text.empty())
        throw std::invalid_argument("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4)
            throw std::invalid_argument("graph6: truncated size header");
        if (text[1] == 126)
            throw std::invalid_argument("graph6: n > 64 not supported");
        n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
        pos = 4;
    }
    if (n > max_vertices)
        throw std::invalid_argument("graph6: n=" + std::to_string(n) + " exceeds 64");

    std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw std::invalid_argument("graph6: expected " + std::to_string(bytes) + " body bytes, got " +
                                    std::to_string(text.size() - pos));

    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    return g;
}

std::string encode_graph6(const Graph& g)
{
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled) {
        acc <<= 6 - filled;
        out.push_back(static_cast<char>(63 + acc));
    }
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    std::vector<std::pair<int, int>> edges;
    int n = -1, largest = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a))
            continue;
        if (!(fields >> b) || (fields >> extra))
            throw std::invalid_argument("edge list: expected two fields in line '" + line + "'");
        if (a == "n") {
            n = parse_int(b, "edge list header");
            continue;
        }
        int u = parse_int(a, "edge list"), v = parse_int(b, "edge list");
        if (u < 0 || v < 0)
            throw std::invalid_argument("edge list: negative vertex");
        edges.emplace_back(u, v);
        largest = std::max({largest, u, v});
    }
    if (n < 0)
        n = largest + 1;
    if (largest >= n)
        throw std::invalid_argument("edge list: vertex index exceeds declared n");
    return Graph::from_edges(n, edges);
}

Graph resolve_graph(std::string_view arg)
{
    if (arg.starts_with("g6:")) {
        Graph g = parse_graph6(arg.substr(3));
        g.set_label(std::string(arg));
        return g;
    }
    if (arg.starts_with("@")) {
        std::string path(arg.substr(1));
        std::ifstream file(path);
        if (!file)
            throw std::invalid_argument("cannot open edge list '" + path + "'");
        std::stringstream buf;
        buf << file.rdbuf();
        Graph g = parse_edge_list(buf.str());
        g.set_label(std::string(arg));
        return g;
    }
    return generate(arg);
}

}  // namespace hardcore
