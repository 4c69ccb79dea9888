#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "loclab/errors.hpp"
#include "loclab/rng.hpp"

namespace loclab {

using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    int color = 0; // 0 = uncolored; edge colors live in {1..Delta}

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable simple graph. Adjacency lists are sorted; algorithm progress is
// tracked in side arrays (labels, subsets), never by mutating the graph.
class Graph {
public:
    Graph() = default;

    // Validates: indices in range, no self-loops, no duplicates. Symmetry is
    // by construction (each input edge lands in both adjacency lists).
    static Graph from_edges(int n, std::vector<Edge> edges) {
        require(n >= 0, "Graph: negative vertex count");
        Graph g;
        g.n_ = n;
        bool colored = false;
        for (auto& e : edges) {
            require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n, "Graph: vertex out of range");
            require(e.u != e.v, "Graph: self-loop rejected");
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.color != 0) colored = true;
        }
        std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.u, a.v) < std::tie(b.u, b.v);
        });
        for (std::size_t i = 1; i < edges.size(); ++i)
            require(!(edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v),
                    "Graph: duplicate edge rejected");
        if (colored)
            for (const auto& e : edges) require(e.color >= 1, "Graph: partial edge coloring");

        g.edges_ = std::move(edges);
        g.colored_ = colored;
        std::vector<int> deg(n, 0);
        for (const auto& e : g.edges_) {
            ++deg[e.u];
            ++deg[e.v];
        }
        g.offset_.assign(n + 1, 0);
        for (int v = 0; v < n; ++v) g.offset_[v + 1] = g.offset_[v] + deg[v];
        g.adj_.resize(g.offset_[n]);
        g.adj_color_.resize(colored ? g.offset_[n] : 0);
        std::vector<int> cursor(g.offset_.begin(), g.offset_.end() - 1);
        for (const auto& e : g.edges_) {
            g.adj_[cursor[e.u]] = e.v;
            g.adj_[cursor[e.v]] = e.u;
            if (colored) {
                g.adj_color_[cursor[e.u]] = e.color;
                g.adj_color_[cursor[e.v]] = e.color;
            }
            ++cursor[e.u];
            ++cursor[e.v];
        }
        for (int v = 0; v < n; ++v) {
            int lo = g.offset_[v], hi = g.offset_[v + 1];
            if (!colored) {
                std::sort(g.adj_.begin() + lo, g.adj_.begin() + hi);
            } else {
                std::vector<std::pair<int, int>> tmp;
                tmp.reserve(std::size_t(hi - lo));
                for (int i = lo; i < hi; ++i) tmp.emplace_back(g.adj_[i], g.adj_color_[i]);
                std::sort(tmp.begin(), tmp.end());
                for (int i = lo; i < hi; ++i) {
                    g.adj_[i] = tmp[std::size_t(i - lo)].first;
                    g.adj_color_[i] = tmp[std::size_t(i - lo)].second;
                }
            }
        }
        g.delta_ = 0;
        for (int v = 0; v < n; ++v) g.delta_ = std::max(g.delta_, deg[v]);
        if (colored) g.validate_edge_coloring();
        return g;
    }

    int n() const { return n_; }
    int m() const { return int(edges_.size()); }
    int delta() const { return delta_; }
    int degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
    }

    bool has_edge_colors() const { return colored_; }

    // Color of the edge at the given port of v.
    int port_color(Vertex v, int port) const {
        require(colored_, "Graph: edge colors absent");
        return adj_color_[offset_[v] + port];
    }

    // Index of u in v's sorted adjacency list; -1 if not adjacent.
    int port_of(Vertex v, Vertex u) const {
        auto nb = neighbors(v);
        auto it = std::lower_bound(nb.begin(), nb.end(), u);
        if (it == nb.end() || *it != u) return -1;
        return int(it - nb.begin());
    }

    bool adjacent(Vertex u, Vertex v) const { return port_of(u, v) >= 0; }

    int edge_color(Vertex u, Vertex v) const {
        int p = port_of(u, v);
        require(p >= 0, "Graph: edge_color on a non-edge");
        return port_color(u, p);
    }

    // Canonical edge list: u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    // 64-bit digest of (n, canonical edge list, colors). Stable across runs.
    std::uint64_t digest() const {
        std::uint64_t h = mix64(0x6c6f636c61620ULL, std::uint64_t(n_));
        for (const auto& e : edges_)
            h = mix64(h, mix64(std::uint64_t(e.u), std::uint64_t(e.v), std::uint64_t(e.color)));
        return h;
    }

    bool is_regular() const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != delta_) return false;
        return true;
    }

private:
    void validate_edge_coloring() {
        for (const auto& e : edges_)
            require(e.color >= 1 && e.color <= delta_, "Graph: edge color outside {1..Delta}");
        for (int v = 0; v < n_; ++v) {
            std::vector<int> seen;
            for (int i = offset_[v]; i < offset_[v + 1]; ++i) seen.push_back(adj_color_[i]);
            std::sort(seen.begin(), seen.end());
            require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
                    "Graph: edge coloring not proper");
        }
    }

    int n_ = 0;
    int delta_ = 0;
    bool colored_ = false;
    std::vector<int> offset_;
    std::vector<Vertex> adj_;
    std::vector<int> adj_color_;
    std::vector<Edge> edges_;
};

// Overlay of vertex identifiers; the paper distinguishes vertices (dense
// indices) from their IDs. Shortened IDs are only distinct within `radius`.
struct IdAssignment {
    int bits = 0;
    std::vector<std::uint64_t> ids;
    bool shortened = false;
    int radius = 0; // meaningful when shortened

    static IdAssignment from_indices(int n) {
        IdAssignment a;
        a.ids.resize(std::size_t(n));
        for (int v = 0; v < n; ++v) a.ids[std::size_t(v)] = std::uint64_t(v);
        a.bits = 1;
        while (a.bits < 64 && (std::uint64_t(1) << a.bits) < std::uint64_t(n)) ++a.bits;
        return a;
    }

    static IdAssignment random_distinct(int n, int bits, std::uint64_t seed) {
        require(bits >= 1 && bits <= 64, "IdAssignment: bits out of range");
        require(bits == 64 || (std::uint64_t(1) << bits) >= std::uint64_t(n),
                "IdAssignment: ID space smaller than n");
        IdAssignment a;
        a.bits = bits;
        a.ids.reserve(std::size_t(n));
        Stream s(mix64(seed, 0x1d5ULL));
        std::set<std::uint64_t> seen;
        while (int(a.ids.size()) < n) {
            std::uint64_t w = s.next();
            if (bits < 64) w >>= (64 - bits);
            if (!seen.insert(w).second) continue;
            a.ids.push_back(w);
        }
        return a;
    }

    void require_globally_distinct() const {
        auto sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "IdAssignment: IDs are not globally distinct");
    }
};

// Subset of vertices of a fixed graph, kept sorted and unique.
struct VertexSubset {
    std::vector<Vertex> members;

    static VertexSubset of(std::vector<Vertex> vs, int n) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        require(vs.empty() || (vs.front() >= 0 && vs.back() < n), "VertexSubset: out of range");
        return VertexSubset{std::move(vs)};
    }

    bool contains(Vertex v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }
    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
};

// --- Text graph format ------------------------------------------------------
// First line: `n m [delta]`. Then m lines: `u v [edge_color]`, 0-indexed.

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << ' ' << g.delta() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (g.has_edge_colors()) out << ' ' << e.color;
        out << '\n';
    }
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

inline Graph read_graph(std::istream& in) {
    std::string header;
    while (std::getline(in, header)) {
        if (!header.empty() && header[0] != '#') break;
    }
    std::istringstream hs(header);
    long long n = -1, m = -1, delta = -1;
    hs >> n >> m;
    require(bool(hs) && n >= 0 && m >= 0, "graph format: bad header line");
    hs >> delta; // optional
    std::vector<Edge> edges;
    edges.reserve(std::size_t(m));
    std::string line;
    while ((long long)edges.size() < m && std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Edge e;
        ls >> e.u >> e.v;
        require(bool(ls), "graph format: bad edge line: " + line);
        ls >> e.color; // optional
        edges.push_back(e);
    }
    require((long long)edges.size() == m, "graph format: fewer edges than declared");
    Graph g = Graph::from_edges(int(n), std::move(edges));
    if (delta >= 0) require(g.delta() == int(delta), "graph format: declared delta mismatch");
    return g;
}

inline Graph graph_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

// Structural sanity pass used by generator tests: symmetry and cached delta.
inline void validate_graph(const Graph& g) {
    int delta = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(v);
        delta = std::max(delta, int(nb.size()));
        Vertex prev = -1;
        for (Vertex u : nb) {
            require(u >= 0 && u < g.n() && u != v, "validate: bad neighbor");
            require(u > prev, "validate: adjacency not sorted/unique");
            prev = u;
            require(g.port_of(u, v) >= 0, "validate: adjacency not symmetric");
        }
    }
    require(delta == g.delta(), "validate: cached delta wrong");
}

} // namespace loclab
