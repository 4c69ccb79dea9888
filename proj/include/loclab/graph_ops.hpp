#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "loclab/graph.hpp"

namespace loclab {

inline constexpr int kUnreached = std::numeric_limits<int>::max();

// BFS distances from source; kUnreached for other components.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(std::size_t(g.n()), kUnreached);
    std::vector<Vertex> frontier{source}, next;
    dist[std::size_t(source)] = 0;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (Vertex v : frontier)
            for (Vertex u : g.neighbors(v))
                if (dist[std::size_t(u)] == kUnreached) {
                    dist[std::size_t(u)] = d;
                    next.push_back(u);
                }
        frontier.swap(next);
    }
    return dist;
}

inline int eccentricity(const Graph& g, Vertex v) {
    auto dist = bfs_distances(g, v);
    int ecc = 0;
    for (int d : dist) {
        require(d != kUnreached, "eccentricity: graph disconnected");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

// Edge {u,v} iff 1 <= dist_g(u,v) <= k. Same vertex set.
inline Graph power_graph(const Graph& g, int k) {
    require(k >= 1, "power_graph: k must be >= 1");
    std::vector<Edge> edges;
    std::vector<int> dist(std::size_t(g.n()), -1);
    std::vector<Vertex> touched, frontier, next;
    for (Vertex v = 0; v < g.n(); ++v) {
        // bounded BFS to depth k
        frontier.assign(1, v);
        dist[std::size_t(v)] = 0;
        touched.assign(1, v);
        for (int d = 1; d <= k && !frontier.empty(); ++d) {
            next.clear();
            for (Vertex x : frontier)
                for (Vertex u : g.neighbors(x))
                    if (dist[std::size_t(u)] < 0) {
                        dist[std::size_t(u)] = d;
                        next.push_back(u);
                        touched.push_back(u);
                        if (u > v) edges.push_back({v, u});
                    }
            frontier.swap(next);
        }
        for (Vertex x : touched) dist[std::size_t(x)] = -1;
    }
    return Graph::from_edges(g.n(), std::move(edges));
}

// Edge {u,v} iff dist_g(u,v) == k exactly.
inline Graph distance_graph(const Graph& g, int k) {
    require(k >= 1, "distance_graph: k must be >= 1");
    std::vector<Edge> edges;
    std::vector<int> dist(std::size_t(g.n()), -1);
    std::vector<Vertex> touched, frontier, next;
    for (Vertex v = 0; v < g.n(); ++v) {
        frontier.assign(1, v);
        dist[std::size_t(v)] = 0;
        touched.assign(1, v);
        for (int d = 1; d <= k && !frontier.empty(); ++d) {
            next.clear();
            for (Vertex x : frontier)
                for (Vertex u : g.neighbors(x))
                    if (dist[std::size_t(u)] < 0) {
                        dist[std::size_t(u)] = d;
                        next.push_back(u);
                        touched.push_back(u);
                        if (d == k && u > v) edges.push_back({v, u});
                    }
            frontier.swap(next);
        }
        for (Vertex x : touched) dist[std::size_t(x)] = -1;
    }
    return Graph::from_edges(g.n(), std::move(edges));
}

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> orig;      // local index -> original vertex
    std::vector<int> local;        // original vertex -> local index, -1 outside
};

// Induced subgraph on the given members (sorted, unique). Edge colors carried over.
inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& members) {
    InducedSubgraph out;
    out.orig = members;
    out.local.assign(std::size_t(g.n()), -1);
    for (int i = 0; i < int(members.size()); ++i) out.local[std::size_t(members[std::size_t(i)])] = i;
    std::vector<Edge> edges;
    for (Vertex v : members) {
        int lv = out.local[std::size_t(v)];
        auto nb = g.neighbors(v);
        for (int p = 0; p < int(nb.size()); ++p) {
            Vertex u = nb[std::size_t(p)];
            if (u > v && out.local[std::size_t(u)] >= 0)
                edges.push_back({lv, out.local[std::size_t(u)],
                                 g.has_edge_colors() ? g.port_color(v, p) : 0});
        }
    }
    out.graph = Graph::from_edges(int(members.size()), std::move(edges));
    return out;
}

struct BallResult {
    Graph graph;           // induced subgraph on N^r(v)
    int center;            // index of v inside `graph`
    std::vector<Vertex> orig;
};

// Induced subgraph on N^r(v), original vertex indices retained in `orig`.
inline BallResult ball(const Graph& g, Vertex v, int r) {
    require(v >= 0 && v < g.n(), "ball: vertex out of range");
    require(r >= 0, "ball: negative radius");
    std::vector<int> dist(std::size_t(g.n()), -1);
    std::vector<Vertex> members{v}, frontier{v}, next;
    dist[std::size_t(v)] = 0;
    for (int d = 1; d <= r && !frontier.empty(); ++d) {
        next.clear();
        for (Vertex x : frontier)
            for (Vertex u : g.neighbors(x))
                if (dist[std::size_t(u)] < 0) {
                    dist[std::size_t(u)] = d;
                    next.push_back(u);
                    members.push_back(u);
                }
        frontier.swap(next);
    }
    std::sort(members.begin(), members.end());
    auto sub = induced_subgraph(g, members);
    BallResult out;
    out.center = sub.local[std::size_t(v)];
    out.graph = std::move(sub.graph);
    out.orig = std::move(sub.orig);
    return out;
}

// Maximal connected pieces of the subgraph induced by `subset`,
// sorted by size descending (ties: by smallest member).
inline std::vector<VertexSubset> connected_components(const Graph& g, const VertexSubset& subset) {
    std::vector<char> in(std::size_t(g.n()), 0), seen(std::size_t(g.n()), 0);
    for (Vertex v : subset.members) in[std::size_t(v)] = 1;
    std::vector<VertexSubset> comps;
    std::vector<Vertex> stack;
    for (Vertex s : subset.members) {
        if (seen[std::size_t(s)]) continue;
        std::vector<Vertex> comp;
        stack.assign(1, s);
        seen[std::size_t(s)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v))
                if (in[std::size_t(u)] && !seen[std::size_t(u)]) {
                    seen[std::size_t(u)] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(VertexSubset{std::move(comp)});
    }
    std::sort(comps.begin(), comps.end(), [](const VertexSubset& a, const VertexSubset& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.members.front() < b.members.front();
    });
    return comps;
}

inline VertexSubset all_vertices(const Graph& g) {
    std::vector<Vertex> vs(std::size_t(g.n()));
    for (int v = 0; v < g.n(); ++v) vs[std::size_t(v)] = v;
    return VertexSubset{std::move(vs)};
}

// Girth by BFS from every vertex: O(n*m), exact. Returns kUnreached for forests.
inline int girth(const Graph& g) {
    int best = kUnreached;
    std::vector<int> dist(std::size_t(g.n()));
    std::vector<Vertex> parent(std::size_t(g.n()));
    for (Vertex s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> q;
        q.push(s);
        dist[std::size_t(s)] = 0;
        parent[std::size_t(s)] = -1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            if (2 * dist[std::size_t(v)] >= best) break;
            for (Vertex u : g.neighbors(v)) {
                if (dist[std::size_t(u)] < 0) {
                    dist[std::size_t(u)] = dist[std::size_t(v)] + 1;
                    parent[std::size_t(u)] = v;
                    q.push(u);
                } else if (u != parent[std::size_t(v)]) {
                    best = std::min(best, dist[std::size_t(v)] + dist[std::size_t(u)] + 1);
                }
            }
        }
    }
    return best;
}

inline bool is_forest(const Graph& g) {
    // acyclic iff every component has |E| = |V|-1; count via DFS
    std::vector<char> seen(std::size_t(g.n()), 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[std::size_t(s)]) continue;
        long long vs = 0, es = 0;
        stack.assign(1, s);
        seen[std::size_t(s)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++vs;
            es += g.degree(v);
            for (Vertex u : g.neighbors(v))
                if (!seen[std::size_t(u)]) {
                    seen[std::size_t(u)] = 1;
                    stack.push_back(u);
                }
        }
        if (es / 2 != vs - 1) return false;
    }
    return true;
}

inline bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::find(d.begin(), d.end(), kUnreached) == d.end();
}

// Side classes if bipartite (0/1 per vertex), empty if odd cycle found.
inline std::vector<int> bipartition(const Graph& g) {
    std::vector<int> side(std::size_t(g.n()), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (side[std::size_t(s)] >= 0) continue;
        side[std::size_t(s)] = 0;
        stack.assign(1, s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                if (side[std::size_t(u)] < 0) {
                    side[std::size_t(u)] = 1 - side[std::size_t(v)];
                    stack.push_back(u);
                } else if (side[std::size_t(u)] == side[std::size_t(v)]) {
                    return {};
                }
            }
        }
    }
    return side;
}

} // namespace loclab
