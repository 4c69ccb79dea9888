#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "loclab/graph.hpp"
#include "loclab/graph_ops.hpp"

namespace loclab {

// Uniformly random labeled tree by Prüfer decoding. Draws exactly n-2 values
// from the seeded stream via below(n); tests re-encode the output and compare
// against that stream.
inline Graph generate_random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "generate_random_tree: n must be >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    Stream s(seed);
    std::vector<int> prufer(std::size_t(n - 2));
    for (auto& x : prufer) x = int(s.below(std::uint64_t(n)));

    std::vector<int> deg(std::size_t(n), 1);
    for (int x : prufer) ++deg[std::size_t(x)];
    std::vector<Edge> edges;
    edges.reserve(std::size_t(n - 1));
    // classic linear decode: `ptr` scans for leaves, `leaf` tracks the current one
    int ptr = 0;
    while (deg[std::size_t(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int x : prufer) {
        edges.push_back({leaf, x});
        if (--deg[std::size_t(x)] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[std::size_t(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n - 1});
    return Graph::from_edges(n, std::move(edges));
}

// Random tree with max degree exactly min(delta, achievable): a seed star of
// `delta` leaves, remaining vertices attached to uniformly random vertices
// with residual capacity. Gives dense high-degree test trees that uniform
// Prufer trees cannot reach.
inline Graph generate_random_tree_bounded(int n, int delta, std::uint64_t seed) {
    require(n >= 1, "generate_random_tree_bounded: n must be >= 1");
    require(delta >= 2, "generate_random_tree_bounded: delta must be >= 2");
    if (n == 1) return Graph::from_edges(1, {});
    Stream s(seed);
    std::vector<int> deg(std::size_t(n), 0);
    std::vector<Edge> edges;
    edges.reserve(std::size_t(n - 1));
    int hub_leaves = std::min(delta, n - 1);
    for (int v = 1; v <= hub_leaves; ++v) {
        edges.push_back({0, v});
        ++deg[0];
        ++deg[std::size_t(v)];
    }
    // candidates with residual capacity; swap-remove keeps draws O(1)
    std::vector<int> open;
    for (int v = 1; v <= hub_leaves; ++v) open.push_back(v);
    if (deg[0] < delta) open.push_back(0);
    for (int v = hub_leaves + 1; v < n; ++v) {
        require(!open.empty(), "generate_random_tree_bounded: no capacity left");
        std::size_t i = std::size_t(s.below(open.size()));
        int host = open[i];
        edges.push_back({host, v});
        if (++deg[std::size_t(host)] == delta) {
            open[i] = open.back();
            open.pop_back();
        }
        deg[std::size_t(v)] = 1;
        open.push_back(v); // delta >= 2, so a fresh leaf always has capacity
    }
    return Graph::from_edges(n, std::move(edges));
}

// Vertex count of the complete regular tree: root has `delta` children,
// internal vertices delta-1 children, leaves at the given depth.
inline long long complete_tree_size(int delta, int depth) {
    if (depth == 0) return 1;
    long long total = 1, layer = delta;
    for (int d = 1; d <= depth; ++d) {
        total += layer;
        if (total > (1LL << 40)) return total; // caller caps
        layer *= (delta - 1);
    }
    return total;
}

inline Graph generate_complete_tree(int delta, int depth, long long max_vertices = 1 << 24) {
    require(delta >= 2, "generate_complete_tree: delta must be >= 2");
    require(depth >= 0, "generate_complete_tree: negative depth");
    long long n = complete_tree_size(delta, depth);
    require(n <= max_vertices, "generate_complete_tree: size cap exceeded", ErrorKind::cap);
    std::vector<Edge> edges;
    edges.reserve(std::size_t(n - 1));
    // BFS order: vertex 0 root, children appended level by level
    int next = 1;
    std::vector<std::pair<int, int>> queue{{0, 0}}; // (vertex, depth)
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto [v, d] = queue[i];
        if (d == depth) continue;
        int kids = (d == 0) ? delta : delta - 1;
        for (int c = 0; c < kids; ++c) {
            edges.push_back({v, next});
            queue.emplace_back(next, d + 1);
            ++next;
        }
    }
    return Graph::from_edges(int(n), std::move(edges));
}

inline Graph generate_ring(int n) {
    require(n >= 3, "generate_ring: n must be >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph::from_edges(n, std::move(edges));
}

inline Graph generate_path(int n) {
    require(n >= 1, "generate_path: n must be >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph::from_edges(n, std::move(edges));
}

// Delta-regular bipartite graph as a union of `delta` random perfect matchings
// between sides {0..side-1} and {side..2*side-1}. A matching that collides
// with existing edges is resampled alone; a sample below min_girth discards
// the whole graph. Edge color = matching index, a proper Delta-edge coloring.
inline Graph generate_regular_bipartite(int delta, int side, int min_girth, std::uint64_t seed,
                                        int max_attempts = 1000) {
    require(delta >= 2, "generate_regular_bipartite: delta must be >= 2");
    require(side >= delta, "generate_regular_bipartite: side must be >= delta");
    Stream s(mix64(seed, 0xb1bULL));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::set<int>> taken(static_cast<std::size_t>(side)); // right endpoints used per left vertex
        std::vector<Edge> edges;
        std::vector<int> perm(static_cast<std::size_t>(side));
        for (int c = 1; c <= delta; ++c) {
            bool ok = false;
            for (int retry = 0; retry < 200 && !ok; ++retry) {
                std::iota(perm.begin(), perm.end(), 0);
                for (int i = side - 1; i > 0; --i)
                    std::swap(perm[std::size_t(i)], perm[std::size_t(s.below(std::uint64_t(i) + 1))]);
                ok = true;
                for (int i = 0; i < side; ++i)
                    if (taken[std::size_t(i)].count(perm[std::size_t(i)])) {
                        ok = false;
                        break;
                    }
            }
            require(ok, "generate_regular_bipartite: matching resample limit",
                    ErrorKind::generation);
            for (int i = 0; i < side; ++i) {
                taken[std::size_t(i)].insert(perm[std::size_t(i)]);
                edges.push_back({i, side + perm[std::size_t(i)], c});
            }
        }
        Graph g = Graph::from_edges(2 * side, std::move(edges));
        if (min_girth <= 4 || girth(g) >= min_girth) return g;
    }
    throw Error(ErrorKind::generation, "generate_regular_bipartite: girth attempts exhausted");
}

// Random simple graph with max degree <= delta_cap: edge candidates drawn
// uniformly, kept when both endpoints have capacity. Brute-force test fodder.
inline Graph generate_random_bounded_graph(int n, int delta_cap, int target_m, std::uint64_t seed) {
    require(n >= 1 && delta_cap >= 1 && target_m >= 0, "generate_random_bounded_graph: bad args");
    Stream s(mix64(seed, 0xdeadULL));
    std::set<std::pair<int, int>> have;
    std::vector<int> deg(std::size_t(n), 0);
    std::vector<Edge> edges;
    int stall = 0;
    while (int(edges.size()) < target_m && stall < 50 * (target_m + 1)) {
        int u = int(s.below(std::uint64_t(n)));
        int v = int(s.below(std::uint64_t(n)));
        ++stall;
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (deg[std::size_t(u)] >= delta_cap || deg[std::size_t(v)] >= delta_cap) continue;
        if (!have.insert({u, v}).second) continue;
        edges.push_back({u, v});
        ++deg[std::size_t(u)];
        ++deg[std::size_t(v)];
        stall = 0;
    }
    return Graph::from_edges(n, std::move(edges));
}

} // namespace loclab
