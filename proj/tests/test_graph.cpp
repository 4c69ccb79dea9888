#include <catch2/catch_amalgamated.hpp>

#include "loclab/graph.hpp"
#include "loclab/graph_ops.hpp"
#include "loclab/generators.hpp"

#include <map>
#include <numeric>
#include <set>

using namespace loclab;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), Error);

    Graph g = Graph::from_edges(4, {{2, 1}, {0, 1}, {3, 0}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.delta() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.port_of(1, 0) == 0);
    CHECK(g.port_of(1, 2) == 1);
    CHECK(g.port_of(1, 3) == -1);
    validate_graph(g);
}

TEST_CASE("edge colors must form a proper coloring") {
    CHECK_NOTHROW(Graph::from_edges(3, {{0, 1, 1}, {1, 2, 2}}));
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1, 1}, {1, 2, 1}}), Error);
    // partial coloring rejected
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1, 1}, {1, 2, 0}}), Error);
}

TEST_CASE("text format round-trips and rejects bad input") {
    Graph g = generate_regular_bipartite(2, 3, 4, 99);
    std::string text = graph_to_string(g);
    Graph h = graph_from_string(text);
    CHECK(h.digest() == g.digest());
    CHECK(h.edges() == g.edges());

    CHECK_THROWS_AS(graph_from_string("2 1\n0 0\n"), Error);
    CHECK_THROWS_AS(graph_from_string("2 2\n0 1\n1 0\n"), Error);
    CHECK_THROWS_AS(graph_from_string("2 2\n0 1\n"), Error);
}

TEST_CASE("digest is stable and sensitive") {
    Graph a = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph b = Graph::from_edges(3, {{1, 2}, {0, 1}});
    Graph c = Graph::from_edges(3, {{0, 1}, {0, 2}});
    CHECK(a.digest() == b.digest());
    CHECK(a.digest() != c.digest());
}

TEST_CASE("id assignments") {
    auto ids = IdAssignment::random_distinct(100, 16, 7);
    ids.require_globally_distinct();
    CHECK(ids.bits == 16);
    for (auto w : ids.ids) CHECK(w < (1u << 16));

    auto idx = IdAssignment::from_indices(1000);
    CHECK(idx.bits == 10);
    idx.require_globally_distinct();
}

TEST_CASE("power graph basics") {
    // path a-b-c squared is a triangle
    Graph path3 = generate_path(3);
    Graph tri = power_graph(path3, 2);
    CHECK(tri.m() == 3);

    // k = 1 is the identity on edge lists
    Graph t = generate_random_tree(40, 5);
    CHECK(power_graph(t, 1).edges() == t.edges());
    CHECK(distance_graph(t, 1).edges() == t.edges());

    // 6-cycle squared is 4-regular
    Graph c6 = generate_ring(6);
    Graph c6p2 = power_graph(c6, 2);
    for (int v = 0; v < 6; ++v) CHECK(c6p2.degree(v) == 4);

    // 6-cycle at exact distance 3: antipodal perfect matching
    Graph c6d3 = distance_graph(c6, 3);
    CHECK(c6d3.m() == 3);
    for (int v = 0; v < 6; ++v) {
        CHECK(c6d3.degree(v) == 1);
        CHECK(c6d3.neighbors(v)[0] == (v + 3) % 6);
    }
}

TEST_CASE("power graph equals union of exact-distance graphs (BFS oracle)") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        Graph g = generate_random_bounded_graph(24, 4, 30, seed);
        for (int k = 1; k <= 3; ++k) {
            Graph pk = power_graph(g, k);
            // oracle: pairwise BFS distances
            std::set<std::pair<int, int>> expect;
            for (int v = 0; v < g.n(); ++v) {
                auto dist = bfs_distances(g, v);
                for (int u = v + 1; u < g.n(); ++u)
                    if (dist[std::size_t(u)] >= 1 && dist[std::size_t(u)] <= k)
                        expect.insert({v, u});
            }
            std::set<std::pair<int, int>> got;
            for (const auto& e : pk.edges()) got.insert({e.u, e.v});
            CHECK(got == expect);

            // union over j of distance graphs, and containment
            std::set<std::pair<int, int>> uni;
            for (int j = 1; j <= k; ++j) {
                Graph dj = distance_graph(g, j);
                for (const auto& e : dj.edges()) {
                    uni.insert({e.u, e.v});
                    CHECK(got.count({e.u, e.v}) == 1);
                }
            }
            CHECK(uni == got);
        }
    }
}

TEST_CASE("ball extraction") {
    Graph t = generate_random_tree(30, 11);
    auto b0 = ball(t, 4, 0);
    CHECK(b0.graph.n() == 1);
    CHECK(b0.orig == std::vector<Vertex>{4});

    // star: radius-1 ball of the center is the whole star
    Graph star = generate_complete_tree(5, 1);
    auto bs = ball(star, 0, 1);
    CHECK(bs.graph.n() == 6);
    CHECK(bs.graph.m() == 5);

    // complete tree delta=3 depth=3, root ball r=2 has 1+3+6 = 10 vertices
    Graph ct = generate_complete_tree(3, 3);
    auto br = ball(ct, 0, 2);
    CHECK(br.graph.n() == 10);
    CHECK(br.orig[std::size_t(br.center)] == 0);
}

namespace {
// independent union-find over the induced subgraph
struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(std::size_t(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[std::size_t(x)] == x ? x : p[std::size_t(x)] = find(p[std::size_t(x)]); }
    void unite(int a, int b) { p[std::size_t(find(a))] = find(b); }
};
} // namespace

TEST_CASE("connected components of subsets") {
    Graph p5 = generate_path(5);
    CHECK(connected_components(p5, VertexSubset{}).empty());

    auto comps = connected_components(p5, VertexSubset::of({0, 1, 3}, 5));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].members == std::vector<Vertex>{0, 1});
    CHECK(comps[1].members == std::vector<Vertex>{3});

    Graph t = generate_random_tree(100, 3);
    std::vector<Vertex> odd;
    for (int v = 1; v < 100; v += 2) odd.push_back(v);
    auto subset = VertexSubset::of(odd, 100);
    auto got = connected_components(t, subset);

    UnionFind uf(100);
    for (const auto& e : t.edges())
        if (subset.contains(e.u) && subset.contains(e.v)) uf.unite(e.u, e.v);
    std::map<int, std::vector<Vertex>> groups;
    for (Vertex v : subset.members) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<Vertex>> expect;
    for (auto& [root, vs] : groups) expect.push_back(vs);
    std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].members == expect[i]);

    // sizes sorted descending
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].size() >= got[i].size());
}

TEST_CASE("girth") {
    CHECK(girth(generate_ring(6)) == 6);
    CHECK(girth(generate_ring(4)) == 4);
    CHECK(girth(generate_random_tree(50, 2)) == kUnreached);
    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(girth(k4) == 3);
}

TEST_CASE("misc structural queries") {
    Graph p5 = generate_path(5);
    CHECK(eccentricity(p5, 0) == 4);
    CHECK(eccentricity(p5, 2) == 2);
    CHECK(is_forest(p5));
    CHECK(!is_forest(generate_ring(5)));
    CHECK(is_connected(p5));
    CHECK(bipartition(generate_ring(5)).empty()); // odd cycle: not bipartite
    CHECK(bipartition(generate_ring(6)).size() == 6);
}
