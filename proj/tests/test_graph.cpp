#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "gamelab/graph.hpp"

using namespace gamelab;

namespace {

// All-pairs vertex distances by Floyd-Warshall.
std::vector<std::vector<std::uint32_t>> all_pairs(const Graph& g) {
    const auto n = g.vertex_count();
    const std::uint32_t inf = kInfiniteDistance;
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
    for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (d[a][m] != inf && d[m][b] != inf) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
    return d;
}

std::uint32_t oracle_edge_distance(const std::vector<std::vector<std::uint32_t>>& d, const Edge& e, const Edge& f) {
    return std::min({d[e.u][f.u], d[e.u][f.v], d[e.v][f.u], d[e.v][f.v]});
}

std::vector<std::size_t> degrees(const Graph& g) {
    std::vector<std::size_t> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
    return out;
}

}  // namespace

TEST_CASE("edge_distance examples") {
    const Graph p = path(5);
    const auto e01 = *p.edge_between(0, 1), e12 = *p.edge_between(1, 2), e34 = *p.edge_between(3, 4);
    CHECK(edge_distance(p, e01, e01) == 0);
    CHECK(edge_distance(p, e01, e12) == 0);
    CHECK(edge_distance(p, e01, e34) == 2);
    const Graph two(4, {{0, 1}, {2, 3}});
    CHECK(edge_distance(two, 0, 1) == kInfiniteDistance);
}

TEST_CASE("edge_distance agrees with an all-pairs oracle and is symmetric") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Graph g = gnp(12, 0.2, seed);
        const auto d = all_pairs(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            for (EdgeId f = 0; f < g.edge_count(); ++f) {
                const auto got = edge_distance(g, e, f);
                REQUIRE(got == oracle_edge_distance(d, g.edge(e), g.edge(f)));
                REQUIRE(got == edge_distance(g, f, e));
                for (EdgeId h = 0; h < g.edge_count(); ++h) {
                    const auto ef = got, fh = edge_distance(g, f, h), eh = edge_distance(g, e, h);
                    if (ef == kInfiniteDistance || fh == kInfiniteDistance) continue;
                    REQUIRE(eh <= ef + fh + 1);
                }
            }
        }
    }
}

TEST_CASE("generator examples") {
    const Graph s = star(5);
    CHECK(s.vertex_count() == 6);
    CHECK(s.edge_count() == 5);
    CHECK(s.max_degree() == 5);
    const Graph c = cycle(7);
    CHECK(c.vertex_count() == 7);
    CHECK(c.edge_count() == 7);
    for (auto d : degrees(c)) CHECK(d == 2);
    const Graph r = random_regular(64, 16, 1);
    CHECK(r.vertex_count() == 64);
    CHECK(r.edge_count() == 512);
    for (auto d : degrees(r)) CHECK(d == 16);
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete_bipartite(3, 4).edge_count() == 12);
    CHECK(path(4).edge_count() == 3);
}

TEST_CASE("generator degree sequences over seeded samples") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 6 + seed % 10;
        const std::size_t d = 1 + seed % 4;
        if ((n * d) % 2 == 1 || d >= n) continue;
        const Graph g = random_regular(n, d, seed);
        REQUIRE(g.edge_count() == n * d / 2);
        for (auto x : degrees(g)) REQUIRE(x == d);
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = gnp(10, 0.5, seed);
        std::size_t sum = 0;
        for (auto x : degrees(g)) sum += x;
        REQUIRE(sum == 2 * g.edge_count());
        REQUIRE(g == gnp(10, 0.5, seed));
    }
    CHECK(gnp(10, 0.0, 3).edge_count() == 0);
    CHECK(gnp(10, 1.0, 3).edge_count() == 45);
}

TEST_CASE("tree enumeration counts unlabeled trees") {
    // Unlabeled trees on 2..9 vertices: 1, 1, 2, 3, 6, 11, 23, 47.
    const std::map<std::size_t, std::size_t> expected{{1, 1}, {2, 1}, {3, 2}, {4, 3}, {5, 6}, {6, 11}, {7, 23}, {8, 47}};
    std::map<std::size_t, std::size_t> got;
    for (const auto& t : enumerate_trees(8)) {
        REQUIRE(t.vertex_count() == t.edge_count() + 1);
        ++got[t.edge_count()];
    }
    CHECK(got == expected);
}

TEST_CASE("edge-list format") {
    const Graph g = read_edge_list("3\n0 1\n1 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(read_edge_list("# comment\n3\n1 0 # reversed\n\n2 1\n").edge(0) == Edge{0, 1});
    CHECK_THROWS_AS(read_edge_list("2\n0 0"), Error);
    CHECK_THROWS_AS(read_edge_list("2\n0 1\n1 0"), Error);
    CHECK_THROWS_AS(read_edge_list("2\n0 2"), Error);
    const Graph r = random_regular(12, 3, 9);
    CHECK(read_edge_list(write_edge_list(r)) == r.canonical());
    CHECK(write_edge_list(cycle(3)) == "3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("generate parses CLI specs") {
    CHECK(generate("star:4") == star(4));
    CHECK(generate("cycle:25") == cycle(25));
    CHECK(generate("random_regular:10:3:5") == random_regular(10, 3, 5));
    CHECK(generate("complete_bipartite:2:3") == complete_bipartite(2, 3));
    CHECK_THROWS_AS(generate("hypercube:3"), Error);
}
