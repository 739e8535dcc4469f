#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gamelab/goodset.hpp"
#include "gamelab/verify.hpp"

using namespace gamelab;

TEST_CASE("find_good_set examples") {
    CHECK(find_good_set(star(5)).edges.empty());
    const auto c10 = find_good_set(cycle(10));
    CHECK(c10.edges.size() == 2);
    CHECK(c10.valid);
    const auto c25 = find_good_set(cycle(25));
    CHECK(c25.edges.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (i != j) CHECK(c25.pair_distances[i][j] >= 4);
}

TEST_CASE("check_good_set examples") {
    const Graph c = cycle(12);
    CHECK(check_good_set(c, find_good_set(c).edges));
    const auto a = *c.edge_between(0, 1), b = *c.edge_between(1, 2);
    CHECK_FALSE(check_good_set(c, std::vector<EdgeId>{a, b}));
    const Graph two(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
    CHECK(check_good_set(two, std::vector<EdgeId>{*two.edge_between(0, 1), *two.edge_between(4, 5)}));
    CHECK_FALSE(check_good_set(star(3), std::vector<EdgeId>{0}));
    CHECK_THROWS_AS(check_good_set(c, std::vector<EdgeId>{99}), Error);
}

TEST_CASE("greedy output is always a good set") {
    for (const auto& [name, g] : verify::mixed_corpus()) CHECK(check_good_set(g, find_good_set(g).edges));
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Graph g = seed % 2 ? random_regular(40, 3 + seed % 4, seed) : gnp(30, 0.15, seed);
        CHECK(check_good_set(g, find_good_set(g).edges));
    }
}

TEST_CASE("degree-Δ vertices shrink by at most 2Δ³ per pick on regular graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::size_t d = 3 + seed % 3;
        const Graph g = random_regular(80, d, seed);
        const auto cert = find_good_set(g);
        REQUIRE(cert.max_degree_vertices_before == 80);
        std::size_t prev = cert.max_degree_vertices_before;
        for (auto now : cert.max_degree_vertices_after) {
            CHECK(prev - now <= 2 * d * d * d);
            prev = now;
        }
    }
}

TEST_CASE("lemma condition examples") {
    const auto c10 = lemma_condition(2, 2, 3);
    CHECK(c10.satisfied);
    CHECK(c10.lhs == "1");
    CHECK(c10.rhs == "1");
    const auto c25 = lemma_condition(2, 5, 2);
    CHECK(c25.satisfied);
    CHECK(c25.lhs == "2");
    CHECK(c25.rhs == "25/12");
    CHECK_FALSE(lemma_condition(2, 4, 2).satisfied);
    CHECK_FALSE(lemma_condition(3, 1, 2).satisfied);
    CHECK_FALSE(lemma_condition(2, 0, 2).satisfied);
    CHECK_THROWS_AS(lemma_condition(2, 3, 1), Error);
    const Graph c = cycle(25);
    CHECK(lemma_condition(c, find_good_set(c).edges, 2));
}

TEST_CASE("vertex bound and harmonic fractions") {
    CHECK(theorem_vertex_bound(2, 3, 1.0) == 14);
    CHECK(theorem_vertex_bound(2, 2, 1.0) == 22);
    CHECK(harmonic_fraction(0) == "0");
    CHECK(harmonic_fraction(1) == "1");
    CHECK(harmonic_fraction(4) == "25/12");
    CHECK(harmonic_fraction(10) == "7381/2520");
}
