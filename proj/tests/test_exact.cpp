#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "gamelab/breaker.hpp"
#include "gamelab/exact.hpp"
#include "gamelab/goodset.hpp"
#include "gamelab/maker.hpp"
#include "gamelab/verify.hpp"

using namespace gamelab;

TEST_CASE("solve examples") {
    for (const auto& cfg : {GameConfig::classic(3), GameConfig::skip_variant(3)}) CHECK(solve(star(3), 3, cfg) == Player::maker);
    CHECK(solve(cycle(5), 2, GameConfig::classic(2)) == Player::breaker);
    CHECK(solve(cycle(5), 3, GameConfig::classic(3)) == Player::maker);
    CHECK(solve(cycle(10), 2, GameConfig::skip_variant(2, 3)) == Player::breaker);
}

TEST_CASE("game chromatic index examples") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto r = game_chromatic_index(star(n), 1, GameConfig::skip_variant(1));
        CHECK(r.complete);
        CHECK(r.value == static_cast<std::uint32_t>(n));
    }
    CHECK(game_chromatic_index(cycle(7), 1, GameConfig::classic(1)).value == 3u);
    const Graph p4 = path(4);
    for (const auto& variant : {GameConfig::classic(1), GameConfig::skip_variant(1)}) {
        const auto r = game_chromatic_index(p4, 1, variant);
        REQUIRE(r.complete);
        for (const auto& [k, w] : r.winners) {
            auto cfg = variant;
            cfg.k = k;
            CHECK(*w == verify::brute_force_winner(p4, cfg));
        }
    }
    CHECK(game_chromatic_index(Graph(3, {}), 1, GameConfig::classic(1)).value == 0u);
}

TEST_CASE("bounds: value within [Δ, 2Δ-1], Breaker wins below the chromatic index") {
    for (const auto& [name, g] : verify::mixed_corpus()) {
        if (g.edge_count() == 0 || g.edge_count() > 10) continue;
        const auto r = game_chromatic_index(g, 1, GameConfig::classic(1));
        REQUIRE(r.complete);
        REQUIRE(r.value);
        CHECK(*r.value >= g.max_degree());
        CHECK(*r.value <= 2 * g.max_degree() - 1);
    }
    // Odd cycles and K4 need Δ+1 colors even without an opponent.
    CHECK(solve(cycle(7), 2, GameConfig::skip_variant(2)) == Player::breaker);
    CHECK(solve(complete(5), 4, GameConfig::skip_variant(4)) == Player::breaker);
}

TEST_CASE("memoized and unmemoized search agree") {
    for (const auto& [name, g] : verify::mixed_corpus()) {
        if (g.edge_count() == 0 || g.edge_count() > 6) continue;
        const auto delta = static_cast<std::uint32_t>(g.max_degree());
        for (std::uint32_t k = delta; k <= 2 * delta - 1; ++k)
            for (auto cfg : {GameConfig::classic(k, 1), GameConfig::skip_variant(k, 2)})
                REQUIRE(solve(g, cfg, 100'000'000, true).winner == solve(g, cfg, 100'000'000, false).winner);
    }
}

TEST_CASE("color permutations do not change the value of a position") {
    Rng rng(11);
    std::size_t sampled = 0;
    for (std::uint64_t seed = 0; sampled < 1000; ++seed) {
        const Graph g = seed % 2 ? complete(4) : gnp(7, 0.4, seed);
        if (g.edge_count() < 3 || g.edge_count() > 11) continue;
        const auto k = static_cast<std::uint32_t>(g.max_degree() + seed % 3);
        const auto cfg = seed % 3 ? GameConfig::classic(k, 1) : GameConfig::skip_variant(k, 2);
        GameState s(g, cfg);
        RandomMaker maker(seed);
        RandomBreaker breaker(seed + 1);
        const auto stop = rng.below(g.edge_count());
        while (!s.finished() && s.log().size() < stop) {
            if (s.to_move() == Player::maker) {
                const auto d = maker.decide(s);
                s.color_edge(Player::maker, d.edge, d.color);
            } else if (auto d = breaker.next(s)) {
                s.color_edge(Player::breaker, d->edge, d->color);
            } else {
                s.end_breaker_turn();
            }
        }
        if (s.finished() || s.moves_this_turn() > 0) continue;
        std::vector<Color> perm(k);
        std::iota(perm.begin(), perm.end(), Color{1});
        for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        GameState t(g, cfg);
        MoveLog relabeled;
        for (auto rec : s.log()) {
            if (!rec.skip) rec.color = perm[rec.color - 1];
            rec.maker.reset();
            relabeled.push_back(rec);
        }
        const auto u = replay(s.graph_ptr(), cfg, relabeled);
        REQUIRE(canonical_coloring(u.coloring()) == canonical_coloring(s.coloring()));
        REQUIRE(solve_position(s).winner == solve_position(u).winner);
        ++sampled;
    }
}

TEST_CASE("canonical coloring renumbers by first use") {
    const std::vector<Color> c{0, 5, 2, 5, 0, 1};
    CHECK(canonical_coloring(c) == std::vector<Color>{0, 1, 2, 1, 0, 3});
}

TEST_CASE("limits and budget") {
    CHECK_THROWS_AS(solve(cycle(17), 3, GameConfig::classic(3)), Error);
    CHECK_THROWS_AS(solve(cycle(5), 16, GameConfig::classic(16)), Error);
    CHECK_THROWS_AS(solve(complete(5), GameConfig::classic(6), 10), BudgetExceeded);
    const auto r = game_chromatic_index(complete(5), 1, GameConfig::classic(1), 10);
    CHECK_FALSE(r.complete);
    CHECK_FALSE(r.value);
}

TEST_CASE("verify_strategy") {
    const Graph c10 = cycle(10);
    const auto geo = std::make_shared<const BoxGeometry>(c10, find_good_set(c10).edges);
    const auto box = verify_breaker_strategy(c10, GameConfig::skip_variant(2, 3), [&] { return std::make_unique<BoxBreaker>(geo); });
    CHECK(box.sound);
    CHECK(box.leaves > 0);

    // C_5 with two colors is not even properly colorable, so skipping still wins for Breaker.
    const auto skip2 = verify_breaker_strategy(cycle(5), GameConfig::skip_variant(2), [] { return std::make_unique<SkipBreaker>(); });
    CHECK(skip2.sound);
    const auto skip3 = verify_breaker_strategy(cycle(5), GameConfig::skip_variant(3), [] { return std::make_unique<SkipBreaker>(); });
    REQUIRE_FALSE(skip3.sound);
    REQUIRE(skip3.counterexample);
    const auto end = replay(std::make_shared<const Graph>(cycle(5)), GameConfig::skip_variant(3), *skip3.counterexample);
    CHECK(end.winner() == Outcome::maker_won);

    // A solved Breaker-win position defeats any Maker policy, including a seeded random one.
    REQUIRE(solve(cycle(5), 2, GameConfig::classic(2)) == Player::breaker);
    std::uint64_t next_seed = 0;
    const auto rm = verify_maker_strategy(cycle(5), GameConfig::classic(2), [&] { return std::make_unique<RandomMaker>(next_seed); });
    CHECK_FALSE(rm.sound);
    CHECK(rm.counterexample);
    const auto greedy4 = verify_maker_strategy(star(4), GameConfig::classic(4), [] { return std::make_unique<GreedyMaker>(); });
    CHECK(greedy4.sound);
}
