#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gamelab/breaker.hpp"
#include "gamelab/maker.hpp"

using namespace gamelab;

namespace {

std::set<Color> colors_of(const ColorSet& s, std::uint32_t k) {
    std::set<Color> out;
    for (Color c = 1; c <= k; ++c)
        if (s.contains(c)) out.insert(c);
    return out;
}

// Recomputes every derived quantity from the raw coloring.
void check_consistent(const GameState& s) {
    const Graph& g = s.graph();
    const auto k = s.config().k;
    const auto col = s.coloring();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::uint32_t load = 0;
        std::set<Color> used;
        std::size_t open = 0;
        for (auto e : g.incident_edges(v)) {
            if (col[e] != kNoColor) {
                ++load;
                used.insert(col[e]);
            } else {
                ++open;
            }
        }
        REQUIRE(s.load(v) == load);
        REQUIRE(s.load(v) == g.degree(v) - s.uncolored_incident(v).size());
        REQUIRE(open == s.uncolored_neighbors(v).size());
        REQUIRE(colors_of(s.used_colors(v), k) == used);
    }
    bool blocked = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        std::set<Color> taken;
        for (auto f : g.neighbor_edges(e)) {
            if (col[f] == kNoColor) continue;
            if (col[e] != kNoColor && s.config().mode == PlayMode::strict) REQUIRE(col[f] != col[e]);
            if (g.edge(f).has(ed.u) || g.edge(f).has(ed.v)) taken.insert(col[f]);
        }
        if (col[e] != kNoColor) continue;
        std::set<Color> avail;
        for (Color c = 1; c <= k; ++c)
            if (!taken.count(c)) avail.insert(c);
        REQUIRE(colors_of(s.available_colors(e), k) == avail);
        REQUIRE(s.available_count(e) == avail.size());
        blocked |= avail.empty();
    }
    if (s.config().mode == PlayMode::strict) {
        if (blocked) REQUIRE(s.winner() == Outcome::breaker_won);
        else if (s.uncolored_edges().empty()) REQUIRE(s.winner() == Outcome::maker_won);
        else REQUIRE(s.winner() == Outcome::ongoing);
    }
}

const std::vector<Graph>& fuzz_graphs() {
    static const std::vector<Graph> gs{star(4), path(6), cycle(5), cycle(6), complete(4), complete(5), complete_bipartite(2, 3),
                                       random_regular(8, 3, 1), gnp(8, 0.4, 2), gnp(9, 0.3, 5)};
    return gs;
}

}  // namespace

TEST_CASE("new_game examples") {
    GameState s(star(3), GameConfig::classic(3));
    for (EdgeId e = 0; e < 3; ++e) CHECK(colors_of(s.available_colors(e), 3) == std::set<Color>{1, 2, 3});
    for (Vertex v = 0; v < 4; ++v) CHECK(s.load(v) == 0);
    CHECK(s.winner() == Outcome::ongoing);
    CHECK(s.to_move() == Player::maker);
    GameState b(cycle(5), GameConfig::skip_variant(3));
    CHECK(b.to_move() == Player::breaker);
    CHECK(b.round() == 1);
}

TEST_CASE("available_colors examples") {
    GameState tri(cycle(3), GameConfig::skip_variant(2, 2));
    tri.color_edge(Player::breaker, 0, 1);
    tri.color_edge(Player::breaker, 1, 2);
    CHECK(tri.available_count(2) == 0);
    CHECK(tri.winner() == Outcome::breaker_won);

    GameState p(path(3), GameConfig::classic(3));
    p.color_edge(Player::maker, *p.graph().edge_between(0, 1), 1);
    CHECK(colors_of(p.available_colors(*p.graph().edge_between(1, 2)), 3) == std::set<Color>{2, 3});
}

TEST_CASE("move legality") {
    GameState s(path(5), GameConfig::classic(3, 1));
    s.color_edge(Player::maker, 0, 1);
    s.color_edge(Player::breaker, 3, 1);
    CHECK(s.to_move() == Player::maker);  // b = 1: turn auto-ends
    CHECK_THROWS_AS(s.color_edge(Player::breaker, 2, 2), IllegalMove);
    CHECK_THROWS_AS(s.color_edge(Player::maker, 0, 2), IllegalMove);
    CHECK_THROWS_AS(s.color_edge(Player::maker, 1, 1), IllegalMove);
    CHECK_THROWS_AS(s.color_edge(Player::maker, 1, 4), IllegalMove);

    GameState b2(path(5), GameConfig::classic(3, 2));
    b2.color_edge(Player::maker, 0, 1);
    b2.color_edge(Player::breaker, 2, 1);
    CHECK(b2.to_move() == Player::breaker);
    try {
        b2.color_edge(Player::breaker, 1, 1);
        FAIL("blocked color accepted");
    } catch (const IllegalMove& e) {
        CHECK(e.reason() == IllegalMove::Reason::color_blocked);
    }
    b2.end_breaker_turn();
    CHECK(b2.to_move() == Player::maker);
}

TEST_CASE("turn ends") {
    GameState s(cycle(5), GameConfig::skip_variant(3, 2));
    s.end_breaker_turn();
    CHECK(s.to_move() == Player::maker);
    CHECK(s.round() == 2);

    GameState c(cycle(5), GameConfig::classic(3, 2));
    c.color_edge(Player::maker, 0, 1);
    CHECK_THROWS_AS(c.end_breaker_turn(), IllegalMove);
    c.color_edge(Player::breaker, 2, 1);
    c.color_edge(Player::breaker, 3, 2);
    CHECK(c.to_move() == Player::maker);
    CHECK(c.last_breaker_turn_edges() == std::vector<EdgeId>{2, 3});
}

TEST_CASE("winner_check examples") {
    GameState s(path(3), GameConfig::classic(2));
    CHECK(s.winner() == Outcome::ongoing);
    s.color_edge(Player::maker, 0, 1);
    s.color_edge(Player::breaker, 1, 2);
    CHECK(s.winner() == Outcome::maker_won);
    CHECK(s.finished());
}

TEST_CASE("modified mode: starved Maker plays a flagged color, result sticky") {
    auto cfg = GameConfig::skip_variant(2, 2);
    cfg.mode = PlayMode::modified;
    GameState s(cycle(3), cfg);
    s.color_edge(Player::breaker, 0, 1);
    s.color_edge(Player::breaker, 1, 2);
    CHECK(s.winner() == Outcome::breaker_won);
    CHECK_FALSE(s.finished());
    RandomMaker m(4);
    const auto d = m.decide(s);
    s.color_edge(Player::maker, d.edge, d.color);
    CHECK(s.log().back().forced_nonproper);
    CHECK(s.forced_count() == 1);
    CHECK(s.winner() == Outcome::breaker_won);
    CHECK(s.finished());
    CHECK(s.breaker_win_round() == 1u);
}

TEST_CASE("random play fuzz: bookkeeping, replay, serialization") {
    std::uint64_t games = 0;
    for (std::uint64_t seed = 0; games < 10000; ++seed) {
        const Graph& g = fuzz_graphs()[seed % fuzz_graphs().size()];
        const auto delta = static_cast<std::uint32_t>(g.max_degree());
        const auto k = 1 + static_cast<std::uint32_t>(seed % (2 * delta));
        const auto b = 1 + static_cast<std::uint32_t>(seed % 3);
        GameConfig cfg = seed % 2 ? GameConfig::classic(k, b) : GameConfig::skip_variant(k, b);
        if (seed % 7 == 0) cfg.mode = PlayMode::modified;
        auto gp = std::make_shared<const Graph>(g);
        GameState s = new_game(gp, cfg);
        RandomMaker maker(derive_seed(seed, 0));
        RandomBreaker breaker(derive_seed(seed, 1));
        const bool deep = games % 10 == 0;
        play_out(s, maker, breaker, [&](const GameState& st, const MoveRecord&) {
            if (deep) check_consistent(st);
        });
        check_consistent(s);
        REQUIRE(s.finished());
        const GameState r = replay(gp, cfg, s.log());
        REQUIRE(r == s);
        REQUIRE(read_move_log(g, write_move_log(g, s.log())) == s.log());
        if (k >= 2 * delta - 1) REQUIRE(s.winner() == Outcome::maker_won);
        ++games;
    }
}

TEST_CASE("replay: empty and truncated logs") {
    auto gp = std::make_shared<const Graph>(complete(5));
    const auto cfg = GameConfig::classic(5, 2);
    CHECK(replay(gp, cfg, {}) == new_game(gp, cfg));
    GameState s = new_game(gp, cfg);
    RandomMaker m(1);
    RandomBreaker b(2);
    play_out(s, m, b);
    for (std::size_t n = 0; n <= s.log().size(); ++n) {
        const auto part = replay(gp, cfg, std::span(s.log()).first(n));
        check_consistent(part);
    }
    auto bad = s.log();
    bad[1].color = bad[0].color;
    bad[1].edge = bad[0].edge;
    try {
        replay(gp, cfg, bad);
        FAIL("tampered log replayed");
    } catch (const IllegalMove& e) {
        CHECK(e.step() == 1u);
    }
}

TEST_CASE("move log JSON line shape") {
    const Graph g = path(3);
    GameState s(g, GameConfig::skip_variant(2));
    s.end_breaker_turn();
    s.color_edge(Player::maker, 1, 2);
    const auto skip = to_json_line(g, s.log()[0]);
    const auto move = to_json_line(g, s.log()[1]);
    CHECK(skip.find("\"p\":\"B\"") != std::string::npos);
    CHECK(skip.find("\"skip\":true") != std::string::npos);
    CHECK(move.find("\"e\":[1,2]") != std::string::npos);
    CHECK(move.find("\"c\":2") != std::string::npos);
    CHECK(from_json_line(g, move) == s.log()[1]);
}
