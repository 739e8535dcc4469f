#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gamelab/breaker.hpp"
#include "gamelab/goodset.hpp"
#include "gamelab/maker.hpp"

using namespace gamelab;

namespace {

std::shared_ptr<const BoxGeometry> geometry_for(const Graph& g) {
    return std::make_shared<const BoxGeometry>(g, find_good_set(g).edges);
}

// Breaker decision by exhaustive scoring: for every legal (edge, color) in ascending order,
// the smallest availability left among the other uncolored edges; first minimum wins.
std::optional<std::pair<EdgeId, Color>> greedy_oracle(const GameState& s) {
    const Graph& g = s.graph();
    const auto k = s.config().k;
    std::vector<Color> col(s.coloring().begin(), s.coloring().end());
    auto avail_count = [&](EdgeId f) {
        std::set<Color> taken;
        for (auto h : g.neighbor_edges(f))
            if (col[h] != kNoColor) taken.insert(col[h]);
        return k - static_cast<std::uint32_t>(taken.size());
    };
    std::optional<std::pair<EdgeId, Color>> best;
    std::uint64_t best_score = UINT64_MAX;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (col[e] != kNoColor) continue;
        for (Color c = 1; c <= k; ++c) {
            bool ok = true;
            for (auto h : g.neighbor_edges(e)) ok &= col[h] != c;
            if (!ok) continue;
            col[e] = c;
            std::uint64_t score = UINT64_MAX - 1;
            for (EdgeId f = 0; f < g.edge_count(); ++f)
                if (col[f] == kNoColor) score = std::min<std::uint64_t>(score, avail_count(f));
            col[e] = kNoColor;
            if (score < best_score) {
                best_score = score;
                best = {{e, c}};
            }
        }
    }
    return best;
}

void check_fresh(const GameState& s, const BoxGeometry& geo, const MoveLog& log) {
    // For every Breaker coloring inside Γ(f_i) of a box untouched so far, colors stay distinct.
    BoxReductionMemory mem(std::make_shared<const BoxGeometry>(geo), s.config().k);
    GameState replayed(s.graph_ptr(), s.config());
    for (const auto& rec : log) {
        replayed.apply(rec);
        if (rec.player == Player::breaker && !rec.skip) {
            if (auto i = geo.fprime_box(rec.edge); i && !mem.touched(*i)) {
                std::set<Color> seen;
                std::size_t colored = 0;
                for (auto e : geo.box_edges(*i)) {
                    if (!replayed.is_colored(e)) continue;
                    ++colored;
                    seen.insert(replayed.color_of(e));
                }
                REQUIRE(seen.size() == colored);
            }
        }
        mem.observe(rec);
    }
}

}  // namespace

TEST_CASE("map_edge_to_box examples") {
    const Graph g = cycle(25);
    const auto geo = geometry_for(g);
    REQUIRE(geo->box_count() == 5);
    const auto F = geo->anchors();
    for (std::size_t i = 0; i < F.size(); ++i) {
        CHECK(map_edge_to_box(g, F, F[i]) == i);
        for (auto e : geo->box_edges(i)) CHECK(map_edge_to_box(g, F, e) == i);
    }
    std::size_t ties = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::uint32_t best = kInfiniteDistance;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < F.size(); ++i) {
            const auto d = edge_distance(g, e, F[i]);
            if (d < best) {
                best = d;
                arg = i;
            }
        }
        CHECK(map_edge_to_box(g, F, e) == arg);
        CHECK(geo->box_of(e) == arg);
        std::size_t at_min = 0;
        for (std::size_t i = 0; i < F.size(); ++i) at_min += edge_distance(g, e, F[i]) == best;
        ties += at_min > 1;
    }
    CHECK(ties == 0);
    CHECK_THROWS_AS(BoxGeometry(g, {}), Error);
}

TEST_CASE("equidistant edges go to the lower box") {
    const Graph g = cycle(26);
    const auto geo = geometry_for(g);
    REQUIRE(geo->box_count() == 5);
    // Five edges separate the last anchor from the first; the middle one is equidistant.
    const auto last = g.edge(geo->anchors()[4]);
    const auto mid = *g.edge_between(last.v + 2, last.v + 3);
    CHECK(geo->distance(0, mid) == geo->distance(4, mid));
    CHECK(map_edge_to_box(g, geo->anchors(), mid) == 0);
}

TEST_CASE("a Maker edge far from every anchor touches exactly one box") {
    const Graph g = cycle(25);
    const auto geo = geometry_for(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        BoxReductionMemory mem(geo, 2);
        MoveRecord rec;
        rec.round = 2;
        rec.player = Player::maker;
        rec.edge = e;
        rec.color = 1;
        mem.observe(rec);
        std::size_t touched = 0;
        for (std::size_t i = 0; i < geo->box_count(); ++i) touched += mem.touched(i);
        CHECK(touched == 1);
        CHECK(mem.touched(geo->box_of(e)));
    }
}

TEST_CASE("full box blocks its anchor") {
    GameState s(cycle(10), GameConfig::skip_variant(2, 3));
    const auto geo = geometry_for(s.graph());
    const auto box = geo->box_edges(0);
    REQUIRE(box.size() == 2);
    s.color_edge(Player::breaker, box[0], 1);
    s.color_edge(Player::breaker, box[1], 2);
    CHECK(box_memory_from_state(geo, s).remaining(0) == 0);
    CHECK(s.is_blocked(geo->anchors()[0]));
    CHECK(s.winner() == Outcome::breaker_won);
}

TEST_CASE("box Breaker on C_10, b=3, k=2 blocks an anchor in its first turn") {
    GameState s(cycle(10), GameConfig::skip_variant(2, 3));
    BoxBreaker breaker(geometry_for(s.graph()));
    RandomMaker maker(1);
    play_out(s, maker, breaker);
    CHECK(s.winner() == Outcome::breaker_won);
    CHECK(s.breaker_win_round() == 1u);
}

TEST_CASE("box memory: incremental, from log and from position agree; colors stay fresh") {
    struct Case {
        Graph g;
        std::uint32_t k, b;
    };
    const std::vector<Case> cases{{cycle(25), 2, 2}, {cycle(40), 2, 2}, {random_regular(60, 3, 4), 4, 3}, {cycle(10), 2, 3}};
    for (const auto& cs : cases) {
        const auto geo = geometry_for(cs.g);
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            for (int maker_kind = 0; maker_kind < 3; ++maker_kind) {
                GameState s(cs.g, seed % 2 ? GameConfig::classic(cs.k, cs.b) : GameConfig::skip_variant(cs.k, cs.b));
                std::unique_ptr<MakerStrategy> maker;
                if (maker_kind == 0) maker = std::make_unique<RandomMaker>(seed);
                else if (maker_kind == 1) maker = std::make_unique<GreedyMaker>();
                else maker = std::make_unique<DangerSetMaker>(MakerConfig{}, seed);
                BoxBreaker breaker(geo);
                BoxReductionMemory live(geo, cs.k);
                play_out(s, *maker, breaker, [&](const GameState& st, const MoveRecord& rec) {
                    live.observe(rec);
                    REQUIRE(live == BoxReductionMemory::from_log(geo, cs.k, st.log()));
                    for (std::size_t i = 0; i < geo->box_count(); ++i)
                        REQUIRE(live.remaining(i) == box_memory_from_state(geo, st).remaining(i));
                });
                check_fresh(s, *geo, s.log());
            }
        }
    }
}

TEST_CASE("box Breaker wins whenever the reduction condition holds") {
    std::size_t instances = 0;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Graph g = seed <= 2 ? cycle(20 + 5 * seed) : random_regular(60 + 10 * seed, 3, seed);
        const std::uint32_t b = seed <= 2 ? 2 : 3;
        const auto cert = find_good_set(g);
        if (!lemma_condition(g, cert.edges, b)) continue;
        ++instances;
        const auto k = static_cast<std::uint32_t>(2 * g.max_degree() - 2);
        const auto geo = std::make_shared<const BoxGeometry>(g, cert.edges);
        for (std::uint64_t t = 0; t < 30; ++t) {
            for (int kind = 0; kind < 3; ++kind) {
                GameState s(g, GameConfig::skip_variant(k, b));
                std::unique_ptr<MakerStrategy> maker;
                if (kind == 0) maker = std::make_unique<RandomMaker>(t);
                else if (kind == 1) maker = std::make_unique<GreedyMaker>();
                else maker = std::make_unique<DangerSetMaker>(MakerConfig{}, t);
                BoxBreaker breaker(geo);
                play_out(s, *maker, breaker);
                REQUIRE(s.winner() == Outcome::breaker_won);
                for (const auto& rec : s.log())
                    if (rec.breaker) REQUIRE(rec.breaker->kind != BreakerMoveKind::reduction_break);
            }
        }
    }
    CHECK(instances >= 3);
}

TEST_CASE("greedy blocking Breaker matches exhaustive scoring") {
    std::size_t positions = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = seed % 3 == 0 ? complete(5) : gnp(8, 0.45, seed);
        if (g.edge_count() == 0) continue;
        const auto k = static_cast<std::uint32_t>(std::max<std::size_t>(1, g.max_degree() + seed % 3));
        GameState s(g, GameConfig::classic(k, 2));
        RandomMaker maker(seed);
        GreedyBlockingBreaker greedy;
        while (!s.finished()) {
            if (s.to_move() == Player::maker) {
                const auto d = maker.decide(s);
                s.color_edge(Player::maker, d.edge, d.color);
                continue;
            }
            const auto got = greedy.next(s);
            const auto want = greedy_oracle(s);
            REQUIRE(got.has_value() == want.has_value());
            ++positions;
            if (!got) {
                s.end_breaker_turn();
                continue;
            }
            REQUIRE(got->edge == want->first);
            REQUIRE(got->color == want->second);
            s.color_edge(Player::breaker, got->edge, got->color);
        }
    }
    CHECK(positions > 200);
}

TEST_CASE("baseline Breakers") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            GameState s(star(n), GameConfig::skip_variant(static_cast<std::uint32_t>(n)));
            RandomMaker maker(seed);
            SkipBreaker breaker;
            play_out(s, maker, breaker);
            CHECK(s.winner() == Outcome::maker_won);
        }
    }
    GameState a(complete(6), GameConfig::classic(7, 3)), b(complete(6), GameConfig::classic(7, 3));
    RandomMaker ma(3), mb(3);
    RandomBreaker ba(9), bb(9);
    play_out(a, ma, ba);
    play_out(b, mb, bb);
    CHECK(a.log() == b.log());
}
