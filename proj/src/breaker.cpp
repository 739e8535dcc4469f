#include "gamelab/breaker.hpp"

#include <algorithm>
#include <limits>

namespace gamelab {

BoxGeometry::BoxGeometry(const Graph& g, std::vector<EdgeId> anchors) : anchors_(std::move(anchors)) {
    if (anchors_.empty()) throw Error("box reduction needs a non-empty good set");
    const auto m = g.edge_count();
    box_of_.assign(m, 0);
    fprime_box_.assign(m, std::nullopt);
    for (std::size_t i = 0; i < anchors_.size(); ++i) {
        const EdgeId f = anchors_[i];
        g.edge(f);
        const auto dv = distances_from_edge(g, f);
        std::vector<std::uint32_t> de(m);
        for (EdgeId e = 0; e < m; ++e) de[e] = std::min(dv[g.edge(e).u], dv[g.edge(e).v]);
        distance_.push_back(std::move(de));
        auto nb = g.neighbor_edges(f);
        std::sort(nb.begin(), nb.end());
        for (EdgeId e : nb)
            if (!fprime_box_[e]) fprime_box_[e] = i;
        box_edges_.push_back(std::move(nb));
    }
    for (EdgeId e = 0; e < m; ++e) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < anchors_.size(); ++i)
            if (distance_[i][e] < distance_[best][e]) best = i;
        box_of_[e] = best;
    }
}

std::size_t map_edge_to_box(const Graph& g, std::span<const EdgeId> anchors, EdgeId e) {
    if (anchors.empty()) throw Error("box reduction needs a non-empty good set");
    std::size_t best = 0;
    std::uint32_t best_d = kInfiniteDistance;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const auto d = edge_distance(g, anchors[i], e);
        if (i == 0 || d < best_d) {
            best = i;
            best_d = d;
        }
    }
    return best;
}

BoxReductionMemory::BoxReductionMemory(std::shared_ptr<const BoxGeometry> geometry, std::uint32_t k)
    : geometry_(std::move(geometry)), k_(k) {
    const auto s = geometry_->box_count();
    touched_.assign(s, false);
    colored_.assign(s, 0);
    colors_.assign(s, ColorSet(k));
}

void BoxReductionMemory::observe(const MoveRecord& rec) {
    if (rec.skip) return;
    if (rec.player == Player::maker) touch(geometry_->box_of(rec.edge));
    if (auto i = geometry_->fprime_box(rec.edge)) record_color(*i, rec.color);
}

void BoxReductionMemory::record_color(std::size_t i, Color c) {
    ++colored_.at(i);
    colors_.at(i).insert(c);
}

BoxReductionMemory BoxReductionMemory::from_log(std::shared_ptr<const BoxGeometry> geometry, std::uint32_t k,
                                                std::span<const MoveRecord> log) {
    BoxReductionMemory mem(std::move(geometry), k);
    for (const auto& rec : log) mem.observe(rec);
    return mem;
}

BoxGameState BoxReductionMemory::box_game(std::uint32_t bias, std::uint32_t claims_made) const {
    const std::vector<std::uint32_t> sizes(touched_.size(), k_);
    BoxGameState st = BoxGameState::initial(sizes, bias, BoxPlayer::bob);
    for (std::size_t i = 0; i < touched_.size(); ++i) {
        st.remaining[i] = remaining(i);
        st.alice_touched[i] = touched_[i];
    }
    st.bob_claims_this_turn = claims_made;
    return st;
}

BoxReductionMemory box_memory_from_state(std::shared_ptr<const BoxGeometry> geometry, const GameState& s) {
    BoxReductionMemory mem(geometry, s.config().k);
    for (const auto& rec : s.log())
        if (!rec.skip && rec.player == Player::maker) mem.touch(geometry->box_of(rec.edge));
    for (std::size_t i = 0; i < geometry->box_count(); ++i)
        for (EdgeId e : geometry->box_edges(i))
            if (s.is_colored(e)) mem.record_color(i, s.color_of(e));
    return mem;
}

namespace {

struct Move {
    EdgeId edge;
    Color color;
};

// Lowest (edge, color) over `edges` with color in A(e), restricted to `fresh_against` when given.
std::optional<Move> lowest_move(const GameState& s, std::span<const EdgeId> edges, const ColorSet* fresh_against) {
    for (EdgeId e : edges) {
        if (s.is_colored(e)) continue;
        const auto avail = s.available_colors(e);
        for (Color c : avail.to_vector())
            if (!fresh_against || !fresh_against->contains(c)) return Move{e, c};
    }
    return std::nullopt;
}

}  // namespace

std::optional<BreakerDecision> BoxBreaker::next(const GameState& state) {
    if (!state.has_legal_breaker_move()) return std::nullopt;
    const auto& cfg = state.config();
    const auto mem = BoxReductionMemory::from_log(geometry_, cfg.k, state.log());
    const auto game = mem.box_game(cfg.bias, state.moves_this_turn());
    const auto claims = game.winner() ? std::vector<std::size_t>{} : bob_strategy(game);

    bool broken = false;
    if (!claims.empty()) {
        const auto i = claims.front();
        if (auto mv = lowest_move(state, geometry_->box_edges(i), &mem.colors(i)))
            return BreakerDecision{mv->edge, mv->color, BreakerAnnotation{static_cast<int>(i), BreakerMoveKind::fresh}};
        broken = true;
    }

    // Any F' move that keeps untouched boxes free of repeated colors.
    std::optional<Move> best;
    int best_box = -1;
    for (std::size_t i = 0; i < geometry_->box_count(); ++i) {
        auto mv = lowest_move(state, geometry_->box_edges(i), mem.touched(i) ? nullptr : &mem.colors(i));
        if (mv && (!best || mv->edge < best->edge || (mv->edge == best->edge && mv->color < best->color))) {
            best = mv;
            best_box = static_cast<int>(i);
        }
    }
    if (best)
        return BreakerDecision{best->edge, best->color,
                               BreakerAnnotation{best_box, broken ? BreakerMoveKind::reduction_break : BreakerMoveKind::fallback_fprime}};

    if (cfg.breaker_may_skip || state.moves_this_turn() > 0) return std::nullopt;
    std::vector<EdgeId> free(state.uncolored_edges().begin(), state.uncolored_edges().end());
    std::sort(free.begin(), free.end());
    const auto mv = lowest_move(state, free, nullptr);
    if (!mv) return std::nullopt;
    return BreakerDecision{mv->edge, mv->color, BreakerAnnotation{-1, broken ? BreakerMoveKind::reduction_break : BreakerMoveKind::fallback_any}};
}

std::optional<BreakerDecision> RandomBreaker::next(const GameState& state) {
    std::vector<EdgeId> free(state.uncolored_edges().begin(), state.uncolored_edges().end());
    std::sort(free.begin(), free.end());
    std::uint64_t total = 0;
    for (EdgeId e : free) total += state.available_count(e);
    if (total == 0) return std::nullopt;
    auto pick = rng_.below(total);
    for (EdgeId e : free) {
        const auto n = state.available_count(e);
        if (pick < n) return BreakerDecision{e, state.available_colors(e).nth(static_cast<std::uint32_t>(pick)), std::nullopt};
        pick -= n;
    }
    throw Error("RandomBreaker: inconsistent availability");
}

std::optional<BreakerDecision> GreedyBlockingBreaker::next(const GameState& state) {
    const Graph& g = state.graph();
    constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
    std::vector<EdgeId> free(state.uncolored_edges().begin(), state.uncolored_edges().end());
    std::sort(free.begin(), free.end());
    std::vector<ColorSet> avail(g.edge_count());
    std::vector<std::uint32_t> count(g.edge_count(), 0);
    std::vector<std::pair<std::uint32_t, EdgeId>> order;
    for (EdgeId e : free) {
        avail[e] = state.available_colors(e);
        count[e] = avail[e].size();
        order.emplace_back(count[e], e);
    }
    std::sort(order.begin(), order.end());

    std::optional<BreakerDecision> best;
    std::uint32_t best_score = inf;
    for (EdgeId e : free) {
        if (count[e] == 0) continue;
        const Edge& ed = g.edge(e);
        // Smallest availability among uncolored edges unaffected by coloring e.
        std::uint32_t base = inf;
        for (const auto& [n, f] : order) {
            if (f == e || g.edge(f).has(ed.u) || g.edge(f).has(ed.v)) continue;
            base = n;
            break;
        }
        // Adjacent uncolored edges lose one unit exactly when they share the chosen color.
        std::uint32_t a_min = inf;
        ColorSet tight(state.config().k);
        for (Vertex x : {ed.u, ed.v}) {
            for (EdgeId f : state.uncolored_incident(x)) {
                if (f == e) continue;
                if (count[f] < a_min) {
                    a_min = count[f];
                    tight = avail[f];
                } else if (count[f] == a_min) {
                    tight |= avail[f];
                }
            }
        }
        Color c = avail[e].nth(0);
        std::uint32_t score = std::min(base, a_min);
        if (a_min != inf && a_min > 0 && a_min - 1 < base) {
            ColorSet hit = avail[e];
            hit &= tight;
            if (!hit.empty()) {
                c = hit.nth(0);
                score = a_min - 1;
            }
        }
        if (!best || score < best_score) {
            best = BreakerDecision{e, c, std::nullopt};
            best_score = score;
        }
    }
    return best;
}

}  // namespace gamelab
