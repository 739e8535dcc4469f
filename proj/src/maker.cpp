#include "gamelab/maker.hpp"

#include <algorithm>

namespace gamelab {

void MakerConfig::validate() const {
    if (lambda <= Rational(0) || lambda >= Rational(1)) throw Error("lambda must lie in (0,1), got " + lambda.str());
    if (c <= Rational(0)) throw Error("c must be positive, got " + c.str());
    if (c > lambda / Rational(6)) throw Error("c must not exceed lambda/6 (so that q <= 1)");
}

std::uint32_t MakerConfig::palette_size(std::uint32_t bias, std::size_t max_degree) const {
    const auto delta = static_cast<std::int64_t>(max_degree);
    const auto b4 = static_cast<std::int64_t>(bias) * bias * bias * bias;
    const std::int64_t raw = ((Rational(2) - c / Rational(b4)) * Rational(delta)).floor();
    const std::int64_t lo = std::max<std::int64_t>(delta, 1);
    const std::int64_t hi = std::max<std::int64_t>(2 * delta - 1, 1);
    return static_cast<std::uint32_t>(std::clamp(raw, lo, hi));
}

Thresholds::Thresholds(const MakerConfig& cfg, std::uint32_t bias, std::size_t max_degree) {
    const Rational base = cfg.lambda * Rational(static_cast<std::int64_t>(max_degree)) / Rational(bias);
    for (int j = 1; j <= 3; ++j) t[j - 1] = Rational(j) * base;
}

const std::vector<Vertex>& compute_danger_set(const GameState& s, MakerMemory& mem, Vertex v) {
    if (mem.danger.at(v)) throw Error("danger set of vertex " + std::to_string(v) + " is already frozen");
    if (!mem.t2_round.at(v)) throw Error("vertex " + std::to_string(v) + " has not reached the second load threshold");
    const Graph& g = s.graph();
    const auto k = static_cast<std::int64_t>(s.config().k);
    const auto slack = 2 * static_cast<std::int64_t>(g.max_degree()) - k;
    const auto v_t1 = *mem.t1_round.at(v);
    std::vector<Vertex> out;
    for (EdgeId e : s.uncolored_incident(v)) {
        const Vertex u = g.edge(e).other(v);
        if (static_cast<std::int64_t>(g.degree(u) + g.degree(v)) < k) continue;
        if (static_cast<std::int64_t>(s.used_colors(u).intersection_size(s.used_colors(v))) > slack) continue;
        if (!mem.t1_round[u] || *mem.t1_round[u] > v_t1) continue;
        out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    mem.danger[v] = std::move(out);
    return *mem.danger[v];
}

void observe_round(const GameState& s, MakerMemory& mem, const Thresholds& th) {
    const auto r = s.completed_round();
    const auto n = s.graph().vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (!mem.t1_round[v] && th.reached(s.load(v), 1)) mem.t1_round[v] = r;
    std::vector<Vertex> fresh;
    for (Vertex v = 0; v < n; ++v) {
        if (!mem.t2_round[v] && th.reached(s.load(v), 2)) {
            mem.t2_round[v] = r;
            fresh.push_back(v);
        }
    }
    for (Vertex v : fresh) compute_danger_set(s, mem, v);
}

DangerSetMaker::DangerSetMaker(MakerConfig cfg, std::uint64_t seed) : cfg_(cfg), seed_(seed) { cfg_.validate(); }

MakerDecision DangerSetMaker::decide(const GameState& state) {
    const Graph& g = state.graph();
    if (state.uncolored_edges().empty()) throw Error("no uncolored edge left for Maker");
    if (!started_ || !state.last_maker_edge()) {
        mem_ = MakerMemory(g.vertex_count(), seed_);
        started_ = true;
    }
    const Thresholds th(cfg_, state.config().bias, g.max_degree());
    observe_round(state, mem_, th);
    Rng& rng = mem_.rng;

    // Step 1: anchor edge.
    if (!mem_.f0) mem_.f0 = static_cast<EdgeId>(rng.below(g.edge_count()));
    auto anchors = state.last_breaker_turn_edges();
    if (anchors.empty()) {
        const auto free = state.uncolored_edges();
        anchors.push_back(free[rng.below(free.size())]);
    }
    std::sort(anchors.begin(), anchors.end());
    MakerAnnotation ann;
    ann.anchor = rng.below(2) == 0 ? *mem_.f0 : anchors[rng.below(anchors.size())];

    // Step 2: endpoint with an uncolored incident edge.
    const Edge& f = g.edge(ann.anchor);
    Vertex v = rng.below(2) == 0 ? f.u : f.v;
    if (state.uncolored_incident(v).empty()) {
        ann.replaced = true;
        v = f.other(v);
        if (state.uncolored_incident(v).empty()) {
            std::vector<Vertex> live;
            for (Vertex x = 0; x < g.vertex_count(); ++x)
                if (!state.uncolored_incident(x).empty()) live.push_back(x);
            v = live[rng.below(live.size())];
        }
    }
    ann.v = v;

    // Step 3: neighbor, possibly redirected into the danger set.
    auto open = state.uncolored_neighbors(v);
    std::sort(open.begin(), open.end());
    Vertex u = open[rng.below(open.size())];
    if (th.reached(state.load(v), 2) && mem_.danger[v]) {
        std::vector<Vertex> risky;
        std::set_intersection(mem_.danger[v]->begin(), mem_.danger[v]->end(), open.begin(), open.end(), std::back_inserter(risky));
        if (!risky.empty() && rng.bernoulli(cfg_.q())) {
            ann.redirected = true;
            u = risky[rng.below(risky.size())];
        }
    }
    ann.u = u;

    // Step 4: uniform available color; a uniform palette color when starved.
    const EdgeId e = *g.edge_between(u, v);
    const ColorSet avail = state.available_colors(e);
    Color c;
    if (const auto n = avail.size(); n > 0) {
        c = avail.nth(static_cast<std::uint32_t>(rng.below(n)));
    } else {
        c = static_cast<Color>(rng.below(state.config().k) + 1);
    }
    mem_.f0 = e;
    return {e, c, ann};
}

MakerDecision RandomMaker::decide(const GameState& state) {
    std::vector<EdgeId> free(state.uncolored_edges().begin(), state.uncolored_edges().end());
    if (free.empty()) throw Error("no uncolored edge left for Maker");
    std::sort(free.begin(), free.end());
    std::uint64_t total = 0;
    for (EdgeId e : free) total += state.available_count(e);
    if (total == 0) {
        const EdgeId e = free[rng_.below(free.size())];
        return {e, static_cast<Color>(rng_.below(state.config().k) + 1), std::nullopt};
    }
    auto pick = rng_.below(total);
    for (EdgeId e : free) {
        const auto n = state.available_count(e);
        if (pick < n) return {e, state.available_colors(e).nth(static_cast<std::uint32_t>(pick)), std::nullopt};
        pick -= n;
    }
    throw Error("RandomMaker: inconsistent availability");
}

MakerDecision GreedyMaker::decide(const GameState& state) {
    std::optional<EdgeId> best;
    std::uint32_t best_n = 0;
    std::optional<EdgeId> lowest_free;
    for (EdgeId e : state.uncolored_edges()) {
        if (!lowest_free || e < *lowest_free) lowest_free = e;
        const auto n = state.available_count(e);
        if (n == 0) continue;
        if (!best || n < best_n || (n == best_n && e < *best)) {
            best = e;
            best_n = n;
        }
    }
    if (!lowest_free) throw Error("no uncolored edge left for Maker");
    if (!best) return {*lowest_free, 1, std::nullopt};
    return {*best, state.available_colors(*best).nth(0), std::nullopt};
}

}  // namespace gamelab
