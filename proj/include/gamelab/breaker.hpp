#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gamelab/boxgame.hpp"
#include "gamelab/play.hpp"
#include "gamelab/rng.hpp"

namespace gamelab {

/// Static part of the box reduction: anchors F = {f_1..f_s}, neighbor-edge sets
/// F'_i = Γ(f_i), and the box every edge maps to.
class BoxGeometry {
public:
    /// Throws if F is empty or names an invalid edge.
    BoxGeometry(const Graph& g, std::vector<EdgeId> anchors);

    std::size_t box_count() const { return anchors_.size(); }
    std::span<const EdgeId> anchors() const { return anchors_; }
    /// Edges sharing an endpoint with f_i, ascending.
    std::span<const EdgeId> box_edges(std::size_t i) const { return box_edges_.at(i); }
    /// argmin_j d(f_j, e), lowest j on ties.
    std::size_t box_of(EdgeId e) const { return box_of_.at(e); }
    /// d(f_i, e) as a minimum vertex distance.
    std::uint32_t distance(std::size_t i, EdgeId e) const { return distance_.at(i).at(e); }
    /// Box i whose Γ(f_i) contains e, if any.
    std::optional<std::size_t> fprime_box(EdgeId e) const { return fprime_box_.at(e); }

private:
    std::vector<EdgeId> anchors_;
    std::vector<std::vector<EdgeId>> box_edges_;
    std::vector<std::vector<std::uint32_t>> distance_;
    std::vector<std::size_t> box_of_;
    std::vector<std::optional<std::size_t>> fprime_box_;
};

/// Box index of e under the nearest-anchor rule (lowest index on ties).
std::size_t map_edge_to_box(const Graph& g, std::span<const EdgeId> anchors, EdgeId e);

/// Dynamic part: per-box Maker-touched flags, colored counts and colors on Γ(f_i).
/// Box i has capacity k and remaining k - (colored edges of Γ(f_i)).
class BoxReductionMemory {
public:
    BoxReductionMemory(std::shared_ptr<const BoxGeometry> geometry, std::uint32_t k);

    /// Folds one applied record into the memory.
    void observe(const MoveRecord& rec);
    void touch(std::size_t i) { touched_.at(i) = true; }
    /// Counts one more colored edge of Γ(f_i), carrying color c.
    void record_color(std::size_t i, Color c);
    static BoxReductionMemory from_log(std::shared_ptr<const BoxGeometry> geometry, std::uint32_t k, std::span<const MoveRecord> log);

    const BoxGeometry& geometry() const { return *geometry_; }
    bool touched(std::size_t i) const { return touched_.at(i); }
    std::uint32_t colored(std::size_t i) const { return colored_.at(i); }
    std::uint32_t remaining(std::size_t i) const { return k_ - std::min(k_, colored_.at(i)); }
    const ColorSet& colors(std::size_t i) const { return colors_.at(i); }
    /// The embedded Box game with Bob to move, `claims_made` claims into his turn.
    BoxGameState box_game(std::uint32_t bias, std::uint32_t claims_made) const;

    friend bool operator==(const BoxReductionMemory& a, const BoxReductionMemory& b) {
        return a.k_ == b.k_ && a.touched_ == b.touched_ && a.colored_ == b.colored_ && a.colors_ == b.colors_;
    }

private:
    std::shared_ptr<const BoxGeometry> geometry_;
    std::uint32_t k_;
    std::vector<bool> touched_;
    std::vector<std::uint32_t> colored_;
    std::vector<ColorSet> colors_;
};

/// Box states computed directly from a position: remaining from the current coloring,
/// touched flags from Maker's logged edges.
BoxReductionMemory box_memory_from_state(std::shared_ptr<const BoxGeometry> geometry, const GameState& s);

/// Breaker playing Bob's Box-game strategy on the boxes Γ(f_i). Each claim becomes a
/// coloring of an uncolored edge of Γ(f_i) with a color fresh at Γ(f_i). Stateless: the
/// memory is rebuilt from the log on every call, so one instance serves any position.
class BoxBreaker final : public BreakerStrategy {
public:
    explicit BoxBreaker(std::shared_ptr<const BoxGeometry> geometry) : geometry_(std::move(geometry)) {}
    std::optional<BreakerDecision> next(const GameState& state) override;
    std::string name() const override { return "box"; }

private:
    std::shared_ptr<const BoxGeometry> geometry_;
};

/// Uniform legal (edge, color) pairs until the bias is used up or no legal move exists.
class RandomBreaker final : public BreakerStrategy {
public:
    explicit RandomBreaker(std::uint64_t seed) : rng_(seed) {}
    std::optional<BreakerDecision> next(const GameState& state) override;
    std::string name() const override { return "random"; }

private:
    Rng rng_;
};

/// Colors the pair minimizing the smallest availability left among the other uncolored
/// edges; lowest edge, then lowest color, on ties.
class GreedyBlockingBreaker final : public BreakerStrategy {
public:
    std::optional<BreakerDecision> next(const GameState& state) override;
    std::string name() const override { return "greedy"; }
};

/// Always ends the turn without coloring.
class SkipBreaker final : public BreakerStrategy {
public:
    std::optional<BreakerDecision> next(const GameState&) override { return std::nullopt; }
    std::string name() const override { return "skip"; }
};

}  // namespace gamelab
