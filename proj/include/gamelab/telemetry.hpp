#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gamelab/maker.hpp"

namespace gamelab {

/// Per-vertex quantities of the randomized Maker's analysis, measured on one game.
/// Rounds are indexed from 0 (before any move); `load[r]` is ℓ_r(v).
struct VertexTrace {
    std::vector<std::uint32_t> load;
    /// Σ ℓ_r(u) over u ∈ Γ'_r(v) and |Γ'_r(v)|, per round.
    std::vector<std::uint64_t> nbr_load_sum;
    std::vector<std::uint32_t> nbr_count;
    /// First round r with ℓ_r(v) >= T_j, j = 1, 2, 3.
    std::array<std::optional<std::uint32_t>, 3> crossing;
    /// Good v-edges whose pre-move load lies in [(j-1)T1, jT1).
    std::array<std::uint32_t, 3> window_good{};
    std::uint32_t good_total = 0;
    /// Colors of the first floor(λΔ/(5b²)) good v-edges played at pre-move load < T1.
    std::vector<Color> i_prime;
    /// Colors of good v-edges played at pre-move load in [T1, T2), ascending and distinct.
    std::vector<Color> i_v;
    /// D(v) as seen at Maker's first decision after v reached T2; unset if no such decision.
    std::optional<std::vector<Vertex>> danger;
    /// Neighbors u such that ℓ_r(v) >= T1 implies ℓ_r(u) >= T1.
    std::vector<Vertex> danger_prime;

    friend bool operator==(const VertexTrace&, const VertexTrace&) = default;
};

/// Eligible and violating vertex counts for one inequality.
struct ViolationCount {
    std::uint64_t eligible = 0;
    std::uint64_t violating = 0;
    double fraction() const { return eligible == 0 ? 0.0 : static_cast<double>(violating) / static_cast<double>(eligible); }
    ViolationCount& operator+=(const ViolationCount& o) {
        eligible += o.eligible;
        violating += o.violating;
        return *this;
    }
    friend bool operator==(const ViolationCount&, const ViolationCount&) = default;
};

/// Descriptive counts of vertices where a analysis-scale inequality fails.
struct ViolationSummary {
    /// Fewer than λΔ/(5b²) good v-edges in window j, over vertices of degree >= jT1.
    std::array<ViolationCount, 3> good_rate;
    /// Some round with ℓ_r(v) < T2 has average load >= 9λΔ over Γ'_r(v), over vertices of
    /// degree >= (1 - c/b⁴)Δ.
    ViolationCount neighborhood_load;
    /// At least cΔ/b² colors reach multiplicity cλΔ/(4b⁴) among {I'(u) : u ∈ Γ(v)}.
    ViolationCount color_mixing;
    /// |D(v)| > cΔ/b², over vertices whose D(v) is defined.
    ViolationCount danger_size;

    ViolationSummary& operator+=(const ViolationSummary& o);
    friend bool operator==(const ViolationSummary&, const ViolationSummary&) = default;
};

struct TelemetryReport {
    std::uint32_t k = 0;
    std::uint32_t bias = 1;
    std::size_t max_degree = 0;
    Rational lambda;
    Rational c;
    std::array<Rational, 3> thresholds;
    std::uint32_t i_prime_cap = 0;
    std::uint32_t rounds = 0;
    std::uint32_t maker_moves = 0;
    std::uint32_t forced_moves = 0;
    Outcome outcome = Outcome::ongoing;
    std::vector<VertexTrace> vertices;
    /// η_i = |{u ∈ Γ(v) : i ∈ I'(u)}| per vertex v and color i (index i-1).
    std::vector<std::vector<std::uint32_t>> eta;
    ViolationSummary violations;

    friend bool operator==(const TelemetryReport&, const TelemetryReport&) = default;
};

/// Recomputes every trace by replaying the log. Throws if a Maker record lacks its annotation.
TelemetryReport analyze(const Graph& g, const GameConfig& cfg, const MakerConfig& mcfg, std::span<const MoveRecord> log);

/// Incremental counterpart of analyze(), fed as a MoveObserver during play.
class Recorder {
public:
    Recorder(const Graph& g, const GameConfig& cfg, const MakerConfig& mcfg);
    void observe(const GameState& s, const MoveRecord& rec);
    MoveObserver observer() {
        return [this](const GameState& s, const MoveRecord& rec) { observe(s, rec); };
    }
    /// Closes the open traces; call once after the game.
    TelemetryReport finish(const GameState& final_state);

private:
    void close_round(const GameState& s, std::uint32_t round);

    const Graph& g_;
    GameConfig cfg_;
    MakerConfig mcfg_;
    Thresholds th_;
    TelemetryReport rep_;
    std::uint32_t last_closed_ = 0;
};

/// One row per vertex with its summary quantities.
std::string vertex_csv(const TelemetryReport& r);
/// One row per (round, vertex): load and neighborhood average load.
std::string load_csv(const TelemetryReport& r);
std::string summary_json(const TelemetryReport& r);
/// Compact JSON object of the violation counts.
std::string violations_json(const ViolationSummary& v);

}  // namespace gamelab
