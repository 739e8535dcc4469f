#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gamelab/play.hpp"
#include "gamelab/rational.hpp"
#include "gamelab/rng.hpp"

namespace gamelab {

/// Constants of the randomized Maker strategy. Requires 0 < c <= lambda/6 < 1.
struct MakerConfig {
    Rational lambda{1, 10};
    Rational c{1, 1000};

    void validate() const;
    /// Redirect probability q = 6c/lambda.
    Rational q() const { return Rational(6) * c / lambda; }
    /// Palette size floor((2 - c/b^4) * Δ), clamped into [Δ, 2Δ-1].
    std::uint32_t palette_size(std::uint32_t bias, std::size_t max_degree) const;
};

/// Load thresholds T_j = j * lambda * Δ / b for j = 1, 2, 3, compared exactly.
struct Thresholds {
    std::array<Rational, 3> t;

    Thresholds(const MakerConfig& cfg, std::uint32_t bias, std::size_t max_degree);
    /// ℓ >= T_j, j in {1,2,3}.
    bool reached(std::uint32_t load, int j) const { return reaches(load, t.at(j - 1)); }
    const Rational& operator[](int j) const { return t.at(j - 1); }
};

/// Per-game state of the randomized Maker: last own edge, first rounds at which loads
/// reached T1 and T2, and danger sets frozen at the T2 crossing.
struct MakerMemory {
    std::optional<EdgeId> f0;
    std::vector<std::optional<std::uint32_t>> t1_round;
    std::vector<std::optional<std::uint32_t>> t2_round;
    std::vector<std::optional<std::vector<Vertex>>> danger;
    Rng rng;

    MakerMemory() = default;
    MakerMemory(std::size_t vertex_count, std::uint64_t seed)
        : t1_round(vertex_count), t2_round(vertex_count), danger(vertex_count), rng(seed) {}

    bool has_danger_set(Vertex v) const { return danger.at(v).has_value(); }
};

/// D(v): uncolored neighbors u with deg(u)+deg(v) >= k, |U(u) ∩ U(v)| <= 2Δ-k and
/// T1-round(u) <= T1-round(v). Freezes the result into `mem`; throws if D(v) is already
/// frozen or v has not reached T2.
const std::vector<Vertex>& compute_danger_set(const GameState& s, MakerMemory& mem, Vertex v);

/// Records threshold crossings for the round just completed and freezes danger sets
/// of vertices that reached T2 in it.
void observe_round(const GameState& s, MakerMemory& mem, const Thresholds& th);

/// The randomized strategy: pick an anchor among Maker's last edge and Breaker's last
/// edges, a random endpoint v, a random uncolored v-edge (redirected into D(v) with
/// probability q once v is loaded), and a uniform available color.
class DangerSetMaker final : public MakerStrategy {
public:
    DangerSetMaker(MakerConfig cfg, std::uint64_t seed);
    MakerDecision decide(const GameState& state) override;
    std::string name() const override { return "paper"; }

    const MakerMemory& memory() const { return mem_; }
    const MakerConfig& config() const { return cfg_; }

private:
    MakerConfig cfg_;
    std::uint64_t seed_;
    MakerMemory mem_;
    bool started_ = false;
};

/// Uniform legal (edge, color) pair.
class RandomMaker final : public MakerStrategy {
public:
    explicit RandomMaker(std::uint64_t seed) : rng_(seed) {}
    MakerDecision decide(const GameState& state) override;
    std::string name() const override { return "random"; }

private:
    Rng rng_;
};

/// Uncolored edge with fewest available colors (lowest index on ties), lowest available color.
class GreedyMaker final : public MakerStrategy {
public:
    MakerDecision decide(const GameState& state) override;
    std::string name() const override { return "greedy"; }
};

}  // namespace gamelab
