#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "gamelab/play.hpp"

namespace gamelab {

/// Largest instance the exact solver accepts: colors pack into 4 bits per edge.
inline constexpr std::size_t kSolverMaxEdges = 16;
inline constexpr std::uint32_t kSolverMaxColors = 15;

struct SolveStats {
    Player winner = Player::maker;
    std::uint64_t nodes = 0;
    std::uint64_t table_size = 0;
};

/// Exact winner under optimal play in strict mode, by depth-first search with a
/// transposition table keyed on the color-relabeled coloring and the turn phase.
/// Throws BudgetExceeded after `budget` nodes.
SolveStats solve_position(const GameState& s, std::uint64_t budget = 100'000'000, bool use_table = true);
SolveStats solve(const Graph& g, const GameConfig& cfg, std::uint64_t budget = 100'000'000, bool use_table = true);
Player solve(const Graph& g, std::uint32_t k, GameConfig cfg, std::uint64_t budget = 100'000'000);

/// Canonical form of a coloring: colors renumbered 1, 2, ... by first appearance in edge order.
std::vector<Color> canonical_coloring(std::span<const Color> coloring);

struct ChiResult {
    /// Winner for each k in [max(1,Δ), 2Δ-1]; nullopt where the budget ran out.
    std::map<std::uint32_t, std::optional<Player>> winners;
    /// Smallest k with a Maker win among solved entries; 0 for an edgeless graph.
    std::optional<std::uint32_t> value;
    bool complete = true;
    std::uint32_t bias = 1;
    bool breaker_may_skip = true;
    Player first_player = Player::breaker;
};

/// Solves every k in range; never infers a winner from a neighboring k.
ChiResult game_chromatic_index(const Graph& g, std::uint32_t bias, const GameConfig& variant, std::uint64_t budget = 100'000'000);

struct VerifyResult {
    bool sound = true;
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    /// A complete game the strategy's side loses, when unsound.
    std::optional<MoveLog> counterexample;
};

using MakerFactory = std::function<std::unique_ptr<MakerStrategy>()>;
using BreakerFactory = std::function<std::unique_ptr<BreakerStrategy>()>;

/// Plays a fixed strategy against every legal reply of the other side (strict mode).
/// A fresh strategy instance is rebuilt along each line by replaying its own earlier
/// decisions, so stateful strategies are followed faithfully.
VerifyResult verify_breaker_strategy(const Graph& g, const GameConfig& cfg, const BreakerFactory& make, std::uint64_t budget = 50'000'000);
VerifyResult verify_maker_strategy(const Graph& g, const GameConfig& cfg, const MakerFactory& make, std::uint64_t budget = 50'000'000);

}  // namespace gamelab
