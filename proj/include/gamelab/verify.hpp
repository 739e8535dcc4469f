#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "gamelab/boxgame.hpp"
#include "gamelab/engine.hpp"

namespace gamelab::verify {

/// Plain minimax over full colorings: no transposition table, no color relabeling, and its
/// own legality and winner rules. Only for tiny instances.
Player brute_force_winner(const Graph& g, const GameConfig& cfg);

/// Minimax over per-box (remaining, touched) vectors, in box order, with Bob's turn
/// expanded as single claims or a pass.
BoxPlayer brute_force_box_winner(std::span<const std::uint32_t> sizes, std::uint32_t b, BoxPlayer first = BoxPlayer::alice);

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Mixed graphs: stars, paths, cycles, complete and complete bipartite graphs, trees,
/// and seeded random graphs.
std::vector<NamedGraph> mixed_corpus();

enum class Status { pass, fail, skipped };
std::string_view to_string(Status s);

struct CriterionResult {
    int id = 0;
    std::string title;
    Status status = Status::fail;
    std::string detail;
    double seconds = 0;
};

/// Criteria 1..11; `only` selects a subset (empty = all). `seed` feeds every seeded run.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only, std::uint64_t seed);
inline constexpr std::uint64_t kDefaultAcceptanceSeed = 20240617;
inline constexpr int kCriterionCount = 11;

/// "[PASS] 3 title (1.2 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace gamelab::verify
