#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gamelab/breaker.hpp"
#include "gamelab/maker.hpp"
#include "gamelab/telemetry.hpp"

namespace gamelab {

std::unique_ptr<MakerStrategy> make_maker(const std::string& name, const MakerConfig& cfg, std::uint64_t seed);
/// `geometry` is required for "box" and ignored otherwise.
std::unique_ptr<BreakerStrategy> make_breaker(const std::string& name, std::shared_ptr<const BoxGeometry> geometry, std::uint64_t seed);

struct ExperimentSpec {
    std::string graph;  ///< description echoed in the report
    std::string maker = "random";
    std::string breaker = "random";
    MakerConfig maker_cfg;
    /// Palette size; defaults to the danger-set Maker palette rule for that Maker and 2Δ-1 otherwise.
    std::optional<std::uint32_t> k;
    std::uint32_t bias = 1;
    bool classic = false;  ///< Maker first without skipping, instead of Breaker first with skipping
    PlayMode mode = PlayMode::strict;
    std::uint32_t trials = 100;
    std::uint64_t seed = 1;
    /// Anchors for the box Breaker; found greedily when empty.
    std::vector<EdgeId> goodset;
    bool keep_logs = false;
    /// Record telemetry live and compare it with the from-log recomputation (danger-set Maker only).
    bool telemetry = false;
};

struct MatchReport {
    ExperimentSpec spec;
    std::uint32_t k = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t max_degree = 0;
    std::uint32_t maker_wins = 0;
    std::uint32_t breaker_wins = 0;
    std::uint32_t unfinished = 0;
    std::uint64_t total_records = 0;
    std::uint64_t total_rounds = 0;
    std::uint64_t forced_nonproper = 0;
    std::uint64_t reduction_breaks = 0;
    std::uint32_t telemetry_mismatches = 0;
    ViolationSummary violations;
    std::vector<EdgeId> goodset;
    std::vector<MoveLog> logs;

    double maker_win_rate() const { return spec.trials == 0 ? 0.0 : static_cast<double>(maker_wins) / spec.trials; }
};

/// Wilson score interval for `successes` out of `trials` at z = 1.96.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

/// Trial i uses seed derive_seed(spec.seed, i); maker and breaker streams are derived from it.
/// Throws on policy/graph mismatch such as a box Breaker without a good set.
MatchReport run_match(const Graph& g, const ExperimentSpec& spec);

/// Deterministic JSON rendering of a report (logs excluded).
std::string report_json(const MatchReport& r);

}  // namespace gamelab
