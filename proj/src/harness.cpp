#include "gamelab/harness.hpp"

#include <cmath>

#include "gamelab/goodset.hpp"
#include "json.hpp"

namespace gamelab {

std::unique_ptr<MakerStrategy> make_maker(const std::string& name, const MakerConfig& cfg, std::uint64_t seed) {
    if (name == "paper") return std::make_unique<DangerSetMaker>(cfg, seed);
    if (name == "random") return std::make_unique<RandomMaker>(seed);
    if (name == "greedy") return std::make_unique<GreedyMaker>();
    throw Error("unknown Maker strategy '" + name + "' (expected paper, random or greedy)");
}

std::unique_ptr<BreakerStrategy> make_breaker(const std::string& name, std::shared_ptr<const BoxGeometry> geometry, std::uint64_t seed) {
    if (name == "box") {
        if (!geometry) throw Error("the box Breaker needs a non-empty good set");
        return std::make_unique<BoxBreaker>(std::move(geometry));
    }
    if (name == "random") return std::make_unique<RandomBreaker>(seed);
    if (name == "greedy") return std::make_unique<GreedyBlockingBreaker>();
    if (name == "skip") return std::make_unique<SkipBreaker>();
    throw Error("unknown Breaker strategy '" + name + "' (expected box, random, greedy or skip)");
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double denom = 1 + z * z / n;
    const double centre = (p + z * z / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

MatchReport run_match(const Graph& g, const ExperimentSpec& spec) {
    MatchReport rep;
    rep.spec = spec;
    rep.vertices = g.vertex_count();
    rep.edges = g.edge_count();
    rep.max_degree = g.max_degree();
    const auto delta = static_cast<std::uint32_t>(g.max_degree());
    if (spec.k) {
        rep.k = *spec.k;
    } else if (spec.maker == "paper") {
        rep.k = spec.maker_cfg.palette_size(spec.bias, g.max_degree());
    } else {
        rep.k = std::max<std::uint32_t>(1, 2 * delta - 1);
    }
    if (spec.telemetry && spec.maker != "paper") throw Error("telemetry needs the paper Maker");

    GameConfig cfg = spec.classic ? GameConfig::classic(rep.k, spec.bias) : GameConfig::skip_variant(rep.k, spec.bias);
    cfg.mode = spec.mode;
    cfg.validate();

    std::shared_ptr<const BoxGeometry> geometry;
    if (spec.breaker == "box") {
        rep.goodset = spec.goodset.empty() ? find_good_set(g).edges : spec.goodset;
        if (rep.goodset.empty()) throw Error("the box Breaker needs a non-empty good set, and the greedy finder found none");
        if (!check_good_set(g, rep.goodset)) throw Error("the supplied edge set is not a good set");
        geometry = std::make_shared<const BoxGeometry>(g, rep.goodset);
    }

    auto shared = std::make_shared<const Graph>(g);
    for (std::uint32_t i = 0; i < spec.trials; ++i) {
        const auto trial_seed = derive_seed(spec.seed, i);
        auto maker = make_maker(spec.maker, spec.maker_cfg, derive_seed(trial_seed, 0));
        auto breaker = make_breaker(spec.breaker, geometry, derive_seed(trial_seed, 1));
        GameState state(shared, cfg);
        std::optional<Recorder> recorder;
        if (spec.telemetry) recorder.emplace(g, cfg, spec.maker_cfg);
        play_out(state, *maker, *breaker, recorder ? recorder->observer() : MoveObserver{});

        if (!state.finished()) ++rep.unfinished;
        if (state.winner() == Outcome::maker_won) ++rep.maker_wins;
        if (state.winner() == Outcome::breaker_won) ++rep.breaker_wins;
        rep.total_records += state.log().size();
        rep.total_rounds += state.round();
        rep.forced_nonproper += state.forced_count();
        for (const auto& rec : state.log())
            if (rec.breaker && rec.breaker->kind == BreakerMoveKind::reduction_break) ++rep.reduction_breaks;
        if (recorder) {
            const auto live = recorder->finish(state);
            const auto replayed = analyze(g, cfg, spec.maker_cfg, state.log());
            if (!(live == replayed)) ++rep.telemetry_mismatches;
            rep.violations += replayed.violations;
        }
        if (spec.keep_logs) rep.logs.push_back(state.log());
    }
    return rep;
}

std::string report_json(const MatchReport& r) {
    nlohmann::ordered_json j;
    auto& s = j["spec"];
    s["graph"] = r.spec.graph;
    s["maker"] = r.spec.maker;
    s["breaker"] = r.spec.breaker;
    s["lambda"] = r.spec.maker_cfg.lambda.str();
    s["c"] = r.spec.maker_cfg.c.str();
    s["k"] = r.k;
    s["bias"] = r.spec.bias;
    s["variant"] = r.spec.classic ? "classic" : "skip";
    s["mode"] = std::string(to_string(r.spec.mode));
    s["trials"] = r.spec.trials;
    s["seed"] = r.spec.seed;
    j["graph"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"max_degree", r.max_degree}};
    if (!r.goodset.empty()) j["goodset"] = r.goodset;
    j["maker_wins"] = r.maker_wins;
    j["breaker_wins"] = r.breaker_wins;
    j["unfinished"] = r.unfinished;
    j["maker_win_rate"] = r.maker_win_rate();
    const auto [lo, hi] = wilson_interval(r.maker_wins, r.spec.trials);
    j["maker_win_rate_wilson95"] = {lo, hi};
    const double n = r.spec.trials == 0 ? 1.0 : r.spec.trials;
    j["mean_records"] = static_cast<double>(r.total_records) / n;
    j["mean_rounds"] = static_cast<double>(r.total_rounds) / n;
    j["forced_nonproper"] = r.forced_nonproper;
    j["reduction_breaks"] = r.reduction_breaks;
    if (r.spec.telemetry) {
        j["telemetry_mismatches"] = r.telemetry_mismatches;
        j["violations"] = nlohmann::ordered_json::parse(violations_json(r.violations));
    }
    return j.dump(2) + "\n";
}

}  // namespace gamelab
