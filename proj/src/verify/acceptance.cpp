#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "gamelab/exact.hpp"
#include "gamelab/goodset.hpp"
#include "gamelab/harness.hpp"
#include "gamelab/verify.hpp"

namespace gamelab::verify {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::skipped: return "SKIP";
    }
    return "?";
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << '[' << to_string(r.status) << "] " << r.id << ' ' << r.title << " (" << r.seconds << " s): " << r.detail;
    return os.str();
}

namespace {

// Limits on wall time and search effort.
constexpr double kStarSolveSeconds = 10;
constexpr double kOddCycleSeconds = 60;
constexpr double kBoxOracleSeconds = 60;
constexpr double kSmallReductionSeconds = 300;
constexpr double kMediumReductionSeconds = 120;
constexpr std::uint64_t kSolverBudget = 200'000'000;
constexpr std::uint32_t kReductionGames = 1000;
constexpr std::uint32_t kPigeonholeGames = 1000;
constexpr std::uint32_t kDangerSetMakerGames = 100;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::array<std::pair<const char*, GameConfig>, 2>& variants() {
    static const std::array<std::pair<const char*, GameConfig>, 2> v{
        {{"classic", GameConfig::classic(1, 1)}, {"skip", GameConfig::skip_variant(1, 1)}}};
    return v;
}

struct Outcome {
    Status status;
    std::string detail;
};

Outcome stars() {
    std::ostringstream d;
    bool ok = true;
    double worst = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const auto& [name, variant] : variants()) {
            const auto t0 = Clock::now();
            const auto chi = game_chromatic_index(star(n), 1, variant, kSolverBudget);
            const double secs = since(t0);
            worst = std::max(worst, secs);
            if (!chi.complete) return {Status::skipped, "solver budget exceeded on K_{1," + std::to_string(n) + "}"};
            const bool good = chi.value && *chi.value == n && secs < kStarSolveSeconds;
            ok &= good;
            if (!good) d << "K_{1," << n << "} " << name << " value " << (chi.value ? std::to_string(*chi.value) : "none") << "; ";
        }
    }
    d << "values equal n for n=2..6 in both variants" << (ok ? "" : " FAILED") << ", slowest solve " << worst << " s";
    return {ok ? Status::pass : Status::fail, d.str()};
}

Outcome odd_cycles() {
    const auto t0 = Clock::now();
    std::ostringstream d;
    bool ok = true;
    for (std::size_t n : {3, 5, 7, 9}) {
        for (const auto& [name, variant] : variants()) {
            const auto chi = game_chromatic_index(cycle(n), 1, variant, kSolverBudget);
            if (!chi.complete) return {Status::skipped, "solver budget exceeded on C_" + std::to_string(n)};
            if (!chi.value || *chi.value != 3) {
                ok = false;
                d << "C_" << n << ' ' << name << " value " << (chi.value ? std::to_string(*chi.value) : "none") << "; ";
            }
        }
    }
    const double secs = since(t0);
    ok &= secs < kOddCycleSeconds;
    d << "C_3, C_5, C_7, C_9 both variants, total " << secs << " s (limit " << kOddCycleSeconds << ")";
    return {ok ? Status::pass : Status::fail, d.str()};
}

Outcome forest_bound() {
    std::size_t count = 0, bad = 0;
    std::uint32_t worst_excess = 0;
    for (const auto& t : enumerate_trees(8)) {
        const auto delta = static_cast<std::uint32_t>(t.max_degree());
        if (delta < 5) continue;
        ++count;
        for (const auto& [name, variant] : variants()) {
            const auto chi = game_chromatic_index(t, 1, variant, kSolverBudget);
            if (!chi.complete || !chi.value) return {Status::skipped, "solver budget exceeded on a tree"};
            worst_excess = std::max(worst_excess, *chi.value - delta);
            if (*chi.value > delta + 1) ++bad;
        }
    }
    std::ostringstream d;
    d << count << " trees with at most 8 edges and max degree >= 5, both variants; " << bad
      << " exceed max degree + 1; largest value - max degree = " << worst_excess;
    return {bad == 0 && count > 0 ? Status::pass : Status::fail, d.str()};
}

Outcome box_oracle() {
    const auto t0 = Clock::now();
    std::size_t cases = 0, mismatches = 0;
    std::string first;
    for (std::uint32_t s = 1; s <= 4; ++s) {
        for (std::uint32_t lo = 1; lo <= 4; ++lo) {
            for (std::uint32_t bigger = 0; bigger < s; ++bigger) {
                if (bigger > 0 && lo + 1 > 4) continue;
                std::vector<std::uint32_t> sizes(s - bigger, lo);
                sizes.insert(sizes.end(), bigger, lo + 1);
                for (std::uint32_t b = 1; b <= 3; ++b) {
                    ++cases;
                    const bool criterion = bob_wins(sizes, b);
                    const bool oracle = brute_force_box_winner(sizes, b) == BoxPlayer::bob;
                    if (criterion != oracle) {
                        ++mismatches;
                        if (first.empty()) {
                            first = " first mismatch at sizes";
                            for (auto x : sizes) first += " " + std::to_string(x);
                            first += ", b=" + std::to_string(b);
                        }
                    }
                }
            }
        }
    }
    const double secs = since(t0);
    std::ostringstream d;
    d << cases << " near-uniform instances, " << mismatches << " mismatches, " << secs << " s" << first;
    return {mismatches == 0 && secs < kBoxOracleSeconds ? Status::pass : Status::fail, d.str()};
}

Outcome box_values() {
    using boost::multiprecision::cpp_rational;
    std::ostringstream d;
    const std::array<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>, 4> expected{
        {{2, 1, 2}, {3, 1, 4}, {4, 1, 6}, {5, 2, 20}}};
    bool ok = true;
    for (const auto& [s, b, f] : expected) {
        const auto got = box_threshold(s, b);
        d << "f(" << s << ',' << b << ")=" << got << ' ';
        ok &= got == f;
    }
    std::size_t violations = 0;
    for (std::uint32_t b = 1; b <= 10; ++b) {
        cpp_rational h = 0;  // H_{s-1}
        std::uint64_t f = 0;
        for (std::uint32_t s = 1; s <= 1000; ++s) {
            if (s >= 2) {
                h += cpp_rational(1, s - 1);
                f = (static_cast<std::uint64_t>(s) * (f + b)) / (s - 1);
            }
            if (box_threshold(s, b) != f) ++violations;
            if (cpp_rational(f) < cpp_rational(b - 1) * s * h) ++violations;
        }
    }
    ok &= violations == 0;
    d << "; harmonic lower bound checked for s<=1000, b<=10 with " << violations << " violations";
    return {ok ? Status::pass : Status::fail, d.str()};
}

Outcome small_reduction() {
    const auto t0 = Clock::now();
    const Graph g = cycle(10);
    const auto cert = find_good_set(g);
    const bool cond = cert.edges.size() == 2 && lemma_condition(g, cert.edges, 3);
    const auto cfg = GameConfig::skip_variant(2, 3);
    Player winner;
    try {
        winner = solve(g, cfg, kSolverBudget).winner;
    } catch (const BudgetExceeded& e) {
        return {Status::skipped, e.what()};
    }
    auto geometry = std::make_shared<const BoxGeometry>(g, cert.edges);
    const auto vr = verify_breaker_strategy(g, cfg, [&] { return std::make_unique<BoxBreaker>(geometry); });
    const double secs = since(t0);
    std::ostringstream d;
    d << "(a) |F|=" << cert.edges.size() << " condition " << (cond ? "holds" : "fails") << "; (b) solver: " << to_string(winner)
      << "; (c) box Breaker " << (vr.sound ? "sound" : "unsound") << " over " << vr.leaves << " leaves; " << secs << " s";
    const bool ok = cond && winner == Player::breaker && vr.sound && secs < kSmallReductionSeconds;
    return {ok ? Status::pass : Status::fail, d.str()};
}

ExperimentSpec reduction_spec(const std::string& maker, std::uint64_t seed) {
    ExperimentSpec spec;
    spec.graph = "cycle:25";
    spec.maker = maker;
    spec.breaker = "box";
    spec.k = 2;
    spec.bias = 2;
    spec.trials = kReductionGames;
    spec.seed = seed;
    return spec;
}

std::string medium_reduction_reports(std::uint64_t seed, bool& ok, std::string& detail) {
    const Graph g = cycle(25);
    const auto cert = find_good_set(g);
    const auto lemma = lemma_condition(g.max_degree(), cert.edges.size(), 2);
    std::ostringstream d;
    d << "|F|=" << cert.edges.size() << ", " << lemma.lhs << " <= " << lemma.rhs << (lemma.satisfied ? " holds" : " fails");
    ok = cert.edges.size() == 5 && lemma.satisfied;
    std::string reports;
    for (const char* maker : {"random", "greedy"}) {
        const auto rep = run_match(g, reduction_spec(maker, seed));
        d << "; vs " << maker << "_maker Breaker won " << rep.breaker_wins << '/' << rep.spec.trials;
        ok &= rep.breaker_wins == kReductionGames && rep.reduction_breaks == 0;
        reports += report_json(rep);
    }
    detail = d.str();
    return reports;
}

ExperimentSpec danger_maker_spec(std::uint64_t seed) {
    ExperimentSpec spec;
    spec.maker = "paper";
    spec.breaker = "greedy";
    spec.k = static_cast<std::uint32_t>((Rational(195, 100) * Rational(16)).ceil());
    spec.bias = 1;
    spec.mode = PlayMode::modified;
    spec.trials = kDangerSetMakerGames;
    spec.seed = seed;
    spec.telemetry = true;
    return spec;
}

std::string danger_maker_report(std::uint64_t seed, bool& ok, std::string& detail) {
    const auto graph_seed = derive_seed(seed, 0x67726170);
    const Graph g = random_regular(64, 16, graph_seed);
    auto spec = danger_maker_spec(seed);
    spec.graph = "random_regular:64:16:" + std::to_string(graph_seed);
    const auto rep = run_match(g, spec);
    const auto [lo, hi] = wilson_interval(rep.maker_wins, rep.spec.trials);
    std::ostringstream d;
    d << "k=" << rep.k << ", " << rep.spec.trials - rep.unfinished << '/' << rep.spec.trials << " games terminated, "
      << rep.telemetry_mismatches << " telemetry mismatches, Maker win rate " << rep.maker_win_rate() << " (95% Wilson [" << lo << ", "
      << hi << "]), forced moves " << rep.forced_nonproper;
    detail = d.str();
    ok = rep.unfinished == 0 && rep.telemetry_mismatches == 0;
    return report_json(rep);
}

Outcome pigeonhole(std::uint64_t seed) {
    const auto corpus = mixed_corpus();
    const auto per_graph = static_cast<std::uint32_t>((kPigeonholeGames + corpus.size() - 1) / corpus.size());
    std::uint64_t games = 0, breaker = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (corpus[i].graph.edge_count() == 0) continue;
        ExperimentSpec spec;
        spec.graph = corpus[i].name;
        spec.trials = per_graph;
        spec.seed = derive_seed(seed, i);
        spec.classic = i % 2 == 1;
        const auto rep = run_match(corpus[i].graph, spec);
        games += rep.spec.trials;
        breaker += rep.breaker_wins;
    }
    std::ostringstream d;
    d << corpus.size() << " graphs, " << games << " random-play games at k = 2*maxdeg - 1, " << breaker << " Breaker wins";
    return {corpus.size() >= 20 && games >= kPigeonholeGames && breaker == 0 ? Status::pass : Status::fail, d.str()};
}

Outcome memo_vs_brute() {
    std::size_t checks = 0, mismatches = 0, graphs = 0;
    std::string first;
    for (const auto& [name, g] : mixed_corpus()) {
        if (g.edge_count() == 0 || g.edge_count() > 7) continue;
        ++graphs;
        const auto delta = static_cast<std::uint32_t>(g.max_degree());
        for (std::uint32_t k = delta; k <= 2 * delta - 1; ++k) {
            for (const auto& [vname, variant] : variants()) {
                GameConfig cfg = variant;
                cfg.k = k;
                Player memo;
                try {
                    memo = solve(g, cfg, kSolverBudget).winner;
                } catch (const BudgetExceeded& e) {
                    return {Status::skipped, e.what()};
                }
                const auto brute = brute_force_winner(g, cfg);
                ++checks;
                if (memo != brute) {
                    ++mismatches;
                    if (first.empty()) first = "; first mismatch " + name + " k=" + std::to_string(k) + " " + vname;
                }
            }
        }
    }
    std::ostringstream d;
    d << graphs << " graphs, " << checks << " (graph, k, variant) checks, " << mismatches << " mismatches" << first;
    return {mismatches == 0 && graphs > 0 ? Status::pass : Status::fail, d.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only, std::uint64_t seed) {
    auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
    std::vector<CriterionResult> out;
    std::optional<std::string> reports7, reports9;

    auto run = [&](int id, const std::string& title, const std::function<Outcome()>& body) {
        if (!wanted(id)) return;
        CriterionResult r;
        r.id = id;
        r.title = title;
        const auto t0 = Clock::now();
        try {
            const auto o = body();
            r.status = o.status;
            r.detail = o.detail;
        } catch (const BudgetExceeded& e) {
            r.status = Status::skipped;
            r.detail = e.what();
        } catch (const std::exception& e) {
            r.status = Status::fail;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = since(t0);
        out.push_back(r);
    };

    run(1, "stars K_{1,n}: value n", stars);
    run(2, "odd cycles: value 3", odd_cycles);
    run(3, "trees with max degree >= 5: value <= max degree + 1", forest_bound);
    run(4, "box game criterion vs minimax", box_oracle);
    run(5, "box game thresholds and harmonic bound", box_values);
    run(6, "C_10, b=3, k=2: good set, solver, verified box Breaker", small_reduction);
    run(7, "C_25, b=2, k=2: box Breaker wins every game", [&]() -> Outcome {
        const auto t0 = Clock::now();
        bool ok = false;
        std::string detail;
        reports7 = medium_reduction_reports(seed, ok, detail);
        const double secs = since(t0);
        ok &= secs < kMediumReductionSeconds;
        return {ok ? Status::pass : Status::fail, detail};
    });
    run(8, "pigeonhole palette: no Breaker wins", [&] { return pigeonhole(seed); });
    run(9, "danger-set Maker on a 16-regular graph: integrity", [&]() -> Outcome {
        bool ok = false;
        std::string detail;
        reports9 = danger_maker_report(seed, ok, detail);
        return {ok ? Status::pass : Status::fail, detail};
    });
    run(10, "memoized solver vs brute force", memo_vs_brute);
    run(11, "reproducible reports", [&]() -> Outcome {
        bool ok_unused = false;
        std::string detail_unused;
        if (!reports7) reports7 = medium_reduction_reports(seed, ok_unused, detail_unused);
        if (!reports9) reports9 = danger_maker_report(seed, ok_unused, detail_unused);
        const bool same7 = medium_reduction_reports(seed, ok_unused, detail_unused) == *reports7;
        const bool same9 = danger_maker_report(seed, ok_unused, detail_unused) == *reports9;
        std::ostringstream d;
        d << "criterion 7 reports " << (same7 ? "identical" : "differ") << ", criterion 9 report " << (same9 ? "identical" : "differ")
          << " (" << reports7->size() + reports9->size() << " bytes)";
        return {same7 && same9 ? Status::pass : Status::fail, d.str()};
    });
    return out;
}

}  // namespace gamelab::verify
