#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "gamelab/harness.hpp"
#include "gamelab/verify.hpp"

using namespace gamelab;

TEST_CASE("pigeonhole palette: Maker wins every game") {
    for (const auto& [name, g] : verify::mixed_corpus()) {
        if (g.edge_count() == 0) continue;
        for (const char* maker : {"random", "greedy", "paper"}) {
            for (const char* breaker : {"random", "greedy", "skip"}) {
                ExperimentSpec spec;
                spec.graph = name;
                spec.maker = maker;
                spec.breaker = breaker;
                spec.k = static_cast<std::uint32_t>(2 * g.max_degree() - 1);
                spec.trials = 10;
                const auto r = run_match(g, spec);
                REQUIRE(r.maker_wins == 10);
            }
        }
    }
}

TEST_CASE("C_25 reduction wins and reports are deterministic") {
    const Graph g = cycle(25);
    ExperimentSpec spec;
    spec.graph = "cycle:25";
    spec.maker = "random";
    spec.breaker = "box";
    spec.k = 2;
    spec.bias = 2;
    spec.trials = 1000;
    spec.seed = 77;
    const auto a = run_match(g, spec);
    CHECK(a.breaker_wins == 1000);
    CHECK(a.goodset.size() == 5);
    CHECK(report_json(a) == report_json(run_match(g, spec)));
    spec.seed = 78;
    spec.maker = "paper";
    spec.keep_logs = true;
    const auto b = run_match(g, spec);
    CHECK(b.breaker_wins == 1000);
    CHECK(b.logs.size() == 1000);
}

TEST_CASE("default palette and report fields") {
    const Graph g = random_regular(20, 4, 3);
    ExperimentSpec spec;
    spec.maker = "paper";
    spec.breaker = "greedy";
    spec.trials = 5;
    spec.telemetry = true;
    spec.mode = PlayMode::modified;
    const auto r = run_match(g, spec);
    CHECK(r.k == MakerConfig{}.palette_size(1, 4));
    CHECK(r.telemetry_mismatches == 0);
    CHECK(r.unfinished == 0);
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j.at("maker_wins").get<int>() + j.at("breaker_wins").get<int>() == 5);
    spec.maker = "random";
    spec.telemetry = false;
    CHECK(run_match(g, spec).k == 7);
}

TEST_CASE("policy and graph mismatches are rejected") {
    ExperimentSpec spec;
    spec.breaker = "box";
    CHECK_THROWS_AS(run_match(star(4), spec), Error);
    spec.breaker = "nonsense";
    CHECK_THROWS_AS(run_match(cycle(5), spec), Error);
    spec.breaker = "random";
    spec.maker = "random";
    spec.telemetry = true;
    CHECK_THROWS_AS(run_match(cycle(5), spec), Error);
}

TEST_CASE("Wilson interval") {
    const auto [lo, hi] = wilson_interval(50, 100);
    CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
    const auto [l0, h0] = wilson_interval(0, 10);
    CHECK(l0 == 0.0);
    CHECK(h0 == doctest::Approx(0.2775).epsilon(1e-3));
    const auto [l1, h1] = wilson_interval(100, 100);
    CHECK(l1 == doctest::Approx(0.9630).epsilon(1e-3));
    CHECK(h1 == doctest::Approx(1.0));
}

TEST_CASE("acceptance results format") {
    verify::CriterionResult r{5, "box game thresholds", verify::Status::pass, "ok", 0.25};
    CHECK(verify::format_result(r) == "[PASS] 5 box game thresholds (0.25 s): ok");
    const auto quick = verify::run_acceptance({4, 5}, verify::kDefaultAcceptanceSeed);
    REQUIRE(quick.size() == 2);
    for (const auto& q : quick) CHECK(q.status == verify::Status::pass);
}
