#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gamelab/exact.hpp"
#include "gamelab/goodset.hpp"
#include "gamelab/harness.hpp"
#include "gamelab/verify.hpp"

namespace py = pybind11;
using namespace gamelab;

namespace {

GameConfig make_config(const std::string& variant, std::uint32_t k, std::uint32_t bias, const std::string& mode) {
    GameConfig cfg;
    if (variant == "classic") cfg = GameConfig::classic(k, bias);
    else if (variant == "skip") cfg = GameConfig::skip_variant(k, bias);
    else throw Error("unknown variant " + variant);
    if (mode == "modified") cfg.mode = PlayMode::modified;
    else if (mode != "strict") throw Error("unknown mode " + mode);
    return cfg;
}

MakerConfig make_maker_config(const std::string& lambda, const std::string& c) {
    MakerConfig m;
    m.lambda = Rational::parse(lambda);
    m.c = Rational::parse(c);
    m.validate();
    return m;
}

std::string name(BoxPlayer p) { return std::string(to_string(p)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Maker-Breaker edge-coloring game core";

    auto base = py::register_exception<Error>(m, "GamelabError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 std::vector<Edge> es;
                 for (auto [u, v] : edges) es.push_back({u, v});
                 return Graph(n, std::move(es));
             }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def("degree", &Graph::degree)
        .def("edges", [](const Graph& g) {
            std::vector<std::pair<Vertex, Vertex>> out;
            for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
            return out;
        })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("generate", &generate, py::arg("spec"));
    m.def("read_edge_list", &read_edge_list, py::arg("text"));
    m.def("write_edge_list", &write_edge_list, py::arg("graph"));
    m.def("edge_distance", &edge_distance, py::arg("graph"), py::arg("e"), py::arg("f"));

    m.def(
        "solve",
        [](const Graph& g, std::uint32_t k, std::uint32_t bias, const std::string& variant, std::uint64_t budget) {
            py::gil_scoped_release release;
            return std::string(to_string(solve(g, make_config(variant, k, bias, "strict"), budget).winner));
        },
        py::arg("graph"), py::arg("k"), py::arg("bias") = 1, py::arg("variant") = "skip", py::arg("budget") = 100'000'000);

    m.def(
        "game_chromatic_index",
        [](const Graph& g, std::uint32_t bias, const std::string& variant, std::uint64_t budget) {
            ChiResult r;
            {
                py::gil_scoped_release release;
                r = game_chromatic_index(g, bias, make_config(variant, 1, bias, "strict"), budget);
            }
            py::dict winners;
            for (const auto& [k, w] : r.winners) winners[py::int_(k)] = w ? py::object(py::str(std::string(to_string(*w)))) : py::none();
            py::dict out;
            out["winners"] = winners;
            out["value"] = r.value ? py::object(py::int_(*r.value)) : py::none();
            out["complete"] = r.complete;
            return out;
        },
        py::arg("graph"), py::arg("bias") = 1, py::arg("variant") = "skip", py::arg("budget") = 100'000'000);

    m.def("box_threshold", &box_threshold, py::arg("s"), py::arg("b"));
    m.def(
        "bob_wins", [](const std::vector<std::uint32_t>& sizes, std::uint32_t b) { return bob_wins(sizes, b); }, py::arg("sizes"),
        py::arg("b"));
    m.def(
        "solve_boxgame",
        [](const std::vector<std::uint32_t>& sizes, std::uint32_t b, const std::string& first) {
            return name(solve_boxgame(sizes, b, first == "bob" ? BoxPlayer::bob : BoxPlayer::alice).winner);
        },
        py::arg("sizes"), py::arg("b"), py::arg("first") = "alice");
    m.def(
        "traverse_bob_strategy",
        [](const std::vector<std::uint32_t>& sizes, std::uint32_t b) {
            const auto t = traverse_bob_strategy(sizes, b);
            py::dict out;
            out["sound"] = t.sound;
            out["leaves"] = t.leaves;
            out["counterexample"] = t.counterexample;
            return out;
        },
        py::arg("sizes"), py::arg("b"));

    m.def(
        "find_good_set",
        [](const Graph& g, std::uint32_t bias) {
            const auto cert = find_good_set(g);
            py::list F;
            for (auto e : cert.edges) F.append(py::make_tuple(g.edge(e).u, g.edge(e).v));
            py::dict out;
            out["F"] = F;
            out["pair_distances"] = cert.pair_distances;
            out["valid"] = cert.valid;
            if (bias >= 2 && !cert.edges.empty()) {
                const auto c = lemma_condition(cert.max_degree, cert.edges.size(), bias);
                out["condition_lhs"] = c.lhs;
                out["condition_rhs"] = c.rhs;
                out["satisfied"] = c.satisfied;
            } else {
                out["satisfied"] = false;
            }
            return out;
        },
        py::arg("graph"), py::arg("bias") = 2);

    m.def(
        "run_match",
        [](const Graph& g, const std::string& maker, const std::string& breaker, std::optional<std::uint32_t> k, std::uint32_t bias,
           const std::string& variant, const std::string& mode, std::uint32_t trials, std::uint64_t seed, bool telemetry,
           const std::string& lambda, const std::string& c, bool keep_logs) {
            ExperimentSpec spec;
            spec.maker = maker;
            spec.breaker = breaker;
            spec.k = k;
            spec.bias = bias;
            spec.classic = variant == "classic";
            spec.mode = mode == "modified" ? PlayMode::modified : PlayMode::strict;
            spec.trials = trials;
            spec.seed = seed;
            spec.telemetry = telemetry;
            spec.maker_cfg = make_maker_config(lambda, c);
            spec.keep_logs = keep_logs;
            MatchReport rep;
            {
                py::gil_scoped_release release;
                rep = run_match(g, spec);
            }
            std::vector<std::string> logs;
            for (const auto& log : rep.logs) logs.push_back(write_move_log(g, log));
            return py::make_tuple(report_json(rep), logs);
        },
        py::arg("graph"), py::arg("maker") = "random", py::arg("breaker") = "random", py::arg("k") = py::none(), py::arg("bias") = 1,
        py::arg("variant") = "skip", py::arg("mode") = "strict", py::arg("trials") = 100, py::arg("seed") = 1, py::arg("telemetry") = false,
        py::arg("lam") = "0.1", py::arg("c") = "0.001", py::arg("keep_logs") = false);

    m.def(
        "telemetry_summary",
        [](const Graph& g, const std::string& log_text, std::uint32_t k, std::uint32_t bias, const std::string& variant,
           const std::string& mode, const std::string& lambda, const std::string& c) {
            const auto log = read_move_log(g, log_text);
            return summary_json(analyze(g, make_config(variant, k, bias, mode), make_maker_config(lambda, c), log));
        },
        py::arg("graph"), py::arg("log"), py::arg("k"), py::arg("bias") = 1, py::arg("variant") = "skip", py::arg("mode") = "strict",
        py::arg("lam") = "0.1", py::arg("c") = "0.001");

    m.def(
        "run_acceptance",
        [](const std::vector<int>& only, std::uint64_t seed) {
            std::vector<verify::CriterionResult> rs;
            {
                py::gil_scoped_release release;
                rs = verify::run_acceptance(only, seed);
            }
            py::list out;
            for (const auto& r : rs) {
                py::dict d;
                d["id"] = r.id;
                d["title"] = r.title;
                d["status"] = std::string(verify::to_string(r.status));
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.append(d);
            }
            return out;
        },
        py::arg("only") = std::vector<int>{}, py::arg("seed") = verify::kDefaultAcceptanceSeed);
}
