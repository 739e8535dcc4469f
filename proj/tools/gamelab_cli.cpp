#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gamelab/exact.hpp"
#include "gamelab/goodset.hpp"
#include "gamelab/harness.hpp"
#include "gamelab/verify.hpp"

using namespace gamelab;
using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

/// A path to an edge-list file, or a generator spec such as "cycle:25".
Graph load_graph(const std::string& source) {
    if (std::filesystem::exists(source)) return load_edge_list(source);
    return generate(source);
}

std::uint64_t seed_or_env(std::uint64_t seed) {
    if (const char* env = std::getenv("GAMELAB_SEED")) return std::stoull(env);
    return seed;
}

GameConfig variant_config(const std::string& variant, std::uint32_t k, std::uint32_t bias) {
    if (variant == "classic") return GameConfig::classic(k, bias);
    if (variant == "skip") return GameConfig::skip_variant(k, bias);
    throw Error("unknown variant " + variant);
}

std::uint64_t parse_budget(const std::string& text) {
    const Rational r = Rational::parse(text);
    if (r.num() <= 0) throw Error("budget must be positive");
    return static_cast<std::uint64_t>(r.floor());
}

std::vector<std::uint32_t> parse_sizes(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return out;
}

json edge_pairs(const Graph& g, std::span<const EdgeId> edges) {
    json a = json::array();
    for (auto e : edges) a.push_back({g.edge(e).u, g.edge(e).v});
    return a;
}

/// Either the JSON written by `goodset` (field "F" of [u, v] pairs) or "u v" lines.
std::vector<EdgeId> read_goodset(const Graph& g, const std::string& path) {
    const auto text = read_file(path);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    if (text.find('{') != std::string::npos) {
        for (const auto& p : json::parse(text).at("F")) pairs.emplace_back(p.at(0).get<Vertex>(), p.at(1).get<Vertex>());
    } else {
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);) {
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            std::istringstream ls(line);
            Vertex u, v;
            if (ls >> u >> v) pairs.emplace_back(u, v);
        }
    }
    std::vector<EdgeId> out;
    for (auto [u, v] : pairs) {
        const auto e = g.edge_between(u, v);
        if (!e) throw Error("good set edge " + std::to_string(u) + " " + std::to_string(v) + " is not in the graph");
        out.push_back(*e);
    }
    return out;
}

MakerConfig maker_config(const std::string& lambda, const std::string& c) {
    MakerConfig m;
    m.lambda = Rational::parse(lambda);
    m.c = Rational::parse(c);
    m.validate();
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maker-Breaker edge-coloring game laboratory"};
    app.require_subcommand(1);
    int exit_code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
    std::string gen_spec, gen_out;
    gen->add_option("spec", gen_spec, "e.g. star:5, cycle:25, random_regular:64:16:1, gnp:20:0.3:7")->required();
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");
    gen->callback([&] {
        const auto text = write_edge_list(generate(gen_spec));
        if (gen_out.empty()) std::cout << text;
        else write_file(gen_out, text);
    });

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Exact winner for one palette size");
    std::string graph_src, variant = "skip", budget_text = "1e8";
    std::uint32_t k = 0, bias = 1;
    solve_cmd->add_option("--graph", graph_src, "edge-list file or generator spec")->required();
    solve_cmd->add_option("--k", k, "palette size")->required();
    solve_cmd->add_option("--bias", bias, "Breaker bias")->capture_default_str();
    solve_cmd->add_option("--variant", variant, "classic | skip")->check(CLI::IsMember({"classic", "skip"}))->capture_default_str();
    solve_cmd->add_option("--budget", budget_text, "node budget")->capture_default_str();
    solve_cmd->callback([&] {
        const Graph g = load_graph(graph_src);
        json j;
        j["k"] = k;
        j["bias"] = bias;
        j["variant"] = variant;
        try {
            const auto st = solve(g, variant_config(variant, k, bias), parse_budget(budget_text));
            j["winner"] = std::string(to_string(st.winner));
            j["nodes"] = st.nodes;
            j["table_size"] = st.table_size;
        } catch (const BudgetExceeded& e) {
            j["winner"] = nullptr;
            j["error"] = e.what();
            exit_code = 2;
        }
        std::cout << j.dump(2) << '\n';
    });

    // chi
    auto* chi_cmd = app.add_subcommand("chi", "Winner for every k in [max degree, 2 max degree - 1]");
    chi_cmd->add_option("--graph", graph_src)->required();
    chi_cmd->add_option("--bias", bias)->capture_default_str();
    chi_cmd->add_option("--variant", variant)->check(CLI::IsMember({"classic", "skip"}))->capture_default_str();
    chi_cmd->add_option("--budget", budget_text)->capture_default_str();
    chi_cmd->callback([&] {
        const Graph g = load_graph(graph_src);
        const auto r = game_chromatic_index(g, bias, variant_config(variant, 1, bias), parse_budget(budget_text));
        json j;
        j["bias"] = bias;
        j["variant"] = variant;
        json per_k = json::object();
        for (const auto& [kk, w] : r.winners) per_k[std::to_string(kk)] = w ? json(std::string(to_string(*w))) : json(nullptr);
        j["winners"] = per_k;
        j["value"] = r.value ? json(*r.value) : json(nullptr);
        j["complete"] = r.complete;
        std::cout << j.dump(2) << '\n';
        if (!r.complete) exit_code = 2;
    });

    // play
    auto* play = app.add_subcommand("play", "Seeded matches between two policies");
    std::string maker = "random", breaker = "random", lambda = "0.1", c_text = "0.001", goodset_file, mode = "strict";
    std::string report_out, log_dir;
    std::optional<std::uint32_t> play_k;
    std::uint32_t trials = 100;
    std::uint64_t seed = 1;
    bool telemetry = false;
    play->add_option("--graph", graph_src)->required();
    play->add_option("--maker", maker)->check(CLI::IsMember({"paper", "random", "greedy"}))->capture_default_str();
    play->add_option("--breaker", breaker)->check(CLI::IsMember({"box", "random", "greedy", "skip"}))->capture_default_str();
    play->add_option("--k", play_k, "palette size (default: danger-set Maker palette rule for that Maker, else 2 max degree - 1)");
    play->add_option("--bias", bias)->capture_default_str();
    play->add_option("--variant", variant)->check(CLI::IsMember({"classic", "skip"}))->capture_default_str();
    play->add_option("--mode", mode)->check(CLI::IsMember({"strict", "modified"}))->capture_default_str();
    play->add_option("--lambda", lambda)->capture_default_str();
    play->add_option("--c", c_text)->capture_default_str();
    play->add_option("--goodset", goodset_file, "good set file for the box Breaker (default: greedy finder)");
    play->add_option("--trials", trials)->capture_default_str();
    play->add_option("--seed", seed, "master seed (GAMELAB_SEED overrides)")->capture_default_str();
    play->add_flag("--telemetry", telemetry, "record telemetry and compare with the from-log recomputation");
    play->add_option("--report", report_out, "write the JSON report here instead of stdout");
    play->add_option("--log-dir", log_dir, "write one JSON-lines log per game into this directory");
    play->callback([&] {
        const Graph g = load_graph(graph_src);
        ExperimentSpec spec;
        spec.graph = graph_src;
        spec.maker = maker;
        spec.breaker = breaker;
        spec.maker_cfg = maker_config(lambda, c_text);
        spec.k = play_k;
        spec.bias = bias;
        spec.classic = variant == "classic";
        spec.mode = mode == "modified" ? PlayMode::modified : PlayMode::strict;
        spec.trials = trials;
        spec.seed = seed_or_env(seed);
        if (!goodset_file.empty()) spec.goodset = read_goodset(g, goodset_file);
        spec.keep_logs = !log_dir.empty();
        spec.telemetry = telemetry;
        const auto rep = run_match(g, spec);
        const auto text = report_json(rep);
        if (report_out.empty()) std::cout << text << '\n';
        else write_file(report_out, text);
        if (!log_dir.empty()) {
            std::filesystem::create_directories(log_dir);
            for (std::size_t i = 0; i < rep.logs.size(); ++i)
                write_file((std::filesystem::path(log_dir) / ("game_" + std::to_string(i) + ".jsonl")).string(), write_move_log(g, rep.logs[i]));
        }
        if (rep.unfinished > 0 || rep.telemetry_mismatches > 0) exit_code = 1;
    });

    // boxgame
    auto* box = app.add_subcommand("boxgame", "Box game winner");
    std::string sizes_text;
    std::string first = "alice";
    bool box_solve = false, box_criterion = false, box_traverse = false;
    box->add_option("--sizes", sizes_text, "comma-separated box sizes")->required();
    box->add_option("--bias", bias)->capture_default_str();
    box->add_option("--first", first)->check(CLI::IsMember({"alice", "bob"}))->capture_default_str();
    auto* fsolve = box->add_flag("--solve", box_solve, "exact minimax");
    auto* fcrit = box->add_flag("--criterion", box_criterion, "threshold criterion (default)");
    auto* ftrav = box->add_flag("--traverse", box_traverse, "check Bob's policy against every Alice line");
    fsolve->excludes(fcrit)->excludes(ftrav);
    fcrit->excludes(ftrav);
    box->callback([&] {
        const auto sizes = parse_sizes(sizes_text);
        if (sizes.empty()) throw Error("no sizes");
        const BoxPlayer who_first = first == "bob" ? BoxPlayer::bob : BoxPlayer::alice;
        std::uint64_t sum = 0;
        for (auto x : sizes) sum += x;
        json j;
        const auto name = [](BoxPlayer p) { return p == BoxPlayer::bob ? "bob" : "alice"; };
        if (box_solve) {
            const auto r = solve_boxgame(sizes, bias, who_first);
            j["winner"] = name(r.winner);
            j["states"] = r.states;
        } else if (box_traverse) {
            const auto r = traverse_bob_strategy(sizes, bias, who_first);
            j["winner"] = r.sound ? "bob" : nullptr;
            j["sound"] = r.sound;
            j["leaves"] = r.leaves;
            if (!r.sound) exit_code = 1;
        } else {
            j["winner"] = bob_wins(sizes, bias) ? "bob" : "alice";
        }
        j["f_value"] = box_threshold(static_cast<std::uint32_t>(sizes.size()), bias);
        j["sum_sizes"] = sum;
        std::cout << j.dump(2) << '\n';
    });

    // goodset
    auto* good = app.add_subcommand("goodset", "Greedy good set and the box-reduction condition");
    good->add_option("--graph", graph_src)->required();
    good->add_option("--bias", bias)->capture_default_str();
    good->callback([&] {
        const Graph g = load_graph(graph_src);
        const auto cert = find_good_set(g);
        json j;
        j["F"] = edge_pairs(g, cert.edges);
        json d = json::array();
        for (const auto& row : cert.pair_distances) {
            json r = json::array();
            for (auto x : row) r.push_back(x == kInfiniteDistance ? json(nullptr) : json(x));
            d.push_back(r);
        }
        j["pair_distances"] = d;
        j["max_degree"] = cert.max_degree;
        if (bias >= 2 && !cert.edges.empty()) {
            const auto cond = lemma_condition(cert.max_degree, cert.edges.size(), bias);
            j["condition_lhs"] = cond.lhs;
            j["condition_rhs"] = cond.rhs;
            j["satisfied"] = cond.satisfied;
        } else {
            j["condition_lhs"] = nullptr;
            j["condition_rhs"] = nullptr;
            j["satisfied"] = false;
        }
        std::cout << j.dump(2) << '\n';
    });

    // telemetry
    auto* tele = app.add_subcommand("telemetry", "Per-vertex traces of a recorded danger-set Maker game");
    std::string log_file, out_prefix;
    std::optional<std::uint32_t> tele_k;
    tele->add_option("--log", log_file, "JSON-lines move log")->required();
    tele->add_option("--graph", graph_src)->required();
    tele->add_option("--lambda", lambda)->capture_default_str();
    tele->add_option("--c", c_text)->capture_default_str();
    tele->add_option("--k", tele_k, "palette size (default: danger-set Maker palette rule)");
    tele->add_option("--bias", bias)->capture_default_str();
    tele->add_option("--variant", variant)->check(CLI::IsMember({"classic", "skip"}))->capture_default_str();
    tele->add_option("--mode", mode)->check(CLI::IsMember({"strict", "modified"}))->capture_default_str();
    tele->add_option("--out", out_prefix, "output prefix (default: the log path without extension)");
    tele->callback([&] {
        const Graph g = load_graph(graph_src);
        const auto mcfg = maker_config(lambda, c_text);
        const auto kk = tele_k.value_or(mcfg.palette_size(bias, g.max_degree()));
        auto cfg = variant_config(variant, kk, bias);
        cfg.mode = mode == "modified" ? PlayMode::modified : PlayMode::strict;
        const auto log = read_move_log(g, read_file(log_file));
        const auto rep = analyze(g, cfg, mcfg, log);
        std::string prefix = out_prefix;
        if (prefix.empty()) prefix = (std::filesystem::path(log_file).parent_path() / std::filesystem::path(log_file).stem()).string();
        write_file(prefix + ".vertices.csv", vertex_csv(rep));
        write_file(prefix + ".summary.json", summary_json(rep));
        std::cout << summary_json(rep) << '\n';
    });

    // accept
    auto* accept = app.add_subcommand("accept", "Run the acceptance criteria");
    std::vector<int> only;
    std::string accept_json;
    std::uint64_t accept_seed = verify::kDefaultAcceptanceSeed;
    accept->add_option("--only", only, "criterion ids (default: all)")->delimiter(',');
    accept->add_option("--seed", accept_seed, "master seed (GAMELAB_SEED overrides)")->capture_default_str();
    accept->add_option("--json", accept_json, "also write machine-readable results here");
    accept->callback([&] {
        json results = json::array();
        for (const auto& r : verify::run_acceptance(only, seed_or_env(accept_seed))) {
            std::cout << verify::format_result(r) << std::endl;
            if (r.status == verify::Status::fail) exit_code = 1;
            results.push_back({{"id", r.id},
                               {"title", r.title},
                               {"status", std::string(verify::to_string(r.status))},
                               {"detail", r.detail},
                               {"seconds", r.seconds}});
        }
        if (!accept_json.empty()) write_file(accept_json, results.dump(2) + "\n");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
