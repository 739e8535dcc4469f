#include "gamelab/telemetry.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace gamelab {

ViolationSummary& ViolationSummary::operator+=(const ViolationSummary& o) {
    for (int j = 0; j < 3; ++j) good_rate[j] += o.good_rate[j];
    neighborhood_load += o.neighborhood_load;
    color_mixing += o.color_mixing;
    danger_size += o.danger_size;
    return *this;
}

namespace {

TelemetryReport empty_report(const Graph& g, const GameConfig& cfg, const MakerConfig& mcfg) {
    mcfg.validate();
    TelemetryReport r;
    r.k = cfg.k;
    r.bias = cfg.bias;
    r.max_degree = g.max_degree();
    r.lambda = mcfg.lambda;
    r.c = mcfg.c;
    const Thresholds th(mcfg, cfg.bias, g.max_degree());
    for (int j = 1; j <= 3; ++j) r.thresholds[j - 1] = th[j];
    const auto b2 = static_cast<std::int64_t>(cfg.bias) * cfg.bias;
    r.i_prime_cap = static_cast<std::uint32_t>((mcfg.lambda * Rational(static_cast<std::int64_t>(g.max_degree())) / Rational(5 * b2)).floor());
    r.vertices.resize(g.vertex_count());
    return r;
}

// Crossing rounds, D'(v), η and the violation counts, all derived from the traces.
void finalize(TelemetryReport& r, const Graph& g) {
    const auto n = g.vertex_count();
    const auto delta = static_cast<std::int64_t>(r.max_degree);
    const auto b = static_cast<std::int64_t>(r.bias);
    for (auto& t : r.vertices) {
        for (int j = 0; j < 3; ++j) {
            t.crossing[j].reset();
            for (std::uint32_t round = 0; round < t.load.size(); ++round)
                if (reaches(t.load[round], r.thresholds[j])) {
                    t.crossing[j] = round;
                    break;
                }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& t = r.vertices[v];
        t.danger_prime.clear();
        for (Vertex u : g.neighbors(v)) {
            const auto& cu = r.vertices[u].crossing[0];
            const auto& cv = t.crossing[0];
            if (!cv || (cu && *cu <= *cv)) t.danger_prime.push_back(u);
        }
    }

    r.eta.assign(n, std::vector<std::uint32_t>(r.k, 0));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v))
            for (Color c : r.vertices[u].i_prime)
                if (c >= 1 && c <= r.k) ++r.eta[v][c - 1];

    ViolationSummary& vs = r.violations;
    vs = ViolationSummary{};
    const Rational good_target = r.lambda * Rational(delta) / Rational(5 * b * b);
    const Rational high_degree = (Rational(1) - r.c / Rational(b * b * b * b)) * Rational(delta);
    const Rational nbr_cap = Rational(9) * r.lambda * Rational(delta);
    const Rational eta_heavy = r.c * r.lambda * Rational(delta) / Rational(4 * b * b * b * b);
    const Rational small_set = r.c * Rational(delta) / Rational(b * b);
    const auto heavy_needed = std::max<std::int64_t>(1, small_set.ceil());
    for (Vertex v = 0; v < n; ++v) {
        const auto& t = r.vertices[v];
        const auto deg = static_cast<std::int64_t>(g.degree(v));
        for (int j = 0; j < 3; ++j) {
            if (!reaches(deg, r.thresholds[j])) continue;
            ++vs.good_rate[j].eligible;
            if (!reaches(t.window_good[j], good_target)) ++vs.good_rate[j].violating;
        }
        if (reaches(deg, high_degree)) {
            ++vs.neighborhood_load.eligible;
            for (std::size_t round = 0; round < t.load.size(); ++round) {
                if (reaches(t.load[round], r.thresholds[1]) || t.nbr_count[round] == 0) continue;
                if (Rational(static_cast<std::int64_t>(t.nbr_load_sum[round])) >= nbr_cap * Rational(t.nbr_count[round])) {
                    ++vs.neighborhood_load.violating;
                    break;
                }
            }
        }
        if (deg > 0) {
            ++vs.color_mixing.eligible;
            std::int64_t heavy = 0;
            for (auto e : r.eta[v]) heavy += reaches(e, eta_heavy) ? 1 : 0;
            if (heavy >= heavy_needed) ++vs.color_mixing.violating;
        }
        if (t.danger) {
            ++vs.danger_size.eligible;
            if (Rational(static_cast<std::int64_t>(t.danger->size())) > small_set) ++vs.danger_size.violating;
        }
    }
}

void add_good_edge(VertexTrace& t, const std::array<Rational, 3>& th, std::uint32_t cap, std::uint32_t pre_load, Color c) {
    ++t.good_total;
    for (int j = 0; j < 3; ++j) {
        const bool above_lo = j == 0 || reaches(pre_load, th[0] * Rational(j));
        const bool below_hi = !reaches(pre_load, th[0] * Rational(j + 1));
        if (above_lo && below_hi) ++t.window_good[j];
    }
    if (!reaches(pre_load, th[0]) && t.i_prime.size() < cap) t.i_prime.push_back(c);
    if (reaches(pre_load, th[0]) && !reaches(pre_load, th[1])) {
        auto it = std::lower_bound(t.i_v.begin(), t.i_v.end(), c);
        if (it == t.i_v.end() || *it != c) t.i_v.insert(it, c);
    }
}

}  // namespace

TelemetryReport analyze(const Graph& g, const GameConfig& cfg, const MakerConfig& mcfg, std::span<const MoveRecord> log) {
    TelemetryReport r = empty_report(g, cfg, mcfg);
    const auto n = g.vertex_count();
    auto shared = std::make_shared<const Graph>(g);
    GameState s(shared, cfg);

    auto load_of = [&](Vertex v) {
        std::uint32_t l = 0;
        for (EdgeId e : g.incident_edges(v)) l += s.coloring()[e] != kNoColor ? 1 : 0;
        return l;
    };
    auto snapshot = [&] {
        std::vector<std::uint32_t> loads(n);
        for (Vertex v = 0; v < n; ++v) loads[v] = load_of(v);
        for (Vertex v = 0; v < n; ++v) {
            auto& t = r.vertices[v];
            std::uint64_t sum = 0;
            std::uint32_t cnt = 0;
            const auto inc = g.incident_edges(v);
            const auto nb = g.neighbors(v);
            for (std::size_t i = 0; i < inc.size(); ++i) {
                if (s.coloring()[inc[i]] != kNoColor) continue;
                sum += loads[nb[i]];
                ++cnt;
            }
            t.load.push_back(loads[v]);
            t.nbr_load_sum.push_back(sum);
            t.nbr_count.push_back(cnt);
        }
    };
    // Colorings at the end of each round, for D(v).
    std::vector<std::vector<Color>> colorings{std::vector<Color>(s.coloring().begin(), s.coloring().end())};
    snapshot();

    std::uint32_t max_maker_round = 0;
    for (std::size_t i = 0; i < log.size(); ++i) {
        const auto& rec = log[i];
        if (rec.player == Player::maker) {
            if (!rec.maker) throw Error("log record " + std::to_string(i) + " lacks the Maker annotation");
            const Vertex v = rec.maker->v;
            if (!g.edge(rec.edge).has(v)) throw Error("log record " + std::to_string(i) + ": annotated vertex is not an endpoint");
            add_good_edge(r.vertices[v], r.thresholds, r.i_prime_cap, load_of(v), rec.color);
            ++r.maker_moves;
            r.forced_moves += rec.forced_nonproper ? 1 : 0;
            max_maker_round = std::max(max_maker_round, rec.round);
        }
        try {
            s.apply(rec);
        } catch (const IllegalMove& e) {
            throw IllegalMove(e.reason(), e.what(), i);
        }
        const bool last = i + 1 == log.size();
        if (s.round() > rec.round || last) {
            snapshot();
            colorings.emplace_back(s.coloring().begin(), s.coloring().end());
        }
    }
    r.rounds = static_cast<std::uint32_t>(colorings.size() - 1);
    r.outcome = s.winner();
    finalize(r, g);

    const auto k = static_cast<std::int64_t>(cfg.k);
    const auto slack = 2 * static_cast<std::int64_t>(g.max_degree()) - k;
    for (Vertex v = 0; v < n; ++v) {
        auto& t = r.vertices[v];
        if (!t.crossing[1] || *t.crossing[1] + 1 > max_maker_round) continue;
        const auto& col = colorings[*t.crossing[1]];
        auto used_at = [&](Vertex x) {
            std::vector<Color> out;
            for (EdgeId e : g.incident_edges(x))
                if (col[e] != kNoColor) out.push_back(col[e]);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        };
        const auto uv = used_at(v);
        std::vector<Vertex> d;
        const auto inc = g.incident_edges(v);
        const auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            const Vertex u = nb[i];
            if (col[inc[i]] != kNoColor) continue;
            if (static_cast<std::int64_t>(g.degree(u) + g.degree(v)) < k) continue;
            const auto uu = used_at(u);
            std::vector<Color> common;
            std::set_intersection(uu.begin(), uu.end(), uv.begin(), uv.end(), std::back_inserter(common));
            if (static_cast<std::int64_t>(common.size()) > slack) continue;
            const auto& cu = r.vertices[u].crossing[0];
            if (!cu || *cu > *t.crossing[0]) continue;
            d.push_back(u);
        }
        std::sort(d.begin(), d.end());
        t.danger = std::move(d);
    }
    finalize(r, g);
    return r;
}

Recorder::Recorder(const Graph& g, const GameConfig& cfg, const MakerConfig& mcfg)
    : g_(g), cfg_(cfg), mcfg_(mcfg), th_(mcfg, cfg.bias, g.max_degree()), rep_(empty_report(g, cfg, mcfg)) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& t = rep_.vertices[v];
        t.load.push_back(0);
        t.nbr_load_sum.push_back(0);
        t.nbr_count.push_back(static_cast<std::uint32_t>(g.degree(v)));
    }
}

void Recorder::observe(const GameState& s, const MoveRecord& rec) {
    if (rec.player == Player::maker && !rec.skip) {
        if (!rec.maker) throw Error("Maker move without annotation");
        const Vertex v = rec.maker->v;
        add_good_edge(rep_.vertices[v], rep_.thresholds, rep_.i_prime_cap, s.load(v) - 1, rec.color);
        ++rep_.maker_moves;
        rep_.forced_moves += rec.forced_nonproper ? 1 : 0;
    }
    if (s.round() > rec.round || s.finished()) close_round(s, rec.round);
}

void Recorder::close_round(const GameState& s, std::uint32_t round) {
    if (round <= last_closed_) return;
    last_closed_ = round;
    const auto n = g_.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        auto& t = rep_.vertices[v];
        std::uint64_t sum = 0;
        for (EdgeId e : s.uncolored_incident(v)) sum += s.load(g_.edge(e).other(v));
        t.load.push_back(s.load(v));
        t.nbr_load_sum.push_back(sum);
        t.nbr_count.push_back(static_cast<std::uint32_t>(s.uncolored_incident(v).size()));
    }
    if (s.finished()) return;
    // Maker decides next: D(v) for vertices that reached T2 in this round.
    for (Vertex v = 0; v < n; ++v) {
        auto& t = rep_.vertices[v];
        if (t.danger || !th_.reached(s.load(v), 2)) continue;
        auto first_round = [&](Vertex x) -> std::optional<std::uint32_t> {
            const auto& ld = rep_.vertices[x].load;
            for (std::uint32_t r = 0; r < ld.size(); ++r)
                if (th_.reached(ld[r], 1)) return r;
            return std::nullopt;
        };
        const auto v_t1 = first_round(v);
        const auto k = static_cast<std::int64_t>(cfg_.k);
        const auto slack = 2 * static_cast<std::int64_t>(g_.max_degree()) - k;
        std::vector<Vertex> d;
        for (EdgeId e : s.uncolored_incident(v)) {
            const Vertex u = g_.edge(e).other(v);
            if (static_cast<std::int64_t>(g_.degree(u) + g_.degree(v)) < k) continue;
            if (static_cast<std::int64_t>(s.used_colors(u).intersection_size(s.used_colors(v))) > slack) continue;
            const auto u_t1 = first_round(u);
            if (!u_t1 || *u_t1 > *v_t1) continue;
            d.push_back(u);
        }
        std::sort(d.begin(), d.end());
        t.danger = std::move(d);
    }
}

TelemetryReport Recorder::finish(const GameState& final_state) {
    rep_.rounds = last_closed_;
    rep_.outcome = final_state.winner();
    TelemetryReport out = rep_;
    finalize(out, g_);
    return out;
}

std::string vertex_csv(const TelemetryReport& r) {
    std::ostringstream os;
    auto join = [](const std::vector<std::uint32_t>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ";" : "") + std::to_string(xs[i]);
        return s;
    };
    auto opt = [](const std::optional<std::uint32_t>& x) { return x ? std::to_string(*x) : std::string(); };
    os << "vertex,degree,final_load,t1_round,t2_round,t3_round,good_w1,good_w2,good_w3,good_total,i_prime_size,i_v_size,"
          "danger_size,danger_prime_size,i_prime,i_v,danger\n";
    for (std::size_t v = 0; v < r.vertices.size(); ++v) {
        const auto& t = r.vertices[v];
        os << v << ',' << t.nbr_count.front() << ',' << t.load.back() << ',' << opt(t.crossing[0]) << ',' << opt(t.crossing[1]) << ','
           << opt(t.crossing[2]) << ',' << t.window_good[0] << ',' << t.window_good[1] << ',' << t.window_good[2] << ',' << t.good_total
           << ',' << t.i_prime.size() << ',' << t.i_v.size() << ',' << (t.danger ? std::to_string(t.danger->size()) : "") << ','
           << t.danger_prime.size() << ',' << join(t.i_prime) << ',' << join(t.i_v) << ',' << (t.danger ? join(*t.danger) : "") << '\n';
    }
    return os.str();
}

std::string load_csv(const TelemetryReport& r) {
    std::ostringstream os;
    os << "round,vertex,load,uncolored_neighbors,neighbor_load_sum,neighbor_load_avg\n";
    os << std::setprecision(6);
    for (std::size_t round = 0; round <= r.rounds; ++round) {
        for (std::size_t v = 0; v < r.vertices.size(); ++v) {
            const auto& t = r.vertices[v];
            os << round << ',' << v << ',' << t.load[round] << ',' << t.nbr_count[round] << ',' << t.nbr_load_sum[round] << ',';
            if (t.nbr_count[round] > 0) os << static_cast<double>(t.nbr_load_sum[round]) / t.nbr_count[round];
            os << '\n';
        }
    }
    return os.str();
}

namespace {

nlohmann::ordered_json violation_json(const ViolationCount& v) {
    nlohmann::ordered_json j;
    j["eligible"] = v.eligible;
    j["violating"] = v.violating;
    j["fraction"] = v.fraction();
    return j;
}

nlohmann::ordered_json violations_object(const ViolationSummary& v) {
    nlohmann::ordered_json j;
    for (int w = 0; w < 3; ++w) j["good_rate_w" + std::to_string(w + 1)] = violation_json(v.good_rate[w]);
    j["neighborhood_load"] = violation_json(v.neighborhood_load);
    j["color_mixing"] = violation_json(v.color_mixing);
    j["danger_size"] = violation_json(v.danger_size);
    return j;
}

}  // namespace

std::string violations_json(const ViolationSummary& v) { return violations_object(v).dump(); }

std::string summary_json(const TelemetryReport& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["bias"] = r.bias;
    j["max_degree"] = r.max_degree;
    j["lambda"] = r.lambda.str();
    j["c"] = r.c.str();
    j["thresholds"] = {r.thresholds[0].str(), r.thresholds[1].str(), r.thresholds[2].str()};
    j["i_prime_cap"] = r.i_prime_cap;
    j["rounds"] = r.rounds;
    j["maker_moves"] = r.maker_moves;
    j["forced_moves"] = r.forced_moves;
    j["outcome"] = std::string(to_string(r.outcome));
    std::uint64_t good = 0, defined = 0;
    for (const auto& t : r.vertices) {
        good += t.good_total;
        defined += t.danger ? 1 : 0;
    }
    j["good_edges"] = good;
    j["danger_sets_defined"] = defined;
    j["violations"] = violations_object(r.violations);
    return j.dump(2) + "\n";
}

}  // namespace gamelab
