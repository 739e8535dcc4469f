#include "gamelab/engine.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace gamelab {

std::string_view to_string(PlayMode m) { return m == PlayMode::strict ? "strict" : "modified"; }

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::ongoing: return "ongoing";
        case Outcome::maker_won: return "maker_won";
        case Outcome::breaker_won: return "breaker_won";
    }
    return "?";
}

std::string_view to_string(BreakerMoveKind k) {
    switch (k) {
        case BreakerMoveKind::fresh: return "fresh";
        case BreakerMoveKind::fallback_fprime: return "fallback_fprime";
        case BreakerMoveKind::fallback_any: return "fallback_any";
        case BreakerMoveKind::reduction_break: return "reduction_break";
    }
    return "?";
}

void GameConfig::validate() const {
    if (k < 1) throw Error("palette size k must be at least 1");
    if (bias < 1) throw Error("Breaker bias must be at least 1");
}

GameConfig GameConfig::classic(std::uint32_t k, std::uint32_t bias) {
    return GameConfig{k, bias, false, Player::maker, PlayMode::strict};
}

GameConfig GameConfig::skip_variant(std::uint32_t k, std::uint32_t bias) {
    return GameConfig{k, bias, true, Player::breaker, PlayMode::strict};
}

GameState::GameState(std::shared_ptr<const Graph> graph, GameConfig cfg)
    : graph_(std::move(graph)), cfg_(cfg), turn_(cfg.first_player) {
    if (!graph_) throw Error("GameState needs a graph");
    cfg_.validate();
    const auto n = graph_->vertex_count();
    const auto m = graph_->edge_count();
    colors_.assign(m, kNoColor);
    load_.assign(n, 0);
    used_.assign(n, ColorSet(cfg_.k));
    uncolored_at_.resize(n);
    pos_at_.assign(2 * m, 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto inc = graph_->incident_edges(v);
        uncolored_at_[v].items.assign(inc.begin(), inc.end());
        for (std::uint32_t i = 0; i < inc.size(); ++i) {
            const EdgeId e = inc[i];
            pos_at_[2 * e + (graph_->edge(e).u == v ? 0 : 1)] = i;
        }
    }
    uncolored_.items.resize(m);
    pos_global_.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
        uncolored_.items[e] = e;
        pos_global_[e] = e;
    }
    if (m == 0) outcome_ = Outcome::maker_won;
}

std::vector<Vertex> GameState::uncolored_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (EdgeId e : uncolored_incident(v)) out.push_back(graph_->edge(e).other(v));
    return out;
}

ColorSet GameState::available_colors(EdgeId e) const {
    const Edge& ed = graph_->edge(e);
    if (is_colored(e)) throw IllegalMove(IllegalMove::Reason::edge_colored, "edge " + std::to_string(e) + " is already colored");
    return used_[ed.u].complement_of_union(used_[ed.v]);
}

std::uint32_t GameState::available_count(EdgeId e) const {
    const Edge& ed = graph_->edge(e);
    return cfg_.k - used_[ed.u].union_size(used_[ed.v]);
}

bool GameState::finished() const {
    if (cfg_.mode == PlayMode::strict) return outcome_ != Outcome::ongoing;
    return uncolored_.items.empty();
}

bool GameState::has_legal_breaker_move() const {
    return std::any_of(uncolored_.items.begin(), uncolored_.items.end(), [&](EdgeId e) { return available_count(e) > 0; });
}

void GameState::color_edge(Player who, EdgeId e, Color c, std::optional<MakerAnnotation> mann,
                           std::optional<BreakerAnnotation> bann) {
    using R = IllegalMove::Reason;
    if (finished()) throw IllegalMove(R::game_over, "the game is over");
    if (who != turn_) {
        if (who == Player::breaker && !log_.empty() && log_.back().player == Player::breaker && !log_.back().skip)
            throw IllegalMove(R::bias_exceeded, "Breaker already colored " + std::to_string(cfg_.bias) + " edge(s) this turn");
        throw IllegalMove(R::wrong_turn, "it is not " + std::string(to_string(who)) + "'s turn");
    }
    if (e >= graph_->edge_count()) throw IllegalMove(R::invalid_edge, "invalid edge index " + std::to_string(e));
    if (is_colored(e)) throw IllegalMove(R::edge_colored, "edge " + std::to_string(e) + " is already colored");
    if (c < 1 || c > cfg_.k) throw IllegalMove(R::invalid_color, "color " + std::to_string(c) + " outside palette");

    const Edge& ed = graph_->edge(e);
    bool forced = false;
    if (used_[ed.u].contains(c) || used_[ed.v].contains(c)) {
        const bool starved = available_count(e) == 0;
        if (who == Player::maker && cfg_.mode == PlayMode::modified && starved) {
            forced = true;
        } else {
            throw IllegalMove(R::color_blocked, "color " + std::to_string(c) + " is blocked at edge " + std::to_string(e));
        }
    }

    colors_[e] = c;
    for (int side = 0; side < 2; ++side) {
        const Vertex x = side == 0 ? ed.u : ed.v;
        ++load_[x];
        used_[x].insert(c);
        auto& items = uncolored_at_[x].items;
        const std::uint32_t i = pos_at_[2 * e + side];
        const EdgeId last = items.back();
        items[i] = last;
        pos_at_[2 * last + (graph_->edge(last).u == x ? 0 : 1)] = i;
        items.pop_back();
    }
    {
        auto& items = uncolored_.items;
        const std::uint32_t i = pos_global_[e];
        const EdgeId last = items.back();
        items[i] = last;
        pos_global_[last] = i;
        items.pop_back();
    }
    if (forced) ++forced_count_;

    MoveRecord rec;
    rec.round = round_;
    rec.player = who;
    rec.edge = e;
    rec.color = c;
    rec.forced_nonproper = forced;
    rec.maker = mann;
    rec.breaker = bann;
    log_.push_back(rec);

    check_new_blocks(ed);

    if (who == Player::maker) {
        turn_ = Player::breaker;
        moves_this_turn_ = 0;
    } else if (++moves_this_turn_ == cfg_.bias) {
        end_turn_internal();
    }
}

void GameState::check_new_blocks(const Edge& ed) {
    if (outcome_ == Outcome::ongoing) {
        for (Vertex x : {ed.u, ed.v}) {
            for (EdgeId f : uncolored_at_[x].items) {
                if (available_count(f) == 0) {
                    outcome_ = Outcome::breaker_won;
                    breaker_win_round_ = round_;
                    return;
                }
            }
        }
        if (uncolored_.items.empty()) outcome_ = Outcome::maker_won;
    }
}

void GameState::end_breaker_turn() {
    using R = IllegalMove::Reason;
    if (finished()) throw IllegalMove(R::game_over, "the game is over");
    if (turn_ != Player::breaker) throw IllegalMove(R::wrong_turn, "it is not Breaker's turn");
    if (moves_this_turn_ == 0 && !cfg_.breaker_may_skip && has_legal_breaker_move())
        throw IllegalMove(R::illegal_skip, "Breaker must color an edge this turn");
    MoveRecord rec;
    rec.round = round_;
    rec.player = Player::breaker;
    rec.skip = true;
    log_.push_back(rec);
    end_turn_internal();
}

void GameState::end_turn_internal() {
    ++round_;
    turn_ = Player::maker;
    moves_this_turn_ = 0;
}

void GameState::apply(const MoveRecord& rec) {
    using R = IllegalMove::Reason;
    if (rec.round != round_)
        throw IllegalMove(R::wrong_turn, "record for round " + std::to_string(rec.round) + " but game is in round " + std::to_string(round_));
    if (rec.skip) {
        if (rec.player != Player::breaker) throw IllegalMove(R::illegal_skip, "only Breaker may end a turn");
        end_breaker_turn();
    } else {
        color_edge(rec.player, rec.edge, rec.color, rec.maker, rec.breaker);
        if (log_.back().forced_nonproper != rec.forced_nonproper)
            throw IllegalMove(R::color_blocked, "forced_nonproper flag does not match the position");
    }
}

std::vector<EdgeId> GameState::last_breaker_turn_edges() const {
    std::vector<EdgeId> out;
    for (auto it = log_.rbegin(); it != log_.rend() && it->player == Player::breaker; ++it)
        if (!it->skip) out.push_back(it->edge);
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<EdgeId> GameState::last_maker_edge() const {
    for (auto it = log_.rbegin(); it != log_.rend(); ++it)
        if (it->player == Player::maker) return it->edge;
    return std::nullopt;
}

bool operator==(const GameState& a, const GameState& b) {
    return (a.graph_ == b.graph_ || *a.graph_ == *b.graph_) && a.cfg_ == b.cfg_ && a.colors_ == b.colors_ &&
           a.load_ == b.load_ && a.used_ == b.used_ && a.round_ == b.round_ && a.turn_ == b.turn_ &&
           a.moves_this_turn_ == b.moves_this_turn_ && a.outcome_ == b.outcome_ &&
           a.breaker_win_round_ == b.breaker_win_round_ && a.forced_count_ == b.forced_count_ &&
           a.uncolored_.items == b.uncolored_.items && a.log_ == b.log_ &&
           std::equal(a.uncolored_at_.begin(), a.uncolored_at_.end(), b.uncolored_at_.begin(), b.uncolored_at_.end(),
                      [](const auto& x, const auto& y) { return x.items == y.items; });
}

GameState new_game(std::shared_ptr<const Graph> g, const GameConfig& cfg) { return GameState(std::move(g), cfg); }

GameState replay(std::shared_ptr<const Graph> g, const GameConfig& cfg, std::span<const MoveRecord> log) {
    GameState s(std::move(g), cfg);
    for (std::size_t i = 0; i < log.size(); ++i) {
        try {
            s.apply(log[i]);
        } catch (const IllegalMove& e) {
            throw IllegalMove(e.reason(), e.what(), i);
        }
    }
    return s;
}

// --- JSON lines ----------------------------------------------------------------

using ojson = nlohmann::ordered_json;

std::string to_json_line(const Graph& g, const MoveRecord& rec) {
    ojson j;
    j["r"] = rec.round;
    j["p"] = rec.player == Player::maker ? "M" : "B";
    if (rec.skip) {
        j["e"] = nullptr;
        j["c"] = nullptr;
    } else {
        const Edge& e = g.edge(rec.edge);
        j["e"] = {e.u, e.v};
        j["c"] = rec.color;
    }
    j["skip"] = rec.skip;
    if (rec.maker || rec.breaker || rec.forced_nonproper) {
        ojson ann = ojson::object();
        if (rec.maker) {
            const Edge& f = g.edge(rec.maker->anchor);
            ann["f"] = {f.u, f.v};
            ann["v"] = rec.maker->v;
            ann["u"] = rec.maker->u;
            ann["redirected"] = rec.maker->redirected;
            ann["replaced"] = rec.maker->replaced;
        }
        if (rec.breaker) {
            ann["box"] = rec.breaker->box;
            ann["kind"] = to_string(rec.breaker->kind);
        }
        ann["forced_nonproper"] = rec.forced_nonproper;
        j["ann"] = std::move(ann);
    }
    return j.dump();
}

namespace {

EdgeId edge_from_json(const Graph& g, const ojson& pair) {
    if (!pair.is_array() || pair.size() != 2) throw Error("edge must be [u,v]");
    const auto a = pair[0].get<Vertex>(), b = pair[1].get<Vertex>();
    auto e = g.edge_between(a, b);
    if (!e) throw Error("no edge {" + std::to_string(a) + "," + std::to_string(b) + "} in graph");
    return *e;
}

BreakerMoveKind kind_from_string(const std::string& s) {
    for (auto k : {BreakerMoveKind::fresh, BreakerMoveKind::fallback_fprime, BreakerMoveKind::fallback_any, BreakerMoveKind::reduction_break})
        if (to_string(k) == s) return k;
    throw Error("unknown breaker move kind '" + s + "'");
}

}  // namespace

MoveRecord from_json_line(const Graph& g, std::string_view line) {
    MoveRecord rec;
    try {
        const auto j = ojson::parse(line);
        rec.round = j.at("r").get<std::uint32_t>();
        const auto p = j.at("p").get<std::string>();
        if (p != "M" && p != "B") throw Error("player must be \"M\" or \"B\"");
        rec.player = p == "M" ? Player::maker : Player::breaker;
        rec.skip = j.at("skip").get<bool>();
        if (!rec.skip) {
            rec.edge = edge_from_json(g, j.at("e"));
            rec.color = j.at("c").get<Color>();
        }
        if (auto it = j.find("ann"); it != j.end()) {
            const auto& ann = *it;
            rec.forced_nonproper = ann.value("forced_nonproper", false);
            if (ann.contains("v")) {
                MakerAnnotation m;
                m.anchor = edge_from_json(g, ann.at("f"));
                m.v = ann.at("v").get<Vertex>();
                m.u = ann.at("u").get<Vertex>();
                m.redirected = ann.value("redirected", false);
                m.replaced = ann.value("replaced", false);
                rec.maker = m;
            }
            if (ann.contains("box")) {
                BreakerAnnotation b;
                b.box = ann.at("box").get<int>();
                b.kind = kind_from_string(ann.value("kind", std::string("fresh")));
                rec.breaker = b;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed move record: ") + e.what());
    }
    return rec;
}

std::string write_move_log(const Graph& g, std::span<const MoveRecord> log) {
    std::string out;
    for (const auto& rec : log) {
        out += to_json_line(g, rec);
        out += '\n';
    }
    return out;
}

MoveLog read_move_log(const Graph& g, std::string_view text) {
    MoveLog log;
    std::size_t start = 0, line_no = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            try {
                log.push_back(from_json_line(g, line));
            } catch (const Error& e) {
                throw Error("move log line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        start = end + 1;
    }
    return log;
}

}  // namespace gamelab
