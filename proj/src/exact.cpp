#include "gamelab/exact.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace gamelab {

std::vector<Color> canonical_coloring(std::span<const Color> coloring) {
    std::unordered_map<Color, Color> relabel;
    std::vector<Color> out(coloring.size(), kNoColor);
    for (std::size_t i = 0; i < coloring.size(); ++i) {
        const Color c = coloring[i];
        if (c == kNoColor) continue;
        auto [it, fresh] = relabel.try_emplace(c, static_cast<Color>(relabel.size() + 1));
        out[i] = it->second;
    }
    return out;
}

namespace {

enum class Status { ongoing, maker, breaker };

struct Key {
    std::uint64_t coloring;
    std::uint32_t phase;
    friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        return static_cast<std::size_t>(splitmix(k.coloring ^ (static_cast<std::uint64_t>(k.phase) << 59) ^ k.phase));
    }
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
};

class Solver {
public:
    Solver(const GameState& s, std::uint64_t budget, bool use_table)
        : g_(s.graph()), k_(s.config().k), bias_(s.config().bias), may_skip_(s.config().breaker_may_skip),
          budget_(budget), use_table_(use_table) {
        if (g_.edge_count() > kSolverMaxEdges)
            throw Error("exact solver supports at most " + std::to_string(kSolverMaxEdges) + " edges");
        if (k_ > kSolverMaxColors) throw Error("exact solver supports at most " + std::to_string(kSolverMaxColors) + " colors");
        if (s.config().mode != PlayMode::strict) throw Error("exact solver requires strict mode");
        m_ = g_.edge_count();
        full_ = static_cast<std::uint16_t>((1u << k_) - 1);
        used_.assign(g_.vertex_count(), 0);
        for (EdgeId e = 0; e < m_; ++e) {
            ends_[e] = {g_.edge(e).u, g_.edge(e).v};
            adjacent_[e] = g_.neighbor_edges(e);
            color_[e] = static_cast<std::uint8_t>(s.color_of(e));
            if (color_[e]) apply_masks(e, color_[e]);
        }
    }

    bool maker_wins(Player to_move, std::uint32_t used) { return value(to_move, used); }
    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t table_size() const { return table_.size(); }

private:
    std::uint16_t available(EdgeId e) const {
        return static_cast<std::uint16_t>(full_ & ~(used_[ends_[e][0]] | used_[ends_[e][1]]));
    }

    void apply_masks(EdgeId e, std::uint8_t c) {
        const auto bit = static_cast<std::uint16_t>(1u << (c - 1));
        used_[ends_[e][0]] |= bit;
        used_[ends_[e][1]] |= bit;
        ++color_count_[c];
        ++colored_;
    }

    void set(EdgeId e, std::uint8_t c) {
        color_[e] = c;
        apply_masks(e, c);
    }

    void unset(EdgeId e) {
        const std::uint8_t c = color_[e];
        const auto bit = static_cast<std::uint16_t>(1u << (c - 1));
        used_[ends_[e][0]] &= static_cast<std::uint16_t>(~bit);
        used_[ends_[e][1]] &= static_cast<std::uint16_t>(~bit);
        --color_count_[c];
        --colored_;
        color_[e] = 0;
    }

    Status after_move(EdgeId e) const {
        for (EdgeId f : adjacent_[e])
            if (!color_[f] && available(f) == 0) return Status::breaker;
        return colored_ == m_ ? Status::maker : Status::ongoing;
    }

    // Colors worth trying at e: used ones, plus the lowest color absent from the board.
    std::uint16_t candidate_colors(EdgeId e) const {
        std::uint16_t avail = available(e);
        std::uint16_t out = 0;
        bool fresh_taken = false;
        for (std::uint32_t c = 1; c <= k_; ++c) {
            const auto bit = static_cast<std::uint16_t>(1u << (c - 1));
            if (!(avail & bit)) continue;
            if (color_count_[c] == 0) {
                if (fresh_taken) continue;
                fresh_taken = true;
            }
            out |= bit;
        }
        return out;
    }

    Key key(Player to_move, std::uint32_t used) const {
        std::array<std::uint8_t, kSolverMaxColors + 1> relabel{};
        std::uint8_t next = 1;
        std::uint64_t packed = 0;
        for (EdgeId e = 0; e < m_; ++e) {
            std::uint8_t c = color_[e];
            if (c) {
                if (!relabel[c]) relabel[c] = next++;
                c = relabel[c];
            }
            packed |= static_cast<std::uint64_t>(c) << (4 * e);
        }
        return {packed, to_move == Player::maker ? 0u : 1u + used};
    }

    bool value(Player to_move, std::uint32_t used) {
        if (++nodes_ > budget_) throw BudgetExceeded(nodes_ - 1, "exact solver");
        Key kk{};
        if (use_table_) {
            kk = key(to_move, used);
            if (auto it = table_.find(kk); it != table_.end()) return it->second;
        }
        const bool result = to_move == Player::maker ? maker_node() : breaker_node(used);
        if (use_table_) table_.emplace(kk, result);
        return result;
    }

    bool maker_node() {
        for (EdgeId e = 0; e < m_; ++e) {
            if (color_[e]) continue;
            auto cands = candidate_colors(e);
            while (cands) {
                const auto c = static_cast<std::uint8_t>(std::countr_zero(cands) + 1);
                cands &= static_cast<std::uint16_t>(cands - 1);
                set(e, c);
                const Status st = after_move(e);
                const bool win = st == Status::maker || (st == Status::ongoing && value(Player::breaker, 0));
                unset(e);
                if (win) return true;
            }
        }
        return false;
    }

    bool breaker_node(std::uint32_t used) {
        for (EdgeId e = 0; e < m_; ++e) {
            if (color_[e]) continue;
            auto cands = candidate_colors(e);
            while (cands) {
                const auto c = static_cast<std::uint8_t>(std::countr_zero(cands) + 1);
                cands &= static_cast<std::uint16_t>(cands - 1);
                set(e, c);
                const Status st = after_move(e);
                bool maker = st == Status::maker;
                if (st == Status::ongoing)
                    maker = used + 1 == bias_ ? value(Player::maker, 0) : value(Player::breaker, used + 1);
                unset(e);
                if (st == Status::breaker || !maker) return false;
            }
        }
        // A non-terminal position always has a legal Breaker move, so the turn may end
        // here only by choice.
        if (may_skip_ || used > 0) return value(Player::maker, 0);
        return true;
    }

    const Graph& g_;
    std::uint32_t k_;
    std::uint32_t bias_;
    bool may_skip_;
    std::uint64_t budget_;
    bool use_table_;
    std::size_t m_ = 0;
    std::uint16_t full_ = 0;
    std::array<std::array<Vertex, 2>, kSolverMaxEdges> ends_{};
    std::array<std::vector<EdgeId>, kSolverMaxEdges> adjacent_{};
    std::array<std::uint8_t, kSolverMaxEdges> color_{};
    std::array<std::uint32_t, kSolverMaxColors + 1> color_count_{};
    std::size_t colored_ = 0;
    std::vector<std::uint16_t> used_;
    std::uint64_t nodes_ = 0;
    std::unordered_map<Key, bool, KeyHash> table_;
};

}  // namespace

SolveStats solve_position(const GameState& s, std::uint64_t budget, bool use_table) {
    Solver solver(s, budget, use_table);
    SolveStats out;
    if (s.winner() != Outcome::ongoing) {
        out.winner = s.winner() == Outcome::maker_won ? Player::maker : Player::breaker;
        return out;
    }
    const bool maker = solver.maker_wins(s.to_move(), s.moves_this_turn());
    out.winner = maker ? Player::maker : Player::breaker;
    out.nodes = solver.nodes();
    out.table_size = solver.table_size();
    return out;
}

SolveStats solve(const Graph& g, const GameConfig& cfg, std::uint64_t budget, bool use_table) {
    if (cfg.mode != PlayMode::strict) throw Error("exact solver requires strict mode");
    return solve_position(GameState(g, cfg), budget, use_table);
}

Player solve(const Graph& g, std::uint32_t k, GameConfig cfg, std::uint64_t budget) {
    cfg.k = k;
    return solve(g, cfg, budget).winner;
}

ChiResult game_chromatic_index(const Graph& g, std::uint32_t bias, const GameConfig& variant, std::uint64_t budget) {
    ChiResult out;
    out.bias = bias;
    out.breaker_may_skip = variant.breaker_may_skip;
    out.first_player = variant.first_player;
    const auto delta = static_cast<std::uint32_t>(g.max_degree());
    if (g.edge_count() == 0) {
        out.value = 0;
        return out;
    }
    for (std::uint32_t k = std::max<std::uint32_t>(1, delta); k <= 2 * delta - 1; ++k) {
        GameConfig cfg = variant;
        cfg.k = k;
        cfg.bias = bias;
        cfg.mode = PlayMode::strict;
        try {
            const auto w = solve(g, cfg, budget).winner;
            out.winners[k] = w;
            if (w == Player::maker && !out.value) out.value = k;
        } catch (const BudgetExceeded&) {
            out.winners[k] = std::nullopt;
            out.complete = false;
        }
    }
    return out;
}

namespace {

template <class Strategy>
class Verifier {
public:
    using Factory = std::function<std::unique_ptr<Strategy>()>;
    static constexpr Player kSide = std::is_same_v<Strategy, MakerStrategy> ? Player::maker : Player::breaker;

    Verifier(std::shared_ptr<const Graph> g, GameConfig cfg, const Factory& make, std::uint64_t budget)
        : g_(std::move(g)), cfg_(cfg), make_(make), budget_(budget) {
        if (cfg_.mode != PlayMode::strict) throw Error("strategy verification requires strict mode");
    }

    VerifyResult run() {
        visit(new_game(g_, cfg_));
        return result_;
    }

private:
    // The strategy's next action at `s`, rebuilt by replaying its decisions along the line.
    MoveRecord strategy_action(const GameState& s) {
        auto strat = make_();
        GameState replayed = new_game(g_, cfg_);
        for (const auto& rec : s.log()) {
            if (rec.player == kSide) decide(*strat, replayed);
            replayed.apply(rec);
        }
        return decide(*strat, replayed);
    }

    MoveRecord decide(Strategy& strat, const GameState& s) {
        MoveRecord rec;
        rec.round = s.round();
        rec.player = kSide;
        if constexpr (kSide == Player::maker) {
            const auto d = strat.decide(s);
            rec.edge = d.edge;
            rec.color = d.color;
            rec.maker = d.annotation;
        } else {
            const auto d = strat.next(s);
            if (!d) {
                rec.skip = true;
            } else {
                rec.edge = d->edge;
                rec.color = d->color;
                rec.breaker = d->annotation;
            }
        }
        return rec;
    }

    void visit(const GameState& s) {
        if (++result_.nodes > budget_) throw BudgetExceeded(result_.nodes - 1, "strategy verification");
        if (s.finished()) {
            ++result_.leaves;
            const bool side_won = (s.winner() == Outcome::maker_won) == (kSide == Player::maker);
            if (!side_won && result_.sound) {
                result_.sound = false;
                result_.counterexample = s.log();
            }
            return;
        }
        if (s.to_move() == kSide) {
            GameState child = s;
            child.apply(strategy_action(s));
            visit(child);
            return;
        }
        for (EdgeId e = 0; e < g_->edge_count() && result_.sound; ++e) {
            if (s.is_colored(e)) continue;
            for (Color c : s.available_colors(e).to_vector()) {
                if (!result_.sound) break;
                GameState child = s;
                child.color_edge(s.to_move(), e, c);
                visit(child);
            }
        }
        if (result_.sound && s.to_move() == Player::breaker && (cfg_.breaker_may_skip || s.moves_this_turn() > 0)) {
            GameState child = s;
            child.end_breaker_turn();
            visit(child);
        }
    }

    std::shared_ptr<const Graph> g_;
    GameConfig cfg_;
    const Factory& make_;
    std::uint64_t budget_;
    VerifyResult result_;
};

}  // namespace

VerifyResult verify_breaker_strategy(const Graph& g, const GameConfig& cfg, const BreakerFactory& make, std::uint64_t budget) {
    return Verifier<BreakerStrategy>(std::make_shared<const Graph>(g), cfg, make, budget).run();
}

VerifyResult verify_maker_strategy(const Graph& g, const GameConfig& cfg, const MakerFactory& make, std::uint64_t budget) {
    return Verifier<MakerStrategy>(std::make_shared<const Graph>(g), cfg, make, budget).run();
}

}  // namespace gamelab
