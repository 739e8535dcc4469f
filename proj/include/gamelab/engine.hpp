#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamelab/color_set.hpp"
#include "gamelab/graph.hpp"
#include "gamelab/types.hpp"

namespace gamelab {

/// strict: a blocked uncolored edge ends the game. modified: play continues to a full
/// (possibly improper) coloring; a Maker forced onto a blocked edge plays a palette color.
enum class PlayMode : std::uint8_t { strict, modified };

enum class Outcome : std::uint8_t { ongoing, maker_won, breaker_won };

std::string_view to_string(PlayMode m);
std::string_view to_string(Outcome o);

struct GameConfig {
    std::uint32_t k = 1;     ///< palette size
    std::uint32_t bias = 1;  ///< Breaker edges per turn
    bool breaker_may_skip = true;
    Player first_player = Player::breaker;
    PlayMode mode = PlayMode::strict;

    void validate() const;
    /// Maker moves first and Breaker must color when he can.
    static GameConfig classic(std::uint32_t k, std::uint32_t bias = 1);
    /// Breaker alone in round 1 and may sit out.
    static GameConfig skip_variant(std::uint32_t k, std::uint32_t bias = 1);
    friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

/// Maker-internal choices behind one move; identifies the good v-edge.
struct MakerAnnotation {
    EdgeId anchor = 0;       ///< the edge f picked in step 1
    Vertex v = 0;            ///< selected endpoint; the colored edge is a good v-edge
    Vertex u = 0;            ///< other endpoint of the colored edge
    bool redirected = false; ///< u was redrawn from the danger set
    bool replaced = false;   ///< v had no uncolored edge and was replaced
    friend bool operator==(const MakerAnnotation&, const MakerAnnotation&) = default;
};

enum class BreakerMoveKind : std::uint8_t { fresh, fallback_fprime, fallback_any, reduction_break };
std::string_view to_string(BreakerMoveKind k);

struct BreakerAnnotation {
    int box = -1;
    BreakerMoveKind kind = BreakerMoveKind::fresh;
    friend bool operator==(const BreakerAnnotation&, const BreakerAnnotation&) = default;
};

/// One half-move. A Breaker turn is a run of color records, closed either implicitly after
/// `bias` colorings or by an explicit skip record (end of turn).
struct MoveRecord {
    std::uint32_t round = 0;
    Player player = Player::maker;
    bool skip = false;
    EdgeId edge = 0;
    Color color = kNoColor;
    bool forced_nonproper = false;
    std::optional<MakerAnnotation> maker;
    std::optional<BreakerAnnotation> breaker;
    friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

using MoveLog = std::vector<MoveRecord>;

/// Raised for rule violations; `step` is the log index when raised during replay.
class IllegalMove : public Error {
public:
    enum class Reason { wrong_turn, edge_colored, color_blocked, bias_exceeded, illegal_skip, game_over, invalid_edge, invalid_color };
    IllegalMove(Reason r, const std::string& what, std::optional<std::size_t> step = std::nullopt)
        : Error(step ? "step " + std::to_string(*step) + ": " + what : what), reason_(r), step_(step) {}
    Reason reason() const { return reason_; }
    std::optional<std::size_t> step() const { return step_; }

private:
    Reason reason_;
    std::optional<std::size_t> step_;
};

/// Referee state: partial coloring plus incrementally maintained loads, used-color sets
/// and uncolored neighborhoods. Winner is re-evaluated after every half-move.
class GameState {
public:
    GameState(std::shared_ptr<const Graph> graph, GameConfig cfg);
    GameState(const Graph& graph, GameConfig cfg) : GameState(std::make_shared<const Graph>(graph), cfg) {}

    const Graph& graph() const { return *graph_; }
    std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
    const GameConfig& config() const { return cfg_; }

    std::uint32_t round() const { return round_; }
    /// Loads seen by the player to move at the start of a Maker turn are those after this round.
    std::uint32_t completed_round() const { return round_ - 1; }
    Player to_move() const { return turn_; }
    std::uint32_t moves_this_turn() const { return moves_this_turn_; }

    Color color_of(EdgeId e) const { return colors_.at(e); }
    bool is_colored(EdgeId e) const { return colors_.at(e) != kNoColor; }
    std::span<const Color> coloring() const { return colors_; }

    /// ℓ(v): colored v-edges.
    std::uint32_t load(Vertex v) const { return load_.at(v); }
    /// U(v): colors on colored v-edges.
    const ColorSet& used_colors(Vertex v) const { return used_.at(v); }
    /// Uncolored v-edges; their other endpoints form Γ'(v).
    std::span<const EdgeId> uncolored_incident(Vertex v) const { return uncolored_at_.at(v).items; }
    std::vector<Vertex> uncolored_neighbors(Vertex v) const;
    std::span<const EdgeId> uncolored_edges() const { return uncolored_.items; }

    /// A(e) = palette \ (U(u) ∪ U(v)); e must be uncolored.
    ColorSet available_colors(EdgeId e) const;
    std::uint32_t available_count(EdgeId e) const;
    bool is_blocked(EdgeId e) const { return !is_colored(e) && available_count(e) == 0; }

    /// Game-theoretic result; sticky once decided. In modified mode play may continue
    /// after breaker_won until every edge is colored.
    Outcome winner() const { return outcome_; }
    /// Round in which Breaker's win condition first held.
    std::optional<std::uint32_t> breaker_win_round() const { return breaker_win_round_; }
    /// No further moves are accepted.
    bool finished() const;
    bool has_legal_breaker_move() const;
    std::uint32_t forced_count() const { return forced_count_; }

    void color_edge(Player who, EdgeId e, Color c, std::optional<MakerAnnotation> mann = std::nullopt,
                    std::optional<BreakerAnnotation> bann = std::nullopt);
    void end_breaker_turn();
    /// Applies a logged record after checking its round and player.
    void apply(const MoveRecord& rec);

    const MoveLog& log() const { return log_; }
    /// Edges colored by Breaker in his most recent completed turn (empty if he sat out or
    /// has not moved yet).
    std::vector<EdgeId> last_breaker_turn_edges() const;
    /// Edge colored by Maker in his latest move.
    std::optional<EdgeId> last_maker_edge() const;

    /// Equality of every observable field, including the log.
    friend bool operator==(const GameState& a, const GameState& b);

private:
    struct IndexedSet {
        std::vector<EdgeId> items;
    };

    void end_turn_internal();
    void check_new_blocks(const Edge& ed);

    std::shared_ptr<const Graph> graph_;
    GameConfig cfg_;
    std::vector<Color> colors_;
    std::vector<std::uint32_t> load_;
    std::vector<ColorSet> used_;
    std::vector<IndexedSet> uncolored_at_;
    std::vector<std::uint32_t> pos_at_;  // 2*e + side -> index in uncolored_at_[endpoint]
    IndexedSet uncolored_;
    std::vector<std::uint32_t> pos_global_;
    std::uint32_t round_ = 1;
    Player turn_;
    std::uint32_t moves_this_turn_ = 0;
    Outcome outcome_ = Outcome::ongoing;
    std::optional<std::uint32_t> breaker_win_round_;
    std::uint32_t forced_count_ = 0;
    MoveLog log_;
};

/// Fresh game: nothing colored, round 1, first player per config.
GameState new_game(std::shared_ptr<const Graph> g, const GameConfig& cfg);
/// Rebuilds the state from a log; IllegalMove carries the failing step index.
GameState replay(std::shared_ptr<const Graph> g, const GameConfig& cfg, std::span<const MoveRecord> log);

// JSON-lines serialization: {"r":int,"p":"M"|"B","e":[u,v]|null,"c":int|null,"skip":bool,"ann":{...}?}
std::string to_json_line(const Graph& g, const MoveRecord& rec);
MoveRecord from_json_line(const Graph& g, std::string_view line);
std::string write_move_log(const Graph& g, std::span<const MoveRecord> log);
MoveLog read_move_log(const Graph& g, std::string_view text);

}  // namespace gamelab
