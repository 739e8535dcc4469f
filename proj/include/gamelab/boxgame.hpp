#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamelab/types.hpp"

namespace gamelab {

enum class BoxPlayer : std::uint8_t { alice, bob };
std::string_view to_string(BoxPlayer p);

/// Box game: Alice claims one element per turn, Bob up to `bias`. Bob wins once every
/// element of some box Alice never touched is claimed; Alice wins once she touched
/// every box. Elements are anonymous, so a box is just its remaining count.
struct BoxGameState {
    std::vector<std::uint32_t> sizes;
    std::vector<std::uint32_t> remaining;
    std::vector<bool> alice_touched;
    std::uint32_t bias = 1;
    BoxPlayer turn = BoxPlayer::alice;
    std::uint32_t bob_claims_this_turn = 0;

    static BoxGameState initial(std::span<const std::uint32_t> sizes, std::uint32_t bias, BoxPlayer first = BoxPlayer::alice);

    std::size_t box_count() const { return sizes.size(); }
    void alice_claim(std::size_t box);
    /// Ends Bob's turn automatically after `bias` claims.
    void bob_claim(std::size_t box);
    void end_bob_turn();
    /// nullopt while undecided.
    std::optional<BoxPlayer> winner() const;
    friend bool operator==(const BoxGameState&, const BoxGameState&) = default;
};

/// f(1,b) = 0, f(s,b) = floor(s/(s-1) * (f(s-1,b) + b)).
std::uint64_t box_threshold(std::uint32_t s, std::uint32_t b);

/// Winner criterion for near-uniform sizes (max - min <= 1): Bob wins iff sum <= f(s,b).
/// Throws for empty or non-near-uniform sizes.
bool bob_wins(std::span<const std::uint32_t> sizes, std::uint32_t b);

/// Claims Bob makes for the rest of his turn: finish an untouched box when the remaining
/// claims suffice, otherwise take from the fullest untouched box to keep them level.
std::vector<std::size_t> bob_strategy(const BoxGameState& st);
/// Greedy Alice: the untouched box with the fewest remaining elements.
std::size_t alice_strategy(const BoxGameState& st);

struct BoxSolveResult {
    BoxPlayer winner = BoxPlayer::alice;
    std::uint64_t states = 0;
};

/// Exact minimax winner by memoized search over (untouched remaining multiset, remaining
/// elements in touched boxes, turn phase). Throws BudgetExceeded beyond `max_states`.
BoxSolveResult solve_boxgame(std::span<const std::uint32_t> sizes, std::uint32_t b, BoxPlayer first = BoxPlayer::alice,
                             std::uint64_t max_states = 50'000'000);

struct BoxTraversal {
    bool sound = true;
    std::uint64_t leaves = 0;
    /// Alice's boxes along a losing line for Bob, when unsound.
    std::vector<std::size_t> counterexample;
};

/// Plays bob_strategy against every Alice reply; sound iff Bob wins on every branch.
BoxTraversal traverse_bob_strategy(std::span<const std::uint32_t> sizes, std::uint32_t b, BoxPlayer first = BoxPlayer::alice,
                                   std::uint64_t max_nodes = 50'000'000);

}  // namespace gamelab
