#include "gamelab/boxgame.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace gamelab {

std::string_view to_string(BoxPlayer p) { return p == BoxPlayer::alice ? "alice" : "bob"; }

BoxGameState BoxGameState::initial(std::span<const std::uint32_t> sizes, std::uint32_t bias, BoxPlayer first) {
    if (bias < 1) throw Error("box game bias must be at least 1");
    BoxGameState st;
    st.sizes.assign(sizes.begin(), sizes.end());
    st.remaining = st.sizes;
    st.alice_touched.assign(sizes.size(), false);
    st.bias = bias;
    st.turn = first;
    return st;
}

void BoxGameState::alice_claim(std::size_t box) {
    if (winner()) throw Error("box game is over");
    if (turn != BoxPlayer::alice) throw Error("not Alice's turn");
    if (box >= box_count() || remaining[box] == 0) throw Error("box " + std::to_string(box) + " has no unclaimed element");
    --remaining[box];
    alice_touched[box] = true;
    turn = BoxPlayer::bob;
    bob_claims_this_turn = 0;
}

void BoxGameState::bob_claim(std::size_t box) {
    if (winner()) throw Error("box game is over");
    if (turn != BoxPlayer::bob) throw Error("not Bob's turn");
    if (box >= box_count() || remaining[box] == 0) throw Error("box " + std::to_string(box) + " has no unclaimed element");
    --remaining[box];
    if (++bob_claims_this_turn == bias) end_bob_turn();
}

void BoxGameState::end_bob_turn() {
    if (turn != BoxPlayer::bob) throw Error("not Bob's turn");
    turn = BoxPlayer::alice;
    bob_claims_this_turn = 0;
}

std::optional<BoxPlayer> BoxGameState::winner() const {
    bool all_touched = true;
    for (std::size_t i = 0; i < box_count(); ++i) {
        if (alice_touched[i]) continue;
        all_touched = false;
        if (remaining[i] == 0) return BoxPlayer::bob;
    }
    if (all_touched) return BoxPlayer::alice;
    return std::nullopt;
}

std::uint64_t box_threshold(std::uint32_t s, std::uint32_t b) {
    if (s < 1) throw Error("box game needs at least one box");
    std::uint64_t f = 0;
    for (std::uint64_t i = 2; i <= s; ++i) f = (i * (f + b)) / (i - 1);
    return f;
}

bool bob_wins(std::span<const std::uint32_t> sizes, std::uint32_t b) {
    if (sizes.empty()) throw Error("box game needs at least one box");
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    if (*hi - *lo > 1) throw Error("box sizes must differ by at most one");
    std::uint64_t total = 0;
    for (auto x : sizes) total += x;
    return total <= box_threshold(static_cast<std::uint32_t>(sizes.size()), b);
}

std::vector<std::size_t> bob_strategy(const BoxGameState& st) {
    if (st.turn != BoxPlayer::bob) throw Error("bob_strategy called on Alice's turn");
    if (st.winner()) return {};
    BoxGameState sim = st;
    std::vector<std::size_t> claims;
    std::uint32_t left = st.bias - st.bob_claims_this_turn;
    bool any_unclaimed = false;
    for (auto r : st.remaining) any_unclaimed |= r > 0;
    if (!any_unclaimed) throw Error("no unclaimed elements for Bob");
    while (left > 0) {
        std::optional<std::size_t> smallest, largest;
        for (std::size_t i = 0; i < sim.box_count(); ++i) {
            if (sim.alice_touched[i] || sim.remaining[i] == 0) continue;
            if (!smallest || sim.remaining[i] < sim.remaining[*smallest]) smallest = i;
            if (!largest || sim.remaining[i] > sim.remaining[*largest]) largest = i;
        }
        if (!smallest) break;
        const std::size_t target = sim.remaining[*smallest] <= left ? *smallest : *largest;
        claims.push_back(target);
        --sim.remaining[target];
        --left;
        if (sim.remaining[target] == 0) break;  // box emptied: Bob has won
    }
    return claims;
}

std::size_t alice_strategy(const BoxGameState& st) {
    if (st.turn != BoxPlayer::alice) throw Error("alice_strategy called on Bob's turn");
    std::optional<std::size_t> best, any;
    for (std::size_t i = 0; i < st.box_count(); ++i) {
        if (st.remaining[i] == 0) continue;
        if (!any) any = i;
        if (st.alice_touched[i]) continue;
        if (!best || st.remaining[i] < st.remaining[*best]) best = i;
    }
    if (best) return *best;
    if (any) return *any;
    throw Error("no unclaimed elements for Alice");
}

namespace {

struct SolverKey {
    std::vector<std::uint32_t> untouched;  // sorted remaining counts of boxes Alice never touched
    std::uint64_t pool = 0;                // unclaimed elements in touched boxes
    std::uint32_t phase = 0;               // 0 = Alice, 1 + used = Bob with `used` claims made
    friend bool operator<(const SolverKey& a, const SolverKey& b) {
        return std::tie(a.phase, a.pool, a.untouched) < std::tie(b.phase, b.pool, b.untouched);
    }
};

class BoxSolver {
public:
    BoxSolver(std::uint32_t bias, std::uint64_t max_states) : bias_(bias), max_states_(max_states) {}

    // True iff Bob wins from the position.
    bool bob_wins(const SolverKey& key) {
        for (auto r : key.untouched)
            if (r == 0) return true;
        if (key.untouched.empty()) return false;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (memo_.size() >= max_states_) throw BudgetExceeded(memo_.size(), "box game solver");

        bool result;
        if (key.phase == 0) {
            result = true;
            for (std::size_t i = 0; i < key.untouched.size() && result; ++i) {
                if (i > 0 && key.untouched[i] == key.untouched[i - 1]) continue;
                SolverKey child = key;
                child.untouched.erase(child.untouched.begin() + static_cast<std::ptrdiff_t>(i));
                child.pool += key.untouched[i] - 1;
                child.phase = 1;
                if (!bob_wins(child)) result = false;
            }
            if (result && key.pool > 0) {
                SolverKey child = key;
                --child.pool;
                child.phase = 1;
                if (!bob_wins(child)) result = false;
            }
        } else {
            const std::uint32_t used = key.phase - 1;
            const std::uint32_t next_phase = used + 1 == bias_ ? 0 : used + 2;
            SolverKey pass = key;
            pass.phase = 0;
            result = bob_wins(pass);
            for (std::size_t i = 0; i < key.untouched.size() && !result; ++i) {
                if (i > 0 && key.untouched[i] == key.untouched[i - 1]) continue;
                SolverKey child = key;
                --child.untouched[i];
                std::sort(child.untouched.begin(), child.untouched.end());
                child.phase = next_phase;
                result = bob_wins(child);
            }
            if (!result && key.pool > 0) {
                SolverKey child = key;
                --child.pool;
                child.phase = next_phase;
                result = bob_wins(child);
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    std::uint64_t states() const { return memo_.size(); }

private:
    std::uint32_t bias_;
    std::uint64_t max_states_;
    std::map<SolverKey, bool> memo_;
};

}  // namespace

BoxSolveResult solve_boxgame(std::span<const std::uint32_t> sizes, std::uint32_t b, BoxPlayer first, std::uint64_t max_states) {
    if (sizes.empty()) throw Error("box game needs at least one box");
    if (b < 1) throw Error("box game bias must be at least 1");
    SolverKey root;
    root.untouched.assign(sizes.begin(), sizes.end());
    std::sort(root.untouched.begin(), root.untouched.end());
    root.phase = first == BoxPlayer::alice ? 0 : 1;
    BoxSolver solver(b, max_states);
    const bool bob = solver.bob_wins(root);
    return {bob ? BoxPlayer::bob : BoxPlayer::alice, solver.states()};
}

namespace {

struct Traverser {
    explicit Traverser(std::uint64_t limit) : max_nodes(limit) {}

    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    BoxTraversal result;
    std::vector<std::size_t> line;

    void visit(BoxGameState st) {
        if (++nodes > max_nodes) throw BudgetExceeded(nodes, "box strategy traversal");
        if (st.turn == BoxPlayer::bob && !st.winner()) {
            for (std::size_t box : bob_strategy(st)) st.bob_claim(box);
            if (st.turn == BoxPlayer::bob && !st.winner()) st.end_bob_turn();
        }
        if (auto w = st.winner()) {
            ++result.leaves;
            if (*w == BoxPlayer::alice && result.sound) {
                result.sound = false;
                result.counterexample = line;
            }
            return;
        }
        for (std::size_t i = 0; i < st.box_count() && result.sound; ++i) {
            if (st.remaining[i] == 0) continue;
            BoxGameState child = st;
            child.alice_claim(i);
            line.push_back(i);
            visit(child);
            line.pop_back();
        }
    }
};

}  // namespace

BoxTraversal traverse_bob_strategy(std::span<const std::uint32_t> sizes, std::uint32_t b, BoxPlayer first, std::uint64_t max_nodes) {
    if (sizes.empty()) throw Error("box game needs at least one box");
    Traverser t(max_nodes);
    t.visit(BoxGameState::initial(sizes, b, first));
    return t.result;
}

}  // namespace gamelab
