#include <map>
#include <tuple>

#include "gamelab/verify.hpp"

namespace gamelab::verify {

namespace {

class BruteForce {
public:
    BruteForce(const Graph& g, const GameConfig& cfg) : cfg_(cfg), col_(g.edge_count(), kNoColor) {
        const auto edges = g.edges();
        touching_.resize(edges.size());
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = 0; b < edges.size(); ++b)
                if (a != b && (edges[a].u == edges[b].u || edges[a].u == edges[b].v || edges[a].v == edges[b].u ||
                               edges[a].v == edges[b].v))
                    touching_[a].push_back(b);
    }

    bool maker_wins(Player to_move, std::uint32_t used) {
        if (to_move == Player::maker) {
            for (std::size_t e = 0; e < col_.size(); ++e) {
                for (Color c = 1; c <= cfg_.k; ++c) {
                    if (!legal(e, c)) continue;
                    col_[e] = c;
                    const int r = result();
                    const bool win = r > 0 || (r == 0 && maker_wins(Player::breaker, 0));
                    col_[e] = kNoColor;
                    if (win) return true;
                }
            }
            return false;
        }
        bool any_move = false;
        for (std::size_t e = 0; e < col_.size(); ++e) {
            for (Color c = 1; c <= cfg_.k; ++c) {
                if (!legal(e, c)) continue;
                any_move = true;
                col_[e] = c;
                const int r = result();
                bool maker = r > 0;
                if (r == 0) maker = used + 1 == cfg_.bias ? maker_wins(Player::maker, 0) : maker_wins(Player::breaker, used + 1);
                col_[e] = kNoColor;
                if (r < 0 || !maker) return false;
            }
        }
        if (cfg_.breaker_may_skip || used > 0 || !any_move) return maker_wins(Player::maker, 0);
        return true;
    }

    // +1 Maker has won, -1 Breaker has won, 0 undecided.
    int result() const {
        bool all = true;
        for (std::size_t e = 0; e < col_.size(); ++e) {
            if (col_[e] != kNoColor) continue;
            all = false;
            bool open = false;
            for (Color c = 1; c <= cfg_.k && !open; ++c) open = legal(e, c);
            if (!open) return -1;
        }
        return all ? 1 : 0;
    }

private:
    bool legal(std::size_t e, Color c) const {
        if (col_[e] != kNoColor) return false;
        for (auto f : touching_[e])
            if (col_[f] == c) return false;
        return true;
    }

    GameConfig cfg_;
    std::vector<Color> col_;
    std::vector<std::vector<std::size_t>> touching_;
};

struct BoxOracle {
    std::uint32_t bias;
    std::map<std::tuple<std::vector<std::uint32_t>, std::vector<bool>, int, std::uint32_t>, bool> memo;

    static std::optional<BoxPlayer> decided(const std::vector<std::uint32_t>& rem, const std::vector<bool>& touched) {
        bool all = true;
        for (std::size_t i = 0; i < rem.size(); ++i) {
            if (touched[i]) continue;
            if (rem[i] == 0) return BoxPlayer::bob;
            all = false;
        }
        if (all) return BoxPlayer::alice;
        return std::nullopt;
    }

    bool bob_wins(std::vector<std::uint32_t>& rem, std::vector<bool>& touched, BoxPlayer turn, std::uint32_t used) {
        if (auto w = decided(rem, touched)) return *w == BoxPlayer::bob;
        const auto key = std::make_tuple(rem, touched, turn == BoxPlayer::alice ? 0 : 1, used);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool result;
        if (turn == BoxPlayer::alice) {
            result = true;
            for (std::size_t i = 0; i < rem.size() && result; ++i) {
                if (rem[i] == 0) continue;
                const bool was = touched[i];
                --rem[i];
                touched[i] = true;
                result = bob_wins(rem, touched, BoxPlayer::bob, 0);
                ++rem[i];
                touched[i] = was;
            }
        } else {
            result = bob_wins(rem, touched, BoxPlayer::alice, 0);
            for (std::size_t i = 0; i < rem.size() && !result; ++i) {
                if (rem[i] == 0) continue;
                --rem[i];
                result = used + 1 == bias ? bob_wins(rem, touched, BoxPlayer::alice, 0) : bob_wins(rem, touched, BoxPlayer::bob, used + 1);
                ++rem[i];
            }
        }
        memo.emplace(key, result);
        return result;
    }
};

}  // namespace

Player brute_force_winner(const Graph& g, const GameConfig& cfg) {
    BruteForce bf(g, cfg);
    if (const int r = bf.result(); r != 0) return r > 0 ? Player::maker : Player::breaker;
    return bf.maker_wins(cfg.first_player, 0) ? Player::maker : Player::breaker;
}

BoxPlayer brute_force_box_winner(std::span<const std::uint32_t> sizes, std::uint32_t b, BoxPlayer first) {
    BoxOracle oracle{b, {}};
    std::vector<std::uint32_t> rem(sizes.begin(), sizes.end());
    std::vector<bool> touched(sizes.size(), false);
    return oracle.bob_wins(rem, touched, first, 0) ? BoxPlayer::bob : BoxPlayer::alice;
}

std::vector<NamedGraph> mixed_corpus() {
    std::vector<NamedGraph> out;
    for (std::size_t n = 2; n <= 6; ++n) out.push_back({"star:" + std::to_string(n), star(n)});
    for (std::size_t n = 3; n <= 8; ++n) out.push_back({"path:" + std::to_string(n), path(n)});
    for (std::size_t n = 3; n <= 10; ++n) out.push_back({"cycle:" + std::to_string(n), cycle(n)});
    out.push_back({"complete:4", complete(4)});
    out.push_back({"complete:5", complete(5)});
    out.push_back({"complete_bipartite:2:3", complete_bipartite(2, 3)});
    out.push_back({"complete_bipartite:3:3", complete_bipartite(3, 3)});
    out.push_back({"random_regular:8:3:1", random_regular(8, 3, 1)});
    out.push_back({"random_regular:12:4:2", random_regular(12, 4, 2)});
    for (std::uint64_t s = 1; s <= 4; ++s) out.push_back({"gnp:9:0.35:" + std::to_string(s), gnp(9, 0.35, s)});
    const auto trees = enumerate_trees(7);
    for (std::size_t i = 0; i < trees.size(); i += 5) out.push_back({"tree#" + std::to_string(i), trees[i]});
    return out;
}

}  // namespace gamelab::verify
