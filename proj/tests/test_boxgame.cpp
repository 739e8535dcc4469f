#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gamelab/boxgame.hpp"
#include "gamelab/verify.hpp"

using namespace gamelab;

namespace {

std::vector<std::vector<std::uint32_t>> near_uniform(std::uint32_t max_s, std::uint32_t max_size) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t s = 1; s <= max_s; ++s)
        for (std::uint32_t lo = 1; lo <= max_size; ++lo)
            for (std::uint32_t big = 0; big < s; ++big) {
                if (big > 0 && lo + 1 > max_size) continue;
                std::vector<std::uint32_t> v(s - big, lo);
                v.insert(v.end(), big, lo + 1);
                out.push_back(v);
            }
    return out;
}

}  // namespace

TEST_CASE("threshold recurrence") {
    CHECK(box_threshold(1, 1) == 0);
    CHECK(box_threshold(2, 1) == 2);
    CHECK(box_threshold(3, 1) == 4);
    CHECK(box_threshold(4, 1) == 6);
    CHECK(box_threshold(5, 2) == 20);
    CHECK(box_threshold(2, 2) == 4);
}

TEST_CASE("criterion examples") {
    CHECK(bob_wins(std::vector<std::uint32_t>{1, 1}, 1));
    CHECK_FALSE(bob_wins(std::vector<std::uint32_t>{2, 2}, 1));
    CHECK(bob_wins(std::vector<std::uint32_t>{2, 2, 2, 2, 2}, 2));
    CHECK_THROWS_AS(bob_wins(std::vector<std::uint32_t>{1, 3}, 1), Error);
    CHECK_THROWS_AS(bob_wins(std::vector<std::uint32_t>{}, 1), Error);
}

TEST_CASE("exact solver examples") {
    CHECK(solve_boxgame(std::vector<std::uint32_t>{1, 1}, 1).winner == BoxPlayer::bob);
    CHECK(solve_boxgame(std::vector<std::uint32_t>{2, 2}, 1).winner == BoxPlayer::alice);
    for (std::uint32_t k = 1; k <= 6; ++k)
        for (std::uint32_t b = 1; b <= 4; ++b) CHECK(solve_boxgame(std::vector<std::uint32_t>{k}, b).winner == BoxPlayer::alice);
}

TEST_CASE("strategy examples") {
    auto st = BoxGameState::initial(std::vector<std::uint32_t>{1, 1}, 1);
    st.alice_claim(0);
    CHECK(bob_strategy(st) == std::vector<std::size_t>{1});
    st.bob_claim(1);
    CHECK(st.winner() == BoxPlayer::bob);

    auto one = BoxGameState::initial(std::vector<std::uint32_t>{3}, 1);
    one.alice_claim(alice_strategy(one));
    CHECK(one.winner() == BoxPlayer::alice);
}

TEST_CASE("game state rules") {
    auto st = BoxGameState::initial(std::vector<std::uint32_t>{2, 3}, 2);
    CHECK_FALSE(st.winner());
    st.alice_claim(1);
    CHECK(st.turn == BoxPlayer::bob);
    st.bob_claim(0);
    CHECK(st.turn == BoxPlayer::bob);
    st.end_bob_turn();
    CHECK(st.turn == BoxPlayer::alice);
    st.alice_claim(0);
    CHECK(st.winner() == BoxPlayer::alice);
}

TEST_CASE("criterion, memoized solver and brute-force minimax agree") {
    for (const auto& sizes : near_uniform(4, 4)) {
        for (std::uint32_t b = 1; b <= 3; ++b) {
            const bool crit = bob_wins(sizes, b);
            REQUIRE(crit == (solve_boxgame(sizes, b).winner == BoxPlayer::bob));
            REQUIRE(crit == (verify::brute_force_box_winner(sizes, b) == BoxPlayer::bob));
        }
    }
    for (const auto& sizes : near_uniform(4, 4))
        for (std::uint32_t b = 1; b <= 3; ++b)
            REQUIRE(solve_boxgame(sizes, b, BoxPlayer::bob).winner == verify::brute_force_box_winner(sizes, b, BoxPlayer::bob));
}

TEST_CASE("Bob's policy wins every Alice line whenever the criterion says Bob wins") {
    std::size_t checked = 0;
    for (const auto& sizes : near_uniform(6, 6)) {
        for (std::uint32_t b = 1; b <= 4; ++b) {
            if (!bob_wins(sizes, b)) continue;
            const auto t = traverse_bob_strategy(sizes, b);
            INFO("b=" << b << " s=" << sizes.size() << " first size " << sizes.front());
            REQUIRE(t.sound);
            ++checked;
        }
    }
    CHECK(checked > 50);
    CHECK(traverse_bob_strategy(std::vector<std::uint32_t>{2, 2, 2, 2, 2}, 2).sound);
    CHECK(traverse_bob_strategy(std::vector<std::uint32_t>{3, 3, 3}, 2).sound);
    const auto lost = traverse_bob_strategy(std::vector<std::uint32_t>{2, 2}, 1);
    CHECK_FALSE(lost.sound);
    CHECK_FALSE(lost.counterexample.empty());
}

TEST_CASE("harmonic lower bound with exact fractions") {
    // f(s,b) * (s-1)! >= (b-1) * s * (s-1)! * H_{s-1}, kept in integers for small s.
    for (std::uint32_t b = 1; b <= 10; ++b) {
        for (std::uint32_t s = 2; s <= 15; ++s) {
            unsigned __int128 fact = 1, hnum = 0;
            for (std::uint32_t i = 1; i < s; ++i) fact *= i;
            for (std::uint32_t i = 1; i < s; ++i) hnum += fact / i;
            REQUIRE(static_cast<unsigned __int128>(box_threshold(s, b)) * fact >= static_cast<unsigned __int128>(b - 1) * s * hnum);
        }
    }
}
