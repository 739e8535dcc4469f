#include "gamelab/play.hpp"

namespace gamelab {

void play_out(GameState& state, MakerStrategy& maker, BreakerStrategy& breaker, const MoveObserver& observer) {
    auto notify = [&] {
        if (observer) observer(state, state.log().back());
    };
    while (!state.finished()) {
        if (state.to_move() == Player::maker) {
            const auto d = maker.decide(state);
            state.color_edge(Player::maker, d.edge, d.color, d.annotation);
            notify();
            continue;
        }
        const auto round = state.round();
        while (!state.finished() && state.to_move() == Player::breaker && state.round() == round) {
            auto d = breaker.next(state);
            if (!d) {
                state.end_breaker_turn();
                notify();
                break;
            }
            state.color_edge(Player::breaker, d->edge, d->color, std::nullopt, d->annotation);
            notify();
        }
    }
}

}  // namespace gamelab
