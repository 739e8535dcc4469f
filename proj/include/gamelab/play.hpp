#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "gamelab/engine.hpp"

namespace gamelab {

struct MakerDecision {
    EdgeId edge = 0;
    Color color = kNoColor;
    std::optional<MakerAnnotation> annotation;
};

struct BreakerDecision {
    EdgeId edge = 0;
    Color color = kNoColor;
    std::optional<BreakerAnnotation> annotation;
};

class MakerStrategy {
public:
    virtual ~MakerStrategy() = default;
    /// Called on Maker's turn; returns the edge to color and its color.
    virtual MakerDecision decide(const GameState& state) = 0;
    virtual std::string name() const = 0;
};

class BreakerStrategy {
public:
    virtual ~BreakerStrategy() = default;
    /// Next single coloring of the current Breaker turn, or nullopt to end the turn.
    /// Called again after each coloring until the turn ends.
    virtual std::optional<BreakerDecision> next(const GameState& state) = 0;
    virtual std::string name() const = 0;
};

/// Invoked after every applied record.
using MoveObserver = std::function<void(const GameState&, const MoveRecord&)>;

/// Plays until the state is finished (strict: decided; modified: fully colored).
void play_out(GameState& state, MakerStrategy& maker, BreakerStrategy& breaker, const MoveObserver& observer = {});

}  // namespace gamelab
