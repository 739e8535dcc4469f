#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gamelab {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
/// Palette colors are 1..k; 0 marks an uncolored edge.
using Color = std::uint32_t;

inline constexpr Color kNoColor = 0;
inline constexpr std::uint32_t kInfiniteDistance = std::numeric_limits<std::uint32_t>::max();

enum class Player : std::uint8_t { maker, breaker };

constexpr std::string_view to_string(Player p) { return p == Player::maker ? "maker" : "breaker"; }
constexpr Player opponent(Player p) { return p == Player::maker ? Player::breaker : Player::maker; }

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a search exhausts its node or state budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t nodes, const std::string& what)
        : Error(what + " (budget exceeded after " + std::to_string(nodes) + " nodes)"), nodes_(nodes) {}
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

}  // namespace gamelab
