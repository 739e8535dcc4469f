#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "gamelab/rational.hpp"

namespace gamelab {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of stream `index` under `master`; independent streams for parallel trials.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Seeded generator with portable sampling helpers. The std distributions are
/// implementation-defined, so sampling is done here to keep logs identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error("Rng::below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// True with probability p (0 <= p <= 1), exact for rational p.
    bool bernoulli(Rational p) {
        if (p.num() <= 0) return false;
        if (p.num() >= p.den()) return true;
        return below(static_cast<std::uint64_t>(p.den())) < static_cast<std::uint64_t>(p.num());
    }

    template <class T>
    const T& pick(std::span<const T> items) {
        return items[below(items.size())];
    }

    friend bool operator==(const Rng&, const Rng&) = default;

private:
    std::mt19937_64 engine_;
};

}  // namespace gamelab
