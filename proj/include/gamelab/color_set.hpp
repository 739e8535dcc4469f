#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "gamelab/types.hpp"

namespace gamelab {

/// Subset of the palette {1..k} as a dynamic bitset.
class ColorSet {
public:
    ColorSet() = default;
    explicit ColorSet(std::uint32_t palette_size) : k_(palette_size), words_((palette_size + 63) / 64, 0) {}

    static ColorSet full(std::uint32_t palette_size) {
        ColorSet s(palette_size);
        for (Color c = 1; c <= palette_size; ++c) s.insert(c);
        return s;
    }

    std::uint32_t palette_size() const { return k_; }

    bool contains(Color c) const {
        return c >= 1 && c <= k_ && (words_[(c - 1) / 64] >> ((c - 1) % 64)) & 1ULL;
    }
    void insert(Color c) { words_[(c - 1) / 64] |= 1ULL << ((c - 1) % 64); }

    std::uint32_t size() const {
        std::uint32_t n = 0;
        for (auto w : words_) n += static_cast<std::uint32_t>(std::popcount(w));
        return n;
    }
    bool empty() const { return size() == 0; }

    std::uint32_t union_size(const ColorSet& o) const {
        std::uint32_t n = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) n += static_cast<std::uint32_t>(std::popcount(words_[i] | o.words_[i]));
        return n;
    }
    std::uint32_t intersection_size(const ColorSet& o) const {
        std::uint32_t n = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) n += static_cast<std::uint32_t>(std::popcount(words_[i] & o.words_[i]));
        return n;
    }

    /// Palette minus (this ∪ other).
    ColorSet complement_of_union(const ColorSet& o) const {
        ColorSet r(k_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~(words_[i] | o.words_[i]);
        r.trim();
        return r;
    }
    ColorSet& operator|=(const ColorSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    ColorSet& operator&=(const ColorSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    /// Colors in increasing order.
    std::vector<Color> to_vector() const {
        std::vector<Color> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                out.push_back(static_cast<Color>(i * 64 + b + 1));
                w &= w - 1;
            }
        }
        return out;
    }

    /// The n-th smallest member (0-based); n < size().
    Color nth(std::uint32_t n) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            const auto cnt = static_cast<std::uint32_t>(std::popcount(w));
            if (n >= cnt) {
                n -= cnt;
                continue;
            }
            while (n--) w &= w - 1;
            return static_cast<Color>(i * 64 + std::countr_zero(w) + 1);
        }
        throw Error("ColorSet::nth out of range");
    }

    friend bool operator==(const ColorSet&, const ColorSet&) = default;

private:
    void trim() {
        if (k_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (k_ % 64)) - 1;
    }

    std::uint32_t k_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace gamelab
