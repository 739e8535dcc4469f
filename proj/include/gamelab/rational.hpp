#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "gamelab/types.hpp"

namespace gamelab {

/// Small exact rational over int64, always normalized with a positive denominator.
/// Used for strategy constants so that threshold tests against integer loads are exact.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) { normalize(); }

    /// Parses "0.1", "1e-3", "3/40" or "2" without going through floating point.
    static Rational parse(std::string_view text);
    /// Best rational approximation with denominator at most max_den (continued fractions).
    /// Decimal literals such as 0.1 or 0.001 round-trip exactly.
    static Rational from_double(double x, std::int64_t max_den = 1'000'000'000);

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

    /// Largest integer not above the value.
    constexpr std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
    }
    constexpr std::int64_t ceil() const { return -Rational(-num_, den_).floor(); }

    friend constexpr Rational operator+(Rational a, Rational b) {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend constexpr Rational operator-(Rational a, Rational b) { return a + Rational(-b.num_, b.den_); }
    friend constexpr Rational operator*(Rational a, Rational b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend constexpr Rational operator/(Rational a, Rational b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    friend constexpr bool operator==(Rational a, Rational b) = default;
    friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    friend std::ostream& operator<<(std::ostream& os, Rational r) { return os << r.str(); }

private:
    static constexpr Rational from_wide(__int128 num, __int128 den) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (num > lim || -num > lim || den > lim) throw Error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    constexpr void normalize() {
        if (den_ == 0) throw Error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// True iff the integer `load` is at least the rational `threshold`.
constexpr bool reaches(std::int64_t load, Rational threshold) { return Rational(load) >= threshold; }

}  // namespace gamelab
