#include "gamelab/rational.hpp"

#include <charconv>
#include <cstdlib>

namespace gamelab {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view full) {
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error("invalid number '" + std::string(full) + "'");
    return x;
}

Rational pow10(std::int64_t e) {
    std::int64_t p = 1;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) {
        if (p > INT64_MAX / 10) throw Error("exponent too large");
        p *= 10;
    }
    return e < 0 ? Rational(1, p) : Rational(p);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const std::string_view full = text;
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return Rational(parse_int(text.substr(0, slash), full), parse_int(text.substr(slash + 1), full));

    std::int64_t exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_part = text.substr(e + 1);
        if (!exp_part.empty() && exp_part.front() == '+') exp_part.remove_prefix(1);
        exponent = parse_int(exp_part, full);
        text = text.substr(0, e);
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string digits;
    std::int64_t scale = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
        scale = static_cast<std::int64_t>(text.size() - dot - 1);
    } else {
        digits = std::string(text);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw Error("invalid number '" + std::string(full) + "'");
    Rational r(parse_int(digits, full));
    r = r * pow10(exponent - scale);
    return negative ? Rational(0) - r : r;
}

Rational Rational::from_double(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) throw Error("cannot convert non-finite value to rational");
    const bool negative = x < 0;
    double rest = negative ? -x : x;
    // Convergents h/k of the continued fraction expansion.
    std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const double a_d = std::floor(rest);
        if (a_d > 9e18) break;
        const auto a = static_cast<std::int64_t>(a_d);
        const __int128 h2 = static_cast<__int128>(a) * h1 + h0;
        const __int128 k2 = static_cast<__int128>(a) * k1 + k0;
        if (k2 > max_den || h2 > INT64_MAX) break;
        h0 = h1;
        h1 = static_cast<std::int64_t>(h2);
        k0 = k1;
        k1 = static_cast<std::int64_t>(k2);
        const double frac = rest - a_d;
        if (frac < 1e-15 * std::max(1.0, rest)) break;
        // Stop once the convergent reproduces x exactly in double precision.
        if (static_cast<double>(h1) / static_cast<double>(k1) == (negative ? -x : x)) break;
        rest = 1.0 / frac;
    }
    if (k1 == 0) throw Error("cannot approximate value as rational");
    return Rational(negative ? -h1 : h1, k1);
}

}  // namespace gamelab
