/*
 *   Copyright 2026 spq developers
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "spq/error.hpp"

namespace spq {

// Exact fraction, always kept reduced with a positive denominator.
// Measures computed by the engine never leave [0, 1], but the type itself
// is a plain rational so bounds and intermediate values are unrestricted.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d) : num(n), den(d) {
        if (den == 0) throw Error(Errc::BadArgument, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static Rational zero() { return Rational(); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        // Denominators here are small (bounded by row counts), so the
        // cross product stays far from overflow.
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

// Parses "p/q", "p", or a plain decimal like "0.25" into an exact rational.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            int64_t n = std::stoll(s.substr(0, slash));
            int64_t d = std::stoll(s.substr(slash + 1));
            if (d == 0) return std::nullopt;
            return Rational(n, d);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(s), 1);
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.size() > 18) return std::nullopt;
        int64_t scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        int64_t f = frac.empty() ? 0 : std::stoll(frac);
        bool neg = !whole.empty() && whole[0] == '-';
        int64_t n = w * scale + (neg ? -f : f);
        return Rational(n, scale);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace spq
