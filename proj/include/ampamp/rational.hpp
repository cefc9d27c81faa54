// Copyright 2026 The ampamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

#include "ampamp/errors.hpp"

namespace ampamp {

/// Exact cost value. Denominators stay small for every instance we handle, so
/// 64-bit components are enough; intermediate sums go through __int128 where
/// counts multiply values.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline long double to_long_double(const Rational& r) {
    return static_cast<long double>(r.numerator()) / static_cast<long double>(r.denominator());
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

namespace detail {

inline std::int64_t parse_int64(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("not an exact number: '" + std::string(whole) + "'");
    }
    return v;
}

inline std::int64_t checked_pow10(int e, std::string_view whole) {
    if (e < 0 || e > 18) {
        throw InputError("exponent out of range in '" + std::string(whole) + "'");
    }
    std::int64_t p = 1;
    for (int i = 0; i < e; ++i) p *= 10;
    return p;
}

}  // namespace detail

/// Parses "12", "-3.25", "2.5e-3" or "1/3" exactly.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) throw InputError("empty number");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = detail::parse_int64(s.substr(0, slash), text);
        auto den = detail::parse_int64(s.substr(slash + 1), text);
        if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    int exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exponent = static_cast<int>(detail::parse_int64(s.substr(e + 1), text));
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    int frac_digits = 0;
    bool seen_dot = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) throw InputError("not an exact number: '" + std::string(text) + "'");
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_dot) ++frac_digits;
        } else {
            throw InputError("not an exact number: '" + std::string(text) + "'");
        }
    }
    if (digits.empty()) throw InputError("not an exact number: '" + std::string(text) + "'");
    if (digits.size() > 18) throw InputError("too many digits in '" + std::string(text) + "'");
    std::int64_t mant = detail::parse_int64(digits, text);
    if (negative) mant = -mant;
    int scale = exponent - frac_digits;
    if (scale >= 0) {
        auto p = detail::checked_pow10(scale, text);
        if (mant != 0 && std::abs(mant) > std::numeric_limits<std::int64_t>::max() / p) {
            throw InputError("number too large: '" + std::string(text) + "'");
        }
        return Rational(mant * p);
    }
    return Rational(mant, detail::checked_pow10(-scale, text));
}

/// Integers print bare, terminating fractions as decimals, the rest as p/q.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    std::int64_t den = r.denominator();
    int twos = 0, fives = 0;
    while (den % 2 == 0) den /= 2, ++twos;
    while (den % 5 == 0) den /= 5, ++fives;
    if (den != 1 || std::max(twos, fives) > 18) {
        return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    }
    int places = std::max(twos, fives);
    __int128 scaled = static_cast<__int128>(r.numerator()) * detail::checked_pow10(places, "") / r.denominator();
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string digits;
    while (scaled > 0) {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
    digits.insert(digits.end() - places, '.');
    return (negative ? "-" : "") + digits;
}

/// Best rational approximation with denominator at most max_den (continued fractions).
inline Rational rational_from_double(double x, std::int64_t max_den = std::int64_t{1} << 24) {
    if (!std::isfinite(x)) throw InputError("non-finite cost value");
    if (std::fabs(x) > 9.0e15) throw CapacityError("cost value too large for exact representation");
    long double v = x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int i = 0; i < 64; ++i) {
        long double a = std::floor(v);
        auto ai = static_cast<std::int64_t>(a);
        std::int64_t q2 = q0 + ai * q1;
        if (q2 > max_den) break;
        std::int64_t p2 = p0 + ai * p1;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        long double frac = v - a;
        if (frac < 1e-18L) break;
        v = 1.0L / frac;
    }
    return Rational(p1, q1);
}

/// r mod m in [0, m) for positive m.
inline Rational floor_mod(const Rational& r, const Rational& m) {
    Rational q = r / m;
    std::int64_t fl = q.numerator() / q.denominator();
    if (q.numerator() < 0 && q.numerator() % q.denominator() != 0) --fl;
    return r - m * Rational(fl);
}

}  // namespace ampamp
