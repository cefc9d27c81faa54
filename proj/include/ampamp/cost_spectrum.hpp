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

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <type_traits>
#include <utility>
#include <vector>

#include "ampamp/bitstring.hpp"
#include "ampamp/errors.hpp"
#include "ampamp/rational.hpp"
#include "ampamp/weight_set.hpp"

namespace ampamp {

/// Largest N accepted by exhaustive 2^N enumeration.
inline constexpr int kMaxBruteForceQubits = 24;

/// Distinct cost values C_j (strictly increasing) with degeneracies N_j.
///
/// Construction checks sum_j N_j = 2^N and computes the mean cost exactly.
/// Class membership is not stored; it is recovered by evaluating C(Z).
class CostSpectrum {
   public:
    CostSpectrum(std::vector<Rational> values, std::vector<std::uint64_t> counts, int n_qubits)
        : values_(std::move(values)), counts_(std::move(counts)), n_qubits_(n_qubits) {
        if (n_qubits_ < 0 || n_qubits_ > 63) throw CapacityError("spectrum supports 0..63 qubits");
        if (values_.empty()) throw InputError("spectrum must have at least one class");
        if (values_.size() != counts_.size()) throw InputError("values and counts differ in length");
        std::uint64_t total = 0;
        for (std::size_t j = 0; j < values_.size(); ++j) {
            if (counts_[j] == 0) throw InputError("class counts must be positive");
            if (j > 0 && !(values_[j - 1] < values_[j])) throw InputError("cost values must be strictly increasing");
            if (total + counts_[j] < total) throw InputError("class counts overflow");
            total += counts_[j];
        }
        if (total != (std::uint64_t{1} << n_qubits_)) throw InputError("class counts must sum to 2^N");
        c_bar_ = weighted_mean();
    }

    const std::vector<Rational>& values() const { return values_; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    const Rational& c_bar() const { return c_bar_; }
    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return values_.size(); }
    double dimension() const { return std::ldexp(1.0, n_qubits_); }

    std::optional<std::size_t> index_of(const Rational& c) const {
        auto it = std::lower_bound(values_.begin(), values_.end(), c);
        if (it == values_.end() || *it != c) return std::nullopt;
        return static_cast<std::size_t>(it - values_.begin());
    }

    std::uint64_t count_of(const Rational& c) const {
        auto j = index_of(c);
        return j ? counts_[*j] : 0;
    }

    /// True when {(C_j - c_bar, N_j)} is invariant under negating the offset.
    bool is_count_symmetric() const {
        const std::size_t d = values_.size();
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t m = d - 1 - j;
            if (values_[j] + values_[m] != c_bar_ * Rational(2) || counts_[j] != counts_[m]) return false;
        }
        return true;
    }

    friend bool operator==(const CostSpectrum& a, const CostSpectrum& b) {
        return a.n_qubits_ == b.n_qubits_ && a.values_ == b.values_ && a.counts_ == b.counts_;
    }

   private:
    Rational weighted_mean() const {
        std::int64_t l = 1;
        for (const auto& v : values_) {
            l = std::lcm(l, v.denominator());
            if (l > (std::int64_t{1} << 40)) throw CapacityError("cost denominators too large for exact mean");
        }
        __int128 sum = 0;
        for (std::size_t j = 0; j < values_.size(); ++j) {
            __int128 scaled = static_cast<__int128>(values_[j].numerator()) * (l / values_[j].denominator());
            sum += scaled * static_cast<__int128>(counts_[j]);
        }
        __int128 den = static_cast<__int128>(l) << n_qubits_;
        __int128 a = sum < 0 ? -sum : sum, b = den;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a != 0) {
            sum /= a;
            den /= a;
        }
        constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
        if (sum > lim || sum < -lim || den > lim) throw CapacityError("mean cost does not fit a 64-bit rational");
        return Rational(static_cast<std::int64_t>(sum), static_cast<std::int64_t>(den));
    }

    std::vector<Rational> values_;
    std::vector<std::uint64_t> counts_;
    int n_qubits_ = 0;
    Rational c_bar_{0};
};

/// C(Z) = sum_i W_i z_i, exact.
inline Rational evaluate_linear(const WeightSet& w, const Bitstring& z) {
    if (z.size() != w.size()) {
        throw InputError("bitstring length " + std::to_string(z.size()) + " does not match " +
                         std::to_string(w.size()) + " weights");
    }
    Rational sum{0};
    for (int i = 0; i < w.size(); ++i) {
        if (z[i]) sum += w[i];
    }
    return sum;
}

/// (C(z) + C(~z)) / 2. Equals w_sum/2 for every z.
inline Rational mean_cost_from_inverse_pair(const WeightSet& w, const Bitstring& z) {
    return (evaluate_linear(w, z) + evaluate_linear(w, z.inverted())) / Rational(2);
}

/// Linear cost evaluated on integer-scaled weights; returns the exact rational.
class LinearCost {
   public:
    explicit LinearCost(const WeightSet& w) : scale_(w.common_denominator()), n_(w.size()) {
        scaled_.reserve(static_cast<std::size_t>(n_));
        for (const auto& x : w.weights()) {
            scaled_.push_back(x.numerator() * (scale_ / x.denominator()));
        }
    }

    int size() const { return n_; }
    std::int64_t scale() const { return scale_; }

    std::int64_t scaled(std::uint64_t index) const {
        std::int64_t sum = 0;
        for (int i = 0; i < n_; ++i) {
            if ((index >> i) & 1U) sum += scaled_[static_cast<std::size_t>(i)];
        }
        return sum;
    }

    Rational operator()(const Bitstring& z) const {
        if (z.size() != n_) throw InputError("bitstring length does not match weights");
        return Rational(scaled(z.index()), scale_);
    }

   private:
    std::int64_t scale_;
    int n_;
    std::vector<std::int64_t> scaled_;
};

namespace detail {

inline void check_brute_force_size(int n_qubits) {
    if (n_qubits < 0) throw InputError("negative qubit count");
    if (n_qubits > kMaxBruteForceQubits) {
        throw CapacityError("brute-force enumeration is limited to " + std::to_string(kMaxBruteForceQubits) +
                            " qubits (got " + std::to_string(n_qubits) + ")");
    }
}

template <class Map>
CostSpectrum spectrum_from_map(const Map& classes, int n_qubits) {
    std::vector<Rational> values;
    std::vector<std::uint64_t> counts;
    values.reserve(classes.size());
    counts.reserve(classes.size());
    for (const auto& [v, n] : classes) {
        values.push_back(v);
        counts.push_back(n);
    }
    return CostSpectrum(std::move(values), std::move(counts), n_qubits);
}

}  // namespace detail

/// Any callable mapping an assignment to its exact cost.
template <class F>
concept ExactCostFunction = std::invocable<const F&, const Bitstring&> &&
                            !std::floating_point<std::invoke_result_t<const F&, const Bitstring&>> &&
                            std::convertible_to<std::invoke_result_t<const F&, const Bitstring&>, Rational>;

/// Any callable mapping an assignment to a real-valued cost.
template <class F>
concept RealCostFunction = std::invocable<const F&, const Bitstring&> &&
                           std::floating_point<std::invoke_result_t<const F&, const Bitstring&>>;

/// Enumerates all 2^N assignments and groups equal costs exactly.
template <ExactCostFunction F>
CostSpectrum build_spectrum_bruteforce(const F& cost, int n_qubits) {
    detail::check_brute_force_size(n_qubits);
    std::map<Rational, std::uint64_t> classes;
    const std::uint64_t total = std::uint64_t{1} << n_qubits;
    for (std::uint64_t i = 0; i < total; ++i) {
        ++classes[Rational(cost(Bitstring(i, n_qubits)))];
    }
    return detail::spectrum_from_map(classes, n_qubits);
}

/// Real-valued costs: sorted values closer than 1e-9 * max|C| share a class.
/// Approximate by construction; each class value is the best rational
/// approximation of its members' mean with denominator <= 2^24.
template <RealCostFunction F>
CostSpectrum build_spectrum_bruteforce(const F& cost, int n_qubits) {
    detail::check_brute_force_size(n_qubits);
    const std::uint64_t total = std::uint64_t{1} << n_qubits;
    std::vector<double> all;
    all.reserve(total);
    double scale = 0.0;
    for (std::uint64_t i = 0; i < total; ++i) {
        double c = static_cast<double>(cost(Bitstring(i, n_qubits)));
        if (!std::isfinite(c)) throw InputError("cost function returned a non-finite value");
        all.push_back(c);
        scale = std::max(scale, std::fabs(c));
    }
    std::sort(all.begin(), all.end());
    const double tol = 1e-9 * scale;
    std::map<Rational, std::uint64_t> classes;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= all.size(); ++i) {
        if (i == all.size() || all[i] - all[i - 1] > tol) {
            long double mean = 0;
            for (std::size_t k = start; k < i; ++k) mean += all[k];
            mean /= static_cast<long double>(i - start);
            classes[rational_from_double(static_cast<double>(mean))] += i - start;
            start = i;
        }
    }
    return detail::spectrum_from_map(classes, n_qubits);
}

/// Linear overload: enumeration on integer-scaled sums.
inline CostSpectrum build_spectrum_bruteforce(const WeightSet& w) {
    detail::check_brute_force_size(w.size());
    LinearCost cost(w);
    std::map<std::int64_t, std::uint64_t> scaled;
    const std::uint64_t total = std::uint64_t{1} << w.size();
    for (std::uint64_t i = 0; i < total; ++i) ++scaled[cost.scaled(i)];
    std::vector<Rational> values;
    std::vector<std::uint64_t> counts;
    for (const auto& [v, n] : scaled) {
        values.emplace_back(v, cost.scale());
        counts.push_back(n);
    }
    return CostSpectrum(std::move(values), std::move(counts), w.size());
}

/// Largest number of sum offsets the counting table may hold.
inline constexpr std::int64_t kMaxDpRange = std::int64_t{1} << 28;

/// Subset-sum counting over the achievable range of integer-scaled sums.
///
/// O(N * range) time and O(range) memory, where range = sum_i |W_i| * L + 1
/// for the common denominator L. Identical to brute force wherever both run.
inline CostSpectrum build_spectrum_dp(const WeightSet& w) {
    LinearCost cost(w);
    const std::int64_t l = cost.scale();
    std::vector<std::int64_t> scaled;
    std::int64_t lo = 0, hi = 0;
    for (const auto& x : w.weights()) {
        std::int64_t s = x.numerator() * (l / x.denominator());
        scaled.push_back(s);
        (s < 0 ? lo : hi) += s;
        if (hi - lo >= kMaxDpRange) throw CapacityError("subset-sum range too large for the counting table");
    }
    const auto range = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::uint64_t> table(range, 0);
    table[static_cast<std::size_t>(-lo)] = 1;
    // Reachable window [cur_lo, cur_hi] in offset coordinates grows with each weight.
    std::int64_t cur_lo = -lo, cur_hi = -lo;
    for (std::int64_t s : scaled) {
        if (s > 0) {
            for (std::int64_t k = cur_hi; k >= cur_lo; --k) {
                table[static_cast<std::size_t>(k + s)] += table[static_cast<std::size_t>(k)];
            }
            cur_hi += s;
        } else if (s < 0) {
            for (std::int64_t k = cur_lo; k <= cur_hi; ++k) {
                table[static_cast<std::size_t>(k + s)] += table[static_cast<std::size_t>(k)];
            }
            cur_lo += s;
        } else {
            for (std::int64_t k = cur_lo; k <= cur_hi; ++k) table[static_cast<std::size_t>(k)] *= 2;
        }
    }
    std::vector<Rational> values;
    std::vector<std::uint64_t> counts;
    for (std::size_t k = 0; k < range; ++k) {
        if (table[k] != 0) {
            values.emplace_back(static_cast<std::int64_t>(k) + lo, l);
            counts.push_back(table[k]);
        }
    }
    return CostSpectrum(std::move(values), std::move(counts), w.size());
}

/// Standard deviation of the ps-scaled costs over all 2^N assignments.
inline double sigma_scaled(const CostSpectrum& s, double ps) {
    const long double mean = to_long_double(s.c_bar());
    long double acc = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        long double d = to_long_double(s.values()[j]) - mean;
        acc += static_cast<long double>(s.counts()[j]) * d * d;
    }
    acc /= static_cast<long double>(s.dimension());
    return static_cast<double>(std::fabs(static_cast<long double>(ps)) * std::sqrt(acc));
}

/// Cost of the class holding the bitwise inverses: 2 c_bar - c.
inline Rational inverse_cost(const CostSpectrum& s, const Rational& c) { return s.c_bar() * Rational(2) - c; }

/// CSV with header `C,count`, increasing C.
inline void write_spectrum_csv(std::ostream& out, const CostSpectrum& s) {
    out << "C,count\n";
    for (std::size_t j = 0; j < s.size(); ++j) out << to_string(s.values()[j]) << ',' << s.counts()[j] << '\n';
}

}  // namespace ampamp
