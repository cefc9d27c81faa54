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

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ampamp/errors.hpp"
#include "ampamp/rational.hpp"

namespace ampamp {

/// Weights W_1..W_N of a linear cost function C(Z) = sum_i W_i z_i.
class WeightSet {
   public:
    explicit WeightSet(std::vector<Rational> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) throw InputError("weight set must have at least one weight");
        if (weights_.size() > 63) throw CapacityError("at most 63 weights are supported");
        for (const auto& w : weights_) w_sum_ += w;
    }

    const std::vector<Rational>& weights() const { return weights_; }
    int size() const { return static_cast<int>(weights_.size()); }
    const Rational& operator[](int i) const { return weights_[static_cast<std::size_t>(i)]; }
    const Rational& w_sum() const { return w_sum_; }

    /// N' = N(N+1)/2, the normalizer of the scaled experiment oracle.
    std::int64_t n_prime() const {
        auto n = static_cast<std::int64_t>(weights_.size());
        return n * (n + 1) / 2;
    }

    bool all_integer() const {
        for (const auto& w : weights_) {
            if (!is_integer(w)) return false;
        }
        return true;
    }

    /// Least common multiple of the weight denominators.
    std::int64_t common_denominator() const {
        std::int64_t l = 1;
        for (const auto& w : weights_) l = std::lcm(l, w.denominator());
        return l;
    }

    friend bool operator==(const WeightSet& a, const WeightSet& b) { return a.weights_ == b.weights_; }

   private:
    std::vector<Rational> weights_;
    Rational w_sum_{0};
};

namespace detail {
inline WeightSet from_ints(std::initializer_list<std::int64_t> ws) {
    std::vector<Rational> out;
    out.reserve(ws.size());
    for (auto w : ws) out.emplace_back(w);
    return WeightSet(std::move(out));
}
}  // namespace detail

/// {1, 2, ..., N}.
inline WeightSet weights_w1(int n) {
    if (n < 1) throw InputError("w1 needs N >= 1");
    std::vector<Rational> out;
    for (int i = 1; i <= n; ++i) out.emplace_back(i);
    return WeightSet(std::move(out));
}

/// The 20-weight random integer instance.
inline WeightSet weights_w2() {
    return detail::from_ints({-44, -35, -33, -32, -23, -20, -11, -11, -10, -4,
                              2,   6,   9,   11,  11,  17,  21,  34,  40,  43});
}

/// The random integer instance used at N=40, as printed (41 entries).
inline WeightSet weights_w3() {
    return detail::from_ints({-731, -722, -676, -668, -663, -662, -564, -563, -555, -409,
                              -209, -189, -135, -43,  1,    3,    28,   48,   73,   127,
                              139,  156,  160,  286,  307,  308,  427,  461,  490,  512,
                              548,  551,  568,  583,  589,  642,  776,  917,  929,  948,
                              949});
}

/// Parses {"weights": [...]}; entries are JSON numbers or exact decimal strings.
inline WeightSet weights_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("weights") || !doc.at("weights").is_array()) {
        throw InputError("weight file must be an object with a \"weights\" array");
    }
    std::vector<Rational> out;
    for (const auto& item : doc.at("weights")) {
        if (item.is_number_integer()) {
            out.emplace_back(item.get<std::int64_t>());
        } else if (item.is_number_float()) {
            // dump() yields the shortest text that round-trips, i.e. the decimal the author wrote.
            out.push_back(parse_rational(item.dump()));
        } else if (item.is_string()) {
            out.push_back(parse_rational(item.get<std::string>()));
        } else {
            throw InputError("non-numeric weight: " + item.dump());
        }
    }
    return WeightSet(std::move(out));
}

inline nlohmann::json weights_to_json(const WeightSet& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : w.weights()) {
        if (is_integer(x)) {
            arr.push_back(x.numerator());
        } else {
            arr.push_back(to_string(x));
        }
    }
    return nlohmann::json{{"weights", arr}};
}

inline WeightSet load_weights(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open weight file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("weight file '" + path + "': " + e.what());
    }
    return weights_from_json(doc);
}

/// Resolves "w1:N", "w2", "w3" to the bundled sets, anything else as a file path.
inline WeightSet resolve_weights(std::string_view spec) {
    if (spec == "w2") return weights_w2();
    if (spec == "w3") return weights_w3();
    if (spec.rfind("w1:", 0) == 0) {
        auto n = detail::parse_int64(spec.substr(3), spec);
        if (n < 1 || n > 63) throw InputError("w1:N needs 1 <= N <= 63");
        return weights_w1(static_cast<int>(n));
    }
    return load_weights(std::string(spec));
}

}  // namespace ampamp
