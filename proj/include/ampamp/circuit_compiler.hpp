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

/// Experiment circuits over {H, X, P, CX}.
///
/// The multi-controlled phase uses the parity expansion
///
///   2^{n-1} (z_1 AND ... AND z_n) = sum_{S nonempty} (-1)^{|S|-1} XOR_{i in S} z_i,
///
/// so a phase theta on |1...1> is a product of V = P(theta / 2^{n-1}) or
/// V^dagger applied to every parity XOR_S. Subsets are grouped by their
/// highest qubit m; block U_m accumulates the parities on q_m and walks the
/// lower qubits in Gray order so consecutive parities differ by one CX.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ampamp/circuit.hpp"
#include "ampamp/errors.hpp"
#include "ampamp/phase.hpp"
#include "ampamp/weight_set.hpp"

namespace ampamp {

/// Reflected binary codes; code text[i] is the i-th bit from the left.
struct GraySequence {
    int n_bits = 0;
    std::vector<std::string> codes;
};

/// G_1 = (0, 1); G_{n+1} = (0 G_n, 1 reverse(G_n)).
inline GraySequence gray_sequence(int n) {
    if (n < 1) throw InputError("gray sequence needs n >= 1");
    if (n > 24) throw CapacityError("gray sequence is limited to 24 bits");
    std::vector<std::string> codes{"0", "1"};
    for (int k = 1; k < n; ++k) {
        std::vector<std::string> next;
        next.reserve(codes.size() * 2);
        for (const auto& c : codes) next.push_back("0" + c);
        for (auto it = codes.rbegin(); it != codes.rend(); ++it) next.push_back("1" + *it);
        codes = std::move(next);
    }
    return {n, std::move(codes)};
}

/// Phase theta on |1...1> of qubits 0..n-1, target qubit n-1; 2^n - 2 CX gates.
inline Circuit compile_mcp(int n_qubits, double theta) {
    if (n_qubits < 1) throw InputError("multi-controlled phase needs at least one qubit");
    if (n_qubits > 24) throw CapacityError("multi-controlled phase is limited to 24 qubits");
    Circuit c(n_qubits);
    const double v = theta / std::ldexp(1.0, n_qubits - 1);
    c.p(0, v);
    for (int m = 2; m <= n_qubits; ++m) {
        const int target = m - 1;
        const auto lower = gray_sequence(m - 1).codes;
        std::string held(static_cast<std::size_t>(m - 1), '0');
        for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
            const std::string& code = *it;
            for (int q = 0; q < m - 1; ++q) {
                if (code[static_cast<std::size_t>(q)] != held[static_cast<std::size_t>(q)]) c.cx(q, target);
            }
            held = code;
            const auto controls = std::count(code.begin(), code.end(), '1');
            c.p(target, controls % 2 == 1 ? -v : v);
        }
    }
    return c;
}

inline Circuit compile_diffusion(int n_qubits, double theta) {
    Circuit c(n_qubits);
    for (int q = 0; q < n_qubits; ++q) c.h(q);
    for (int q = 0; q < n_qubits; ++q) c.x(q);
    c.append(compile_mcp(n_qubits, theta));
    for (int q = 0; q < n_qubits; ++q) c.x(q);
    for (int q = 0; q < n_qubits; ++q) c.h(q);
    return c;
}

/// One P per qubit: angle W_i ps, or W_i pi ps / N' when `scaled`.
inline Circuit compile_cost_oracle_linear(const WeightSet& w, double ps, bool scaled) {
    Circuit c(w.size());
    const double factor = scaled ? kPi * ps / static_cast<double>(w.n_prime()) : ps;
    for (int i = 0; i < w.size(); ++i) c.p(i, to_double(w[i]) * factor);
    return c;
}

inline Circuit hadamard_layer(int n_qubits) {
    Circuit c(n_qubits);
    for (int q = 0; q < n_qubits; ++q) c.h(q);
    return c;
}

/// Experiment 1: vary ps at theta = pi. Experiment 2: ps = 1, vary theta.
/// Experiment 3: marked all-ones state with phi = pi, vary theta.
inline Circuit compile_experiment(int kind, int n_qubits, double parameter) {
    if (n_qubits < 2) throw InputError("experiment circuits need at least two qubits");
    Circuit c = hadamard_layer(n_qubits);
    switch (kind) {
        case 1:
            c.append(compile_cost_oracle_linear(weights_w1(n_qubits), parameter, true));
            c.append(compile_diffusion(n_qubits, kPi));
            break;
        case 2:
            c.append(compile_cost_oracle_linear(weights_w1(n_qubits), 1.0, true));
            c.append(compile_diffusion(n_qubits, parameter));
            break;
        case 3:
            c.append(compile_mcp(n_qubits, kPi));
            c.append(compile_diffusion(n_qubits, parameter));
            break;
        default: throw InputError("unknown experiment kind " + std::to_string(kind));
    }
    return c;
}

inline nlohmann::json circuit_metrics(const Circuit& c) {
    return {{"depth", circuit_depth(c)},
            {"two_qubit_gates", two_qubit_count(c)},
            {"total_gates", c.size()},
            {"width", c.width()}};
}

}  // namespace ampamp
