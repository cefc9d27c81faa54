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

/// Explicit 2^N-amplitude simulation used to check the collective path.
///
/// Deliberately shares nothing with collective_sim.hpp beyond the spectrum
/// type: phases are evaluated per basis state in double precision and the
/// diffusion mean runs over all amplitudes.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "ampamp/bitstring.hpp"
#include "ampamp/cost_spectrum.hpp"
#include "ampamp/errors.hpp"

namespace ampamp {

inline constexpr int kMaxReferenceQubits = 12;

/// Per-class probabilities (aligned with `spectrum`) after k iterations of
/// oracle e^{i C(Z) ps} and diffusion U_s(theta) from |s>.
template <class CostFn>
std::vector<double> full_statevector_reference(const CostFn& cost, const CostSpectrum& spectrum, double ps,
                                               double theta, long k) {
    const int n = spectrum.n_qubits();
    if (n > kMaxReferenceQubits) throw CapacityError("statevector reference is limited to 12 qubits");
    if (k < 0) throw InputError("iteration count must be non-negative");
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::complex<double>> psi(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    std::vector<std::complex<double>> phase(dim);
    std::vector<std::size_t> cls(dim);
    for (std::size_t z = 0; z < dim; ++z) {
        Rational c(cost(Bitstring(z, n)));
        phase[z] = std::polar(1.0, to_double(c) * ps);
        auto j = spectrum.index_of(c);
        if (!j) throw InputError("cost function disagrees with spectrum");
        cls[z] = *j;
    }
    const std::complex<double> d = 1.0 - std::polar(1.0, theta);
    for (long it = 0; it < k; ++it) {
        std::complex<double> mean = 0.0;
        for (std::size_t z = 0; z < dim; ++z) {
            psi[z] *= phase[z];
            mean += psi[z];
        }
        mean /= static_cast<double>(dim);
        for (auto& a : psi) a -= d * mean;
    }
    std::vector<double> probs(spectrum.size(), 0.0);
    for (std::size_t z = 0; z < dim; ++z) probs[cls[z]] += std::norm(psi[z]);
    return probs;
}

inline std::vector<double> full_statevector_reference(const WeightSet& w, const CostSpectrum& spectrum, double ps,
                                                      double theta, long k) {
    return full_statevector_reference([&w](const Bitstring& z) { return evaluate_linear(w, z); }, spectrum, ps,
                                      theta, k);
}

}  // namespace ampamp
