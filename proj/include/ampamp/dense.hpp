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

/// Dense-matrix checks for compiled circuits. Qubit q is bit q of the basis index.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

#include "ampamp/circuit.hpp"
#include "ampamp/errors.hpp"

namespace ampamp {

inline constexpr int kMaxUnitaryQubits = 10;
inline constexpr int kMaxDenseStateQubits = 20;

namespace detail {

/// Applies one gate to every column of `m` (a single column for a state vector).
template <class Mat>
void apply_gate(Mat& m, const Gate& g) {
    const Eigen::Index dim = m.rows();
    const Eigen::Index b0 = Eigen::Index{1} << g.q0;
    switch (g.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for (Eigen::Index i = 0; i < dim; ++i) {
                if (i & b0) continue;
                auto a = m.row(i).eval();
                auto b = m.row(i | b0).eval();
                m.row(i) = r * (a + b);
                m.row(i | b0) = r * (a - b);
            }
            break;
        }
        case GateKind::X:
            for (Eigen::Index i = 0; i < dim; ++i) {
                if (!(i & b0)) m.row(i).swap(m.row(i | b0));
            }
            break;
        case GateKind::P: {
            const std::complex<double> f = std::polar(1.0, g.angle);
            for (Eigen::Index i = 0; i < dim; ++i) {
                if (i & b0) m.row(i) *= f;
            }
            break;
        }
        case GateKind::CX: {
            const Eigen::Index bt = Eigen::Index{1} << g.q1;
            for (Eigen::Index i = 0; i < dim; ++i) {
                if ((i & b0) && !(i & bt)) m.row(i).swap(m.row(i | bt));
            }
            break;
        }
    }
}

}  // namespace detail

inline Eigen::MatrixXcd unitary_of_circuit(const Circuit& c) {
    if (c.width() > kMaxUnitaryQubits) throw CapacityError("dense unitary is limited to 10 qubits");
    const Eigen::Index dim = Eigen::Index{1} << c.width();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& g : c.gates()) detail::apply_gate(u, g);
    return u;
}

/// Final state of the circuit applied to |0...0> (or `initial` when given).
inline Eigen::VectorXcd simulate_statevector(const Circuit& c, const Eigen::VectorXcd* initial = nullptr) {
    if (c.width() > kMaxDenseStateQubits) throw CapacityError("dense statevector is limited to 20 qubits");
    const Eigen::Index dim = Eigen::Index{1} << c.width();
    Eigen::VectorXcd psi;
    if (initial) {
        if (initial->size() != dim) throw InputError("initial state has the wrong dimension");
        psi = *initial;
    } else {
        psi = Eigen::VectorXcd::Zero(dim);
        psi(0) = 1.0;
    }
    for (const auto& g : c.gates()) detail::apply_gate(psi, g);
    return psi;
}

/// max |U - e^{i g} V| entrywise, with g chosen to align the two matrices.
inline double deviation_up_to_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) throw InputError("matrix shapes differ");
    const std::complex<double> overlap = (v.adjoint() * u).trace();
    const std::complex<double> g = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
    return (u - g * v).cwiseAbs().maxCoeff();
}

/// Deviation of the circuit unitary from diag(e^{i phases[z]}), up to global phase.
inline double verify_diagonal_phase(const Circuit& c, const std::vector<double>& phases) {
    const Eigen::MatrixXcd u = unitary_of_circuit(c);
    if (static_cast<Eigen::Index>(phases.size()) != u.rows()) throw InputError("phase list has the wrong length");
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(u.rows(), u.cols());
    for (Eigen::Index z = 0; z < u.rows(); ++z) d(z, z) = std::polar(1.0, phases[static_cast<std::size_t>(z)]);
    return deviation_up_to_global_phase(u, d);
}

}  // namespace ampamp
