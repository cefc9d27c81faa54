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

/// Analytic two-state Grover dynamics with general oracle phase phi and
/// diffusion phase theta.
///
/// In the {|n>, |m>} basis with sin(beta) = sqrt(N_m / 2^N) the iteration
/// G = U_s(theta) U_G(phi) has unit eigenvalues whose relative angle is 2w,
///
///   cos w = cos((phi - theta)/2) - 2 sin(phi/2) sin(theta/2) sin^2(beta),
///
/// and an eigenbasis parametrized by the angle x. Up to the global phase
/// e^{i t (theta+phi)/2},
///
///   <m|G^t|s> = sin(beta) cos(wt)
///             + i (e^{-i phi/2} cos(beta) sin 2x + sin(beta) cos 2x) sin(wt).
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "ampamp/errors.hpp"
#include "ampamp/phase.hpp"

namespace ampamp {

using Matrix2c = std::array<std::array<std::complex<double>, 2>, 2>;

class GroverAnalytic {
   public:
    GroverAnalytic(int n_qubits, std::uint64_t n_marked, double phi, double theta)
        : n_qubits_(n_qubits), n_marked_(n_marked), phi_(phi), theta_(theta) {
        if (n_qubits < 1 || n_qubits > 62) throw InputError("closed form needs 1 <= N <= 62");
        if (n_marked < 1 || n_marked >= (std::uint64_t{1} << n_qubits)) {
            throw InputError("closed form needs 1 <= N_m < 2^N");
        }
        const double s2 = static_cast<double>(n_marked) / std::ldexp(1.0, n_qubits);
        sin_beta_ = std::sqrt(s2);
        cos_beta_ = std::sqrt(1.0 - s2);
        beta_ = std::asin(sin_beta_);

        const double sp = std::sin(phi / 2), cp = std::cos(phi / 2), st = std::sin(theta / 2);
        const double cw = std::cos((phi - theta) / 2) - 2.0 * sp * st * s2;
        w_ = std::acos(std::clamp(cw, -1.0, 1.0));
        const double sin_2b = 2.0 * sin_beta_ * cos_beta_;
        // Both components share the normalizer l_m; only their ratio fixes x.
        const double sx = st * sin_2b;
        const double cx = std::sin(w_) + std::sin((phi - theta) / 2) + 2.0 * cp * st * s2;
        l_m_ = std::hypot(sx, cx);
        if (l_m_ < 1e-14) throw DomainError("degenerate eigenvector normalization (l_m = 0)");
        x_ = std::atan2(sx, cx);

        const std::complex<double> g = std::polar(1.0, (theta + phi) / 2);
        lambda_plus_ = g * std::polar(1.0, w_);
        lambda_minus_ = g * std::polar(1.0, -w_);
    }

    int n_qubits() const { return n_qubits_; }
    std::uint64_t n_marked() const { return n_marked_; }
    double phi() const { return phi_; }
    double theta() const { return theta_; }
    double beta() const { return beta_; }
    double sin_beta() const { return sin_beta_; }
    double cos_beta() const { return cos_beta_; }
    double w() const { return w_; }
    double x() const { return x_; }
    double l_m() const { return l_m_; }
    std::complex<double> lambda_plus() const { return lambda_plus_; }
    std::complex<double> lambda_minus() const { return lambda_minus_; }

    /// G^t in the {|n>, |m>} basis without the global phase e^{i t (theta+phi)/2}.
    Matrix2c g_power(double t) const {
        using C = std::complex<double>;
        const double c = std::cos(w_ * t), s = std::sin(w_ * t);
        const C i(0, 1);
        const C e = std::polar(1.0, phi_ / 2);
        const double c2x = std::cos(2 * x_), s2x = std::sin(2 * x_);
        Matrix2c m;
        m[0][0] = c - i * c2x * s;
        m[0][1] = i * e * s2x * s;
        m[1][0] = i * std::conj(e) * s2x * s;
        m[1][1] = c + i * c2x * s;
        return m;
    }

    std::complex<double> amplitude_m(double t) const {
        if (t < 0) throw InputError("iteration must be non-negative");
        const std::complex<double> i(0, 1);
        const double c = std::cos(w_ * t), s = std::sin(w_ * t);
        return sin_beta_ * c +
               i * (std::polar(1.0, -phi_ / 2) * cos_beta_ * std::sin(2 * x_) + sin_beta_ * std::cos(2 * x_)) * s;
    }

    double probability_m(double t) const { return std::norm(amplitude_m(t)); }

    /// Continuous t in (0, pi/w] maximizing probability_m, before rounding.
    double first_peak_time() const {
        if (w_ < 1e-15) throw DomainError("no dynamics (w = 0)");
        // amp = sin(beta) cos(wt) + a sin(wt), so |amp|^2 = P + Q cos(2wt) + R sin(2wt).
        const std::complex<double> i(0, 1);
        const std::complex<double> a =
            i * (std::polar(1.0, -phi_ / 2) * cos_beta_ * std::sin(2 * x_) + sin_beta_ * std::cos(2 * x_));
        const double q = 0.5 * (sin_beta_ * sin_beta_ - std::norm(a));
        const double r = sin_beta_ * a.real();
        double u = std::atan2(r, q);  // 2wt at the maximum, modulo 2 pi
        if (u <= 0) u += kTwoPi;
        return u / (2 * w_);
    }

    /// Integer iteration at the first maximum of probability_m.
    long first_peak_iteration() const {
        const double t = first_peak_time();
        const long lo = static_cast<long>(std::floor(t));
        const long hi = lo + 1;
        if (lo < 1) return hi;
        return probability_m(static_cast<double>(lo)) >= probability_m(static_cast<double>(hi)) ? lo : hi;
    }

   private:
    int n_qubits_;
    std::uint64_t n_marked_;
    double phi_, theta_;
    double beta_ = 0, sin_beta_ = 0, cos_beta_ = 0;
    double w_ = 0, x_ = 0, l_m_ = 0;
    std::complex<double> lambda_plus_, lambda_minus_;
};

/// Large-2^N peak probability of a single marked state.
inline double p_max(double phi, double theta, int n_qubits) {
    if (n_qubits < 1 || n_qubits > 1023) throw InputError("p_max needs a positive qubit count");
    const double dim = std::ldexp(1.0, n_qubits);
    double den;
    double num = 1.0;
    if (theta == kPi) {
        const double sp = std::sin(phi / 2), cp = std::cos(phi / 2);
        den = sp * sp + dim / 4 * cp * cp;
    } else {
        const double st = std::sin(theta / 2), sd = std::sin((theta - phi) / 2);
        num = 4 * st * st;
        den = dim * sd * sd + 4 * st * std::sin(phi / 2) * std::cos((theta - phi) / 2);
    }
    if (!(std::fabs(den) > 1e-300)) throw DomainError("p_max is singular at these parameters");
    return num / den;
}

/// 2 acos(2 / sqrt(2^N - 4)).
inline double fwhm(int n_qubits) {
    if (n_qubits <= 2) throw DomainError("fwhm is defined for N > 2");
    const double r = 2.0 / std::sqrt(std::ldexp(1.0, n_qubits) - 4.0);
    return 2.0 * std::acos(std::min(r, 1.0));
}

struct ResonancePoint {
    double phi;
    double p;
};

inline std::vector<ResonancePoint> resonance_curve(int n_qubits, double theta, const std::vector<double>& phi_grid) {
    if (phi_grid.empty()) throw InputError("resonance grid is empty");
    std::vector<ResonancePoint> out;
    out.reserve(phi_grid.size());
    for (double phi : phi_grid) out.push_back({phi, p_max(phi, theta, n_qubits)});
    return out;
}

}  // namespace ampamp
