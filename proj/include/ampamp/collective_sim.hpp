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

/// Amplitude amplification in the collective-state basis.
///
/// Every basis state sharing a cost value keeps an identical amplitude
/// through oracle and diffusion, so the 2^N-dimensional state collapses to one
/// amplitude per cost class. A run over D classes costs O(D) per iteration
/// regardless of N, which is what makes 40-qubit instances tractable.
#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "ampamp/cost_spectrum.hpp"
#include "ampamp/errors.hpp"
#include "ampamp/phase.hpp"

namespace ampamp {

using Complex = std::complex<double>;

enum class OracleKind { Grover, Cost };

/// Either U_G(phi) marking N_m states or U_C(ps) over a cost spectrum.
///
/// The Grover form is stored as the two-class spectrum {0: N_n, 1: N_m} with
/// ps = phi, so both oracles share one code path.
class OracleSpec {
   public:
    static OracleSpec grover(int n_qubits, std::uint64_t n_marked, double phi) {
        if (n_qubits < 1 || n_qubits > 62) throw InputError("grover oracle needs 1 <= N <= 62");
        const std::uint64_t total = std::uint64_t{1} << n_qubits;
        if (n_marked < 1 || n_marked >= total) throw InputError("grover oracle needs 1 <= N_m < 2^N");
        OracleSpec o;
        o.kind_ = OracleKind::Grover;
        o.spectrum_ = std::make_shared<const CostSpectrum>(
            std::vector<Rational>{Rational(0), Rational(1)}, std::vector<std::uint64_t>{total - n_marked, n_marked},
            n_qubits);
        o.ps_ = PhaseScale::radians(phi);
        return o;
    }

    static OracleSpec cost(CostSpectrum spectrum, PhaseScale ps) {
        OracleSpec o;
        o.kind_ = OracleKind::Cost;
        o.spectrum_ = std::make_shared<const CostSpectrum>(std::move(spectrum));
        o.ps_ = ps;
        return o;
    }

    OracleKind kind() const { return kind_; }
    const CostSpectrum& spectrum() const { return *spectrum_; }
    const std::shared_ptr<const CostSpectrum>& spectrum_ptr() const { return spectrum_; }
    const PhaseScale& phase_scale() const { return ps_; }
    int n_qubits() const { return spectrum_->n_qubits(); }

    /// Per-class factors e^{i C_j ps}.
    std::vector<Complex> phase_factors() const {
        std::vector<Complex> f;
        f.reserve(spectrum_->size());
        for (const auto& c : spectrum_->values()) f.push_back(ps_.factor_of(c));
        return f;
    }

   private:
    OracleSpec() = default;
    OracleKind kind_ = OracleKind::Cost;
    std::shared_ptr<const CostSpectrum> spectrum_;
    PhaseScale ps_;
};

/// One amplitude per cost class; class j stands for N_j basis states.
class CollectiveState {
   public:
    CollectiveState(std::shared_ptr<const CostSpectrum> spectrum, std::vector<Complex> amps)
        : spectrum_(std::move(spectrum)), amps_(std::move(amps)) {
        if (!spectrum_ || amps_.size() != spectrum_->size()) throw InputError("amplitude count must match classes");
    }

    const std::vector<Complex>& amps() const { return amps_; }
    std::vector<Complex>& amps() { return amps_; }
    const std::vector<std::uint64_t>& counts() const { return spectrum_->counts(); }
    const CostSpectrum& spectrum() const { return *spectrum_; }
    const std::shared_ptr<const CostSpectrum>& spectrum_ptr() const { return spectrum_; }
    int n_qubits() const { return spectrum_->n_qubits(); }
    std::size_t size() const { return amps_.size(); }

    /// N_j |alpha_j|^2.
    double class_probability(std::size_t j) const {
        return static_cast<double>(counts()[j]) * std::norm(amps_[j]);
    }

    std::vector<double> class_probabilities() const {
        std::vector<double> p(amps_.size());
        for (std::size_t j = 0; j < amps_.size(); ++j) p[j] = class_probability(j);
        return p;
    }

    double norm() const {
        long double s = 0;
        for (std::size_t j = 0; j < amps_.size(); ++j) s += class_probability(j);
        return static_cast<double>(s);
    }

   private:
    std::shared_ptr<const CostSpectrum> spectrum_;
    std::vector<Complex> amps_;
};

/// |s>: every class amplitude 1/sqrt(2^N).
inline CollectiveState init_superposition(std::shared_ptr<const CostSpectrum> spectrum) {
    const double a = 1.0 / std::sqrt(spectrum->dimension());
    std::vector<Complex> amps(spectrum->size(), Complex(a, 0.0));
    return CollectiveState(std::move(spectrum), std::move(amps));
}

inline CollectiveState init_superposition(const CostSpectrum& spectrum) {
    return init_superposition(std::make_shared<const CostSpectrum>(spectrum));
}

inline CollectiveState init_superposition(const OracleSpec& oracle) {
    return init_superposition(oracle.spectrum_ptr());
}

namespace detail {
inline void check_dimensions(const CollectiveState& state, const OracleSpec& oracle) {
    if (state.n_qubits() != oracle.n_qubits() || state.size() != oracle.spectrum().size()) {
        throw InputError("oracle and state dimensions differ");
    }
}
}  // namespace detail

/// alpha_j <- alpha_j e^{i C_j ps}.
inline CollectiveState apply_oracle(CollectiveState state, const OracleSpec& oracle) {
    detail::check_dimensions(state, oracle);
    const auto& values = oracle.spectrum().values();
    for (std::size_t j = 0; j < state.size(); ++j) state.amps()[j] *= oracle.phase_scale().factor_of(values[j]);
    return state;
}

/// (1/2^N) sum_j N_j alpha_j.
inline Complex mean_amplitude(const CollectiveState& state) {
    long double re = 0, im = 0;
    const auto& counts = state.counts();
    for (std::size_t j = 0; j < state.size(); ++j) {
        const auto n = static_cast<long double>(counts[j]);
        re += n * state.amps()[j].real();
        im += n * state.amps()[j].imag();
    }
    const long double dim = static_cast<long double>(state.spectrum().dimension());
    return {static_cast<double>(re / dim), static_cast<double>(im / dim)};
}

/// alpha_j <- alpha_j - (1 - e^{i theta}) mean.
inline CollectiveState apply_diffusion(CollectiveState state, double theta) {
    const Complex shift = (1.0 - std::polar(1.0, theta)) * mean_amplitude(state);
    for (auto& a : state.amps()) a -= shift;
    return state;
}

/// Mutable stepper that applies oracle + diffusion in place with per-class
/// phase factors computed once.
class Amplifier {
   public:
    Amplifier(const OracleSpec& oracle, double theta)
        : state_(init_superposition(oracle)),
          factors_(oracle.phase_factors()),
          diffusion_(1.0 - std::polar(1.0, theta)) {
        weights_.reserve(state_.size());
        const double dim = state_.spectrum().dimension();
        for (auto n : state_.counts()) weights_.push_back(static_cast<double>(n) / dim);
        last_mean_ = mean_amplitude(state_);
    }

    /// One oracle + diffusion pair.
    void step() {
        auto& a = state_.amps();
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            a[j] *= factors_[j];
            re += weights_[j] * a[j].real();
            im += weights_[j] * a[j].imag();
        }
        last_mean_ = Complex(re, im);
        const Complex shift = diffusion_ * last_mean_;
        for (auto& x : a) x -= shift;
        ++k_;
    }

    const CollectiveState& state() const { return state_; }
    /// Mean amplitude that fed the latest diffusion (of |s> before any step).
    Complex last_mean() const { return last_mean_; }
    long iteration() const { return k_; }

   private:
    CollectiveState state_;
    std::vector<Complex> factors_;
    std::vector<double> weights_;
    Complex diffusion_;
    Complex last_mean_;
    long k_ = 0;
};

struct IterationRecord {
    long k = 0;
    std::vector<double> class_probs;
    std::vector<Complex> amps;
    /// Mean amplitude entering the k-th diffusion; for k = 0 the mean of |s>.
    Complex mean_amp;
};

struct SimulationTrace {
    OracleSpec oracle;
    double theta = 0.0;
    long k_max = 0;
    std::vector<IterationRecord> per_iteration;

    const CostSpectrum& spectrum() const { return oracle.spectrum(); }
};

/// Iterates oracle then diffusion from |s>, recording k = 0..k_max.
inline SimulationTrace run(const OracleSpec& oracle, double theta, long k_max) {
    if (k_max < 0) throw InputError("k_max must be non-negative");
    SimulationTrace trace{oracle, theta, k_max, {}};
    trace.per_iteration.reserve(static_cast<std::size_t>(k_max) + 1);
    Amplifier amp(oracle, theta);
    auto record = [&] {
        trace.per_iteration.push_back(
            {amp.iteration(), amp.state().class_probabilities(), amp.state().amps(), amp.last_mean()});
    };
    record();
    for (long k = 1; k <= k_max; ++k) {
        amp.step();
        record();
    }
    return trace;
}

/// Class indices whose probabilities are summed into one target series.
struct ClassSelector {
    std::vector<std::size_t> classes;

    double probability(const CollectiveState& s) const {
        double p = 0.0;
        for (auto j : classes) p += s.class_probability(j);
        return p;
    }

    double probability(std::span<const double> class_probs) const {
        double p = 0.0;
        for (auto j : classes) p += class_probs[j];
        return p;
    }
};

inline ClassSelector class_selector(const CostSpectrum& s, const Rational& c) {
    auto j = s.index_of(c);
    if (!j) throw DomainError("cost value " + to_string(c) + " is not in the spectrum");
    return {{*j}};
}

/// Class c together with its inverse-pair class 2 c_bar - c (counted once if equal).
inline ClassSelector joint_selector(const CostSpectrum& s, const Rational& c) {
    auto sel = class_selector(s, c);
    auto inv = s.index_of(inverse_cost(s, c));
    if (inv && *inv != sel.classes.front()) sel.classes.push_back(*inv);
    return sel;
}

inline double joint_target_probability(const SimulationTrace& trace, const CostSpectrum& spectrum, const Rational& c,
                                       long k) {
    if (k < 0 || k >= static_cast<long>(trace.per_iteration.size())) throw InputError("iteration outside trace");
    return joint_selector(spectrum, c).probability(trace.per_iteration[static_cast<std::size_t>(k)].class_probs);
}

inline double joint_target_probability(const SimulationTrace& trace, const Rational& c, long k) {
    return joint_target_probability(trace, trace.spectrum(), c, k);
}

struct Peak {
    long k = 0;
    double p = 0.0;
};

/// Smallest interior k with p(k) >= p(k-1) and p(k) >= p(k+1).
inline Peak first_peak(std::span<const double> series) {
    for (std::size_t k = 1; k + 1 < series.size(); ++k) {
        if (series[k] >= series[k - 1] && series[k] >= series[k + 1]) return {static_cast<long>(k), series[k]};
    }
    throw NotFoundError("no interior peak within the trace");
}

inline std::vector<double> target_series(const SimulationTrace& trace, const ClassSelector& sel) {
    std::vector<double> out;
    out.reserve(trace.per_iteration.size());
    for (const auto& r : trace.per_iteration) out.push_back(sel.probability(r.class_probs));
    return out;
}

inline Peak first_peak(const SimulationTrace& trace, const ClassSelector& sel) {
    return first_peak(target_series(trace, sel));
}

/// Streams iterations until the selected probability first peaks, keeping
/// only three samples; needed where k runs to ~10^6.
inline Peak run_to_first_peak(const OracleSpec& oracle, double theta, const ClassSelector& sel, long k_cap) {
    Amplifier amp(oracle, theta);
    double prev2 = sel.probability(amp.state());
    if (k_cap < 2) throw NotFoundError("k cap too small to contain an interior peak");
    amp.step();
    double prev1 = sel.probability(amp.state());
    for (long k = 2; k <= k_cap; ++k) {
        amp.step();
        double cur = sel.probability(amp.state());
        if (prev1 >= prev2 && prev1 >= cur) return {k - 1, prev1};
        prev2 = prev1;
        prev1 = cur;
    }
    throw NotFoundError("no peak within " + std::to_string(k_cap) + " iterations");
}

/// `k,C,count,prob` rows for every iteration and class.
inline void write_trace_csv(std::ostream& out, const SimulationTrace& trace) {
    const auto& s = trace.spectrum();
    auto old = out.precision(17);
    out << "k,C,count,prob\n";
    for (const auto& r : trace.per_iteration) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            out << r.k << ',' << to_string(s.values()[j]) << ',' << s.counts()[j] << ',' << r.class_probs[j] << '\n';
        }
    }
    out.precision(old);
}

/// Complex-plane rows `k,C,count,re_alpha,im_alpha,re_mean,im_mean`.
inline void export_complex_plane(std::ostream& out, const SimulationTrace& trace) {
    const auto& s = trace.spectrum();
    auto old = out.precision(17);
    out << "k,C,count,re_alpha,im_alpha,re_mean,im_mean\n";
    for (const auto& r : trace.per_iteration) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            out << r.k << ',' << to_string(s.values()[j]) << ',' << s.counts()[j] << ',' << r.amps[j].real() << ','
                << r.amps[j].imag() << ',' << r.mean_amp.real() << ',' << r.mean_amp.imag() << '\n';
        }
    }
    out.precision(old);
}

}  // namespace ampamp
