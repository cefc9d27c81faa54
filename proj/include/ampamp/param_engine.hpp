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
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include "ampamp/collective_sim.hpp"
#include "ampamp/cost_spectrum.hpp"
#include "ampamp/errors.hpp"
#include "ampamp/grover_closed_form.hpp"
#include "ampamp/phase.hpp"

namespace ampamp {

/// Sign of the phase scale; Auto picks whichever makes ps positive.
enum class PsSign { Auto, Plus, Minus };

/// ps = +-pi / (c_bar - c), kept as an exact multiple of pi.
inline PhaseScale ps_for_target(const CostSpectrum& s, const Rational& c, PsSign sign = PsSign::Auto) {
    const Rational gap = s.c_bar() - c;
    if (gap == Rational(0)) throw DomainError("target equals the mean cost; the phase scale is undefined");
    Rational m = Rational(1) / gap;
    if (sign == PsSign::Minus || (sign == PsSign::Auto && m < Rational(0))) m = -m;
    return PhaseScale::pi_times(m);
}

/// ceil(2.5 * pi/4 * sqrt(2^N)).
inline long default_k_cap(int n_qubits) {
    return static_cast<long>(std::ceil(2.5 * kPi / 4 * std::sqrt(std::ldexp(1.0, n_qubits))));
}

/// n points from a to b with both endpoints included.
inline std::vector<double> linear_grid(double a, double b, int n) {
    if (n < 1) throw InputError("grid needs at least one point");
    std::vector<double> g(static_cast<std::size_t>(n));
    if (n == 1) {
        g[0] = a;
        return g;
    }
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    g.back() = b;
    return g;
}

/// Evaluates f(0..n-1) on up to `jobs` threads; results keep input order.
template <class F>
auto parallel_map(std::size_t n, int jobs, F f) -> std::vector<decltype(f(std::size_t{0}))> {
    using R = decltype(f(std::size_t{0}));
    std::vector<std::optional<R>> slots(n);
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(body);
    }
    if (error) std::rethrow_exception(error);
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// round(pi/4 sqrt(2^N / N_m)), replaced by the closed-form argmax when the two differ by one.
inline long grover_k_reference(int n_qubits, std::uint64_t n_marked) {
    const double k = kPi / 4 * std::sqrt(std::ldexp(1.0, n_qubits) / static_cast<double>(n_marked));
    const long rounded = std::max(1L, std::lround(k));
    const long exact = GroverAnalytic(n_qubits, n_marked, kPi, kPi).first_peak_iteration();
    return std::labs(exact - rounded) == 1 ? exact : rounded;
}

struct SweepRow {
    double ps;
    Rational target;
    double peak_prob;
    long k_peak;
};

/// First joint peak for every (ps, target) pair, ps-major.
inline std::vector<SweepRow> ps_sweep(const CostSpectrum& s, const std::vector<Rational>& targets,
                                      const std::vector<double>& ps_grid, double theta, long k_cap, int jobs = 1) {
    if (ps_grid.empty()) throw InputError("ps grid is empty");
    if (targets.empty()) throw InputError("no sweep targets");
    std::vector<ClassSelector> sel;
    for (const auto& t : targets) sel.push_back(joint_selector(s, t));
    return parallel_map(ps_grid.size() * targets.size(), jobs, [&](std::size_t i) {
        const std::size_t g = i / targets.size(), t = i % targets.size();
        auto oracle = OracleSpec::cost(s, PhaseScale::radians(ps_grid[g]));
        Peak p = run_to_first_peak(oracle, theta, sel[t], k_cap);
        return SweepRow{ps_grid[g], targets[t], p.p, p.k};
    });
}

/// Same as ps_sweep with exact pi-rational phase scales.
inline std::vector<SweepRow> ps_sweep_exact(const CostSpectrum& s, const Rational& target,
                                            const std::vector<PhaseScale>& ps_grid, double theta, long k_cap,
                                            int jobs = 1) {
    auto sel = joint_selector(s, target);
    return parallel_map(ps_grid.size(), jobs, [&](std::size_t i) {
        Peak p = run_to_first_peak(OracleSpec::cost(s, ps_grid[i]), theta, sel, k_cap);
        return SweepRow{ps_grid[i].value(), target, p.p, p.k};
    });
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    auto old = out.precision(17);
    out << "ps,target,peak_prob,k_peak\n";
    for (const auto& r : rows) out << r.ps << ',' << to_string(r.target) << ',' << r.peak_prob << ',' << r.k_peak << '\n';
    out.precision(old);
}

struct ScanRow {
    Rational c;
    std::uint64_t count;
    bool skipped;
    double ps;
    double sigma_ps;
    double peak_prob;
    long k_peak;
    bool peak_found = true;
};

struct GroverRef {
    std::uint64_t n_marked;
    long k_grover;
};

struct ScanResult {
    std::vector<ScanRow> per_class;
    std::vector<GroverRef> grover_refs;
};

/// Per-class resonance: ps from the target formula, run to the first joint peak.
/// `only` restricts the scan to the listed classes.
inline ScanResult spectrum_scan(const CostSpectrum& s, double theta, long k_cap, int jobs = 1,
                                const std::vector<Rational>& only = {}) {
    std::vector<std::size_t> classes;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (only.empty() || std::find(only.begin(), only.end(), s.values()[j]) != only.end()) classes.push_back(j);
    }
    ScanResult res;
    res.per_class = parallel_map(classes.size(), jobs, [&](std::size_t i) {
        const std::size_t j = classes[i];
        const Rational& c = s.values()[j];
        ScanRow row{c, s.counts()[j], false, 0.0, 0.0, 0.0, 0, true};
        if (c == s.c_bar()) {
            row.skipped = true;
            return row;
        }
        PhaseScale ps = ps_for_target(s, c);
        row.ps = ps.value();
        row.sigma_ps = sigma_scaled(s, ps.value());
        try {
            Peak p = run_to_first_peak(OracleSpec::cost(s, ps), theta, joint_selector(s, c), k_cap);
            row.peak_prob = p.p;
            row.k_peak = p.k;
        } catch (const NotFoundError&) {
            row.peak_found = false;
        }
        return row;
    });
    std::map<std::uint64_t, long> refs;
    const std::uint64_t dim_cap = s.n_qubits() >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.n_qubits());
    for (const auto& row : res.per_class) {
        if (row.skipped) continue;
        const std::uint64_t joint = row.count + s.count_of(inverse_cost(s, row.c));
        if (joint < dim_cap && !refs.contains(joint)) refs[joint] = grover_k_reference(s.n_qubits(), joint);
    }
    for (const auto& [m, k] : refs) res.grover_refs.push_back({m, k});
    return res;
}

/// `C,count,ps,sigma_ps,peak_prob,k_peak`; skipped classes leave the last four fields empty and
/// classes without a peak inside k_cap leave the last two empty.
inline void write_scan_csv(std::ostream& out, const ScanResult& r) {
    auto old = out.precision(17);
    out << "C,count,ps,sigma_ps,peak_prob,k_peak\n";
    for (const auto& row : r.per_class) {
        out << to_string(row.c) << ',' << row.count << ',';
        if (row.skipped) {
            out << ",,,\n";
        } else {
            out << row.ps << ',' << row.sigma_ps << ',';
            if (row.peak_found) {
                out << row.peak_prob << ',' << row.k_peak << '\n';
            } else {
                out << ",\n";
            }
        }
    }
    out.precision(old);
}

}  // namespace ampamp
