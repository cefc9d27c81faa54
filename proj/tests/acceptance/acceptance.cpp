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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ampamp/ampamp.hpp"
#include "ampamp/statevector_reference.hpp"

namespace {

using namespace ampamp;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

WeightSet random_integer_weights(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> wd(lo, hi);
    std::vector<Rational> ws;
    for (int i = 0; i < n; ++i) ws.emplace_back(wd(rng));
    return WeightSet(ws);
}

Outcome oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> ps_d(-1.5, 1.5), th_d(0.0, kTwoPi);
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        auto w = random_integer_weights(rng, n, -20, 20);
        auto s = build_spectrum_bruteforce(w);
        const double ps = ps_d(rng), theta = th_d(rng);
        const long k = static_cast<long>(rng() % 51);
        auto trace = run(OracleSpec::cost(s, PhaseScale::radians(ps)), theta, k);
        auto ref = full_statevector_reference(w, s, ps, theta, k);
        const auto& got = trace.per_iteration.back().class_probs;
        for (std::size_t j = 0; j < ref.size(); ++j) worst = std::max(worst, std::abs(got[j] - ref[j]));
    }
    const double dt = seconds_since(t0);
    return {worst <= 1e-9 && dt < 60, "max |dP| = " + fmt("%.3g", worst) + ", " + fmt("%.1f", dt) + " s"};
}

Outcome closed_form_crosscheck() {
    std::mt19937_64 rng(2002);
    std::uniform_real_distribution<double> ang(0.05, kTwoPi - 0.05);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const std::uint64_t m = 1 + rng() % ((std::uint64_t{1} << n) - 1);
        const double phi = ang(rng), theta = ang(rng);
        GroverAnalytic g(n, m, phi, theta);
        auto trace = run(OracleSpec::grover(n, m, phi), theta, 200);
        for (int t = 0; t <= 200; ++t) {
            worst = std::max(worst,
                             std::abs(trace.per_iteration[static_cast<std::size_t>(t)].class_probs[1] - g.probability_m(t)));
        }
    }
    return {worst <= 1e-9, "max |dP| = " + fmt("%.3g", worst)};
}

Outcome grover_anchor() {
    auto trace = run(OracleSpec::grover(2, 1, kPi), kPi, 1);
    const double sim = trace.per_iteration[1].class_probs[1];
    const double theory = theory_probabilities(ExperimentSpec::standard(3, 2), kPi)[3];
    const bool ok = std::abs(sim - 1.0) <= 1e-12 && std::abs(theory - 1.0) <= 1e-12;
    return {ok, "simulator " + fmt("%.15f", sim) + ", theory " + fmt("%.15f", theory)};
}

Peak w1_target2_peak(int n) {
    auto s = build_spectrum_dp(weights_w1(n));
    const Rational target(2);
    return run_to_first_peak(OracleSpec::cost(s, ps_for_target(s, target)), kPi, joint_selector(s, target),
                             default_k_cap(n));
}

Outcome fig4_scaled() {
    std::ostringstream d;
    bool ok = true;
    const Peak p10 = w1_target2_peak(10);
    const Peak p20 = w1_target2_peak(20);
    ok &= p10.p > 0.85;
    ok &= p20.p > p10.p;
    d << "N=10 p=" << fmt("%.4f", p10.p) << " (k=" << p10.k << ", need > 0.85); N=20 p=" << fmt("%.4f", p20.p)
      << " (k=" << p20.k << ", need > N=10)";
    const auto t0 = std::chrono::steady_clock::now();
    int big = 40;
    Peak pb = w1_target2_peak(40);
    const double dt = seconds_since(t0);
    if (dt > 600) {
        big = 30;
        pb = w1_target2_peak(30);
    }
    const double ratio = static_cast<double>(pb.k) / static_cast<double>(grover_k_reference(big, 2));
    ok &= pb.p > 0.99;
    ok &= ratio <= 1.10;
    d << "; N=" << big << " p=" << fmt("%.4f", pb.p) << " (need > 0.99), k=" << pb.k
      << " k/k_grover=" << fmt("%.4f", ratio) << " (need <= 1.10), N=40 run " << fmt("%.1f", dt) << " s";
    return {ok, d.str()};
}

Outcome fig2_reproduction() {
    auto s = build_spectrum_dp(weights_w2());
    const long k_cap = default_k_cap(20);
    bool ok = true;
    double worst_p = 1.0;
    int worst_offset = 0, targets = 0;
    for (int t = -222; t <= -209; ++t) {
        const Rational target(t);
        const auto j = s.index_of(target);
        if (!j || s.counts()[*j] == 0) continue;
        ++targets;
        const PhaseScale star = ps_for_target(s, target);
        const double p_star = ps_sweep_exact(s, target, {star}, kPi, k_cap)[0].peak_prob;
        auto grid = linear_grid(star.value() * 0.98, star.value() * 1.02, 41);
        auto rows = ps_sweep(s, {target}, grid, kPi, k_cap);
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].peak_prob > rows[best].peak_prob) best = i;
        }
        const int offset = static_cast<int>(best) - 20;
        ok &= p_star >= 0.55 && std::abs(offset) <= 1;
        worst_p = std::min(worst_p, p_star);
        if (std::abs(offset) > std::abs(worst_offset)) worst_offset = offset;
    }
    ok &= targets > 0;
    return {ok, std::to_string(targets) + " targets, min peak " + fmt("%.4f", worst_p) +
                    ", worst argmax offset " + std::to_string(worst_offset) + " steps"};
}

Outcome fwhm_law() {
    bool ok = true;
    double worst = 0;
    for (int n : {6, 8, 10, 12, 14, 16}) {
        auto f = [n](double phi) { return p_max(phi, kPi, n) - 0.5; };
        boost::math::tools::eps_tolerance<double> tol(50);
        std::uintmax_t it = 200;
        auto left = boost::math::tools::toms748_solve(f, 1e-9, kPi, tol, it);
        it = 200;
        auto right = boost::math::tools::toms748_solve(f, kPi, kTwoPi - 1e-9, tol, it);
        const double width = (right.first + right.second) / 2 - (left.first + left.second) / 2;
        const double err = std::abs(width - fwhm(n));
        worst = std::max(worst, err);
        ok &= err <= 1e-6;
    }
    return {ok, "max |numeric width - fwhm(N)| = " + fmt("%.6g", worst)};
}

Outcome compiler_correctness() {
    std::mt19937_64 rng(7007);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    double worst = 0;
    bool counts_ok = true;
    for (int n = 1; n <= 8; ++n) {
        for (int t = 0; t < 20; ++t) {
            const double theta = ang(rng);
            std::vector<double> phases(std::size_t{1} << n, 0.0);
            phases.back() = theta;
            auto c = compile_mcp(n, theta);
            worst = std::max(worst, verify_diagonal_phase(c, phases));
            counts_ok &= two_qubit_count(c) == (n == 1 ? 0 : (1 << n) - 2);
        }
    }
    bool gray_ok = true;
    for (int n = 1; n <= 12; ++n) {
        auto g = gray_sequence(n);
        for (std::size_t i = 1; i < g.codes.size(); ++i) {
            int diff = 0;
            for (std::size_t b = 0; b < g.codes[i].size(); ++b) diff += g.codes[i][b] != g.codes[i - 1][b];
            gray_ok &= diff == 1;
        }
    }
    const int exp1 = two_qubit_count(compile_experiment(1, 2, 1.0));
    const bool ok = worst <= 1e-10 && counts_ok && gray_ok && exp1 == 2;
    return {ok, "max unitary deviation " + fmt("%.3g", worst) + ", CX law " + (counts_ok ? "ok" : "broken") +
                    ", Gray " + (gray_ok ? "ok" : "broken") + ", exp-1 N=2 CX count " + std::to_string(exp1)};
}

Outcome theory_circuit_consistency() {
    double worst = 0;
    for (int kind = 1; kind <= 3; ++kind) {
        for (int n = 2; n <= 5; ++n) {
            auto spec = ExperimentSpec::standard(kind, n, 100);
            for (double param : spec.grid) {
                auto psi = simulate_statevector(compile_experiment(kind, n, param));
                auto p = theory_probabilities(spec, param);
                for (Eigen::Index z = 0; z < psi.size(); ++z) {
                    worst = std::max(worst, std::abs(std::norm(psi(z)) - p[static_cast<std::size_t>(z)]));
                }
            }
        }
    }
    return {worst <= 1e-9, "max |dP| = " + fmt("%.3g", worst)};
}

Outcome f_metric_anchors() {
    constexpr std::uint64_t kExactShots = 1'000'000'000'000'000ULL;
    const auto spec = ExperimentSpec::standard(1, 3);
    const std::uint64_t dim = spec.dimension();
    std::vector<MeasurementRecord> exact, uniform, mirrored;
    for (double param : spec.grid) {
        auto p = theory_probabilities(spec, param);
        exact.push_back(record_from_distribution(3, param, p, kExactShots));
        uniform.push_back(
            record_from_distribution(3, param, std::vector<double>(dim, 1.0 / static_cast<double>(dim)), 1 << 20));
        double total = 0;
        for (auto& x : p) total += (x = std::max(0.0, 2.0 / static_cast<double>(dim) - x));
        for (auto& x : p) x /= total;
        mirrored.push_back(record_from_distribution(3, param, p, kExactShots));
    }
    const double f_exact = f_metric(spec, exact).f_exp;
    const double f_uniform = f_metric(spec, uniform).f_exp;
    const auto mir = f_metric(spec, mirrored);
    bool negative = false;
    for (const auto& s : mir.per_state) negative |= !s.excluded && s.f < 0;
    const double f_sampled = f_metric(spec, synthesize_records(spec, 10'000, 0.0, 9009)).f_exp;
    const bool ok =
        std::abs(f_exact - 1) <= 1e-12 && std::abs(f_uniform) <= 1e-12 && negative && f_sampled > 0.97;
    return {ok, "exact " + fmt("%.15f", f_exact) + ", uniform " + fmt("%.3g", f_uniform) + ", mirrored f_i<0 " +
                    (negative ? "yes" : "no") + ", 10000-shot exp 1 N=3 f_exp " + fmt("%.4f", f_sampled) +
                    " (need > 0.97)"};
}

Outcome spectrum_symmetry() {
    std::mt19937_64 rng(10010);
    int mismatches = 0, asymmetric = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 16);
        auto w = random_integer_weights(rng, n, -40, 40);
        auto dp = build_spectrum_dp(w);
        auto bf = build_spectrum_bruteforce(w);
        if (dp.values() != bf.values() || dp.counts() != bf.counts()) ++mismatches;
        for (std::size_t j = 0; j < dp.size(); ++j) {
            const auto inv = dp.index_of(inverse_cost(dp, dp.values()[j]));
            if (!inv || dp.counts()[*inv] != dp.counts()[j]) {
                ++asymmetric;
                break;
            }
        }
    }
    return {mismatches == 0 && asymmetric == 0,
            std::to_string(mismatches) + " DP/brute mismatches, " + std::to_string(asymmetric) + " asymmetric"};
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, oracle_equivalence},   {2, closed_form_crosscheck},     {3, grover_anchor},
        {4, fig4_scaled},          {5, fig2_reproduction},          {6, fwhm_law},
        {7, compiler_correctness}, {8, theory_circuit_consistency}, {9, f_metric_anchors},
        {10, spectrum_symmetry},
    };
    int failed = 0;
    for (const auto& [id, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %d: %s - %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
