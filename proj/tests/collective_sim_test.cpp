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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ampamp/collective_sim.hpp"
#include "ampamp/grover_closed_form.hpp"
#include "ampamp/param_engine.hpp"
#include "ampamp/statevector_reference.hpp"

namespace ampamp {
namespace {

double wrap(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0 ? a + kTwoPi : a;
}

/// Distance between two angles on the circle.
double angle_gap(double a, double b) {
    double d = wrap(a - b);
    return std::min(d, kTwoPi - d);
}

TEST(InitSuperposition, UniformAmplitudes) {
    auto s = init_superposition(build_spectrum_dp(weights_w1(5)));
    ASSERT_EQ(s.size(), 16u);
    for (const auto& a : s.amps()) EXPECT_NEAR(std::abs(a - Complex(1 / std::sqrt(32.0), 0)), 0.0, 1e-15);
    EXPECT_NEAR(s.norm(), 1.0, 1e-15);

    auto g = init_superposition(OracleSpec::grover(3, 1, kPi));
    EXPECT_EQ(g.counts(), (std::vector<std::uint64_t>{7, 1}));
    EXPECT_NEAR(g.amps()[0].real(), 1 / std::sqrt(8.0), 1e-15);
    EXPECT_NEAR(g.amps()[1].real(), 1 / std::sqrt(8.0), 1e-15);
}

TEST(OracleSpec, GroverValidation) {
    EXPECT_THROW(OracleSpec::grover(2, 0, kPi), InputError);
    EXPECT_THROW(OracleSpec::grover(2, 4, kPi), InputError);
}

TEST(ApplyOracle, Examples) {
    auto spec = build_spectrum_dp(weights_w1(5));
    auto s = init_superposition(spec);
    auto same = apply_oracle(s, OracleSpec::cost(spec, PhaseScale::radians(0)));
    for (std::size_t j = 0; j < s.size(); ++j) EXPECT_NEAR(std::abs(same.amps()[j] - s.amps()[j]), 0, 1e-15);

    auto g = OracleSpec::grover(2, 1, kPi);
    auto flipped = apply_oracle(init_superposition(g), g);
    EXPECT_NEAR(flipped.amps()[0].real(), 0.5, 1e-15);
    EXPECT_NEAR(flipped.amps()[1].real(), -0.5, 1e-15);

    auto other = OracleSpec::grover(3, 1, kPi);
    EXPECT_THROW(apply_oracle(init_superposition(g), other), InputError);
}

TEST(ApplyOracle, MeanPhaseForW1Ten) {
    auto spec = build_spectrum_dp(weights_w1(10));
    auto ps = PhaseScale::pi_times(Rational(2, 51));
    auto s = apply_oracle(init_superposition(spec), OracleSpec::cost(spec, ps));
    const double expected = wrap(27.5 * kPi / 25.5);
    EXPECT_LT(angle_gap(std::arg(mean_amplitude(s)), expected), 1e-12);
}

TEST(MeanAmplitude, Examples) {
    auto g = OracleSpec::grover(2, 1, kPi);
    auto s = init_superposition(g);
    EXPECT_NEAR(std::abs(mean_amplitude(s) - Complex(0.5, 0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(mean_amplitude(apply_oracle(s, g)) - Complex(0.25, 0)), 0, 1e-15);
    CollectiveState zero(s.spectrum_ptr(), {Complex(1, 0), Complex(-3, 0)});
    EXPECT_NEAR(std::abs(mean_amplitude(zero)), 0, 1e-15);
}

TEST(ApplyDiffusion, Examples) {
    auto g = OracleSpec::grover(2, 1, kPi);
    auto s = apply_oracle(init_superposition(g), g);
    auto unchanged = apply_diffusion(s, 0.0);
    EXPECT_EQ(unchanged.amps(), s.amps());

    auto u = apply_diffusion(init_superposition(g), 1.3);
    for (const auto& a : u.amps()) EXPECT_NEAR(std::abs(a - std::polar(0.5, 1.3)), 0, 1e-15);

    auto grover = apply_diffusion(s, kPi);
    EXPECT_NEAR(std::abs(grover.amps()[1] - Complex(-1, 0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(grover.amps()[0]), 0, 1e-15);
}

TEST(Unitarity, RandomPhases) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ang(-10, 10);
    auto spec = build_spectrum_dp(weights_w2());
    auto s = init_superposition(spec);
    for (int t = 0; t < 10000; ++t) {
        s = apply_oracle(s, OracleSpec::cost(spec, PhaseScale::radians(ang(rng))));
        ASSERT_NEAR(s.norm(), 1.0, 1e-10);
        s = apply_diffusion(s, ang(rng));
        ASSERT_NEAR(s.norm(), 1.0, 1e-10);
        if (t % 100 == 0) s = init_superposition(spec);
    }
}

TEST(Run, GroverTenQubitsPeaksAtSeventeen) {
    auto trace = run(OracleSpec::grover(10, 2, kPi), kPi, 30);
    ASSERT_EQ(trace.per_iteration.size(), 31u);
    auto p = first_peak(trace, ClassSelector{{1}});
    EXPECT_EQ(p.k, 17);
    EXPECT_GT(p.p, 0.99);
    for (const auto& r : trace.per_iteration) {
        double sum = 0;
        for (double x : r.class_probs) sum += x;
        EXPECT_NEAR(sum, 1.0, 1e-10);
    }
}

TEST(Run, ZeroIterations) {
    auto spec = build_spectrum_dp(weights_w1(5));
    auto trace = run(OracleSpec::cost(spec, PhaseScale::radians(0.3)), kPi, 0);
    ASSERT_EQ(trace.per_iteration.size(), 1u);
    for (std::size_t j = 0; j < spec.size(); ++j) {
        EXPECT_NEAR(trace.per_iteration[0].class_probs[j], spec.counts()[j] / 32.0, 1e-15);
    }
    EXPECT_THROW(run(OracleSpec::cost(spec, PhaseScale::radians(0.3)), kPi, -1), InputError);
}

TEST(Run, W1TenFirstJointPeak) {
    // The first interior maximum of the C=2 / C=53 joint probability is at
    // k = 50 with p ~ 0.2655; below k = 30 the curve is still rising.
    auto spec = build_spectrum_dp(weights_w1(10));
    auto oracle = OracleSpec::cost(spec, ps_for_target(spec, Rational(2)));
    auto sel = joint_selector(spec, Rational(2));
    EXPECT_THROW(first_peak(run(oracle, kPi, 30), sel), NotFoundError);
    auto p = first_peak(run(oracle, kPi, 80), sel);
    EXPECT_EQ(p.k, 50);
    EXPECT_NEAR(p.p, 0.2655013139, 1e-8);
}

TEST(JointTargetProbability, Examples) {
    auto spec = build_spectrum_dp(weights_w1(5));
    auto trace = run(OracleSpec::cost(spec, PhaseScale::radians(0.2)), kPi, 3);
    EXPECT_NEAR(joint_target_probability(trace, Rational(0), 0), 2.0 / 32, 1e-15);
    EXPECT_THROW(joint_target_probability(trace, Rational(99), 0), DomainError);
    EXPECT_THROW(joint_target_probability(trace, Rational(0), 4), InputError);

    auto odd = build_spectrum_dp(weights_w1(4));  // c_bar = 5 is a class
    auto t2 = run(OracleSpec::cost(odd, PhaseScale::radians(0.2)), kPi, 0);
    EXPECT_NEAR(joint_target_probability(t2, Rational(5), 0), odd.count_of(Rational(5)) / 16.0, 1e-15);
}

TEST(FirstPeak, GroverAnchors) {
    auto p4 = first_peak(run(OracleSpec::grover(4, 1, kPi), kPi, 10), ClassSelector{{1}});
    EXPECT_EQ(p4.k, 3);
    EXPECT_GT(p4.p, 0.96);
    auto p2 = first_peak(run(OracleSpec::grover(2, 1, kPi), kPi, 5), ClassSelector{{1}});
    EXPECT_EQ(p2.k, 1);
    EXPECT_NEAR(p2.p, 1.0, 1e-12);
}

TEST(FirstPeak, MonotoneSeriesHasNoPeak) {
    std::vector<double> dec{0.9, 0.8, 0.7, 0.6};
    EXPECT_THROW(first_peak(dec), NotFoundError);
    std::vector<double> flat{0.5, 0.5, 0.5};
    EXPECT_EQ(first_peak(flat).k, 1);
}

TEST(RunToFirstPeak, MatchesTraceScan) {
    auto spec = build_spectrum_dp(weights_w1(12));
    auto oracle = OracleSpec::cost(spec, ps_for_target(spec, Rational(1)));
    auto sel = joint_selector(spec, Rational(1));
    auto a = run_to_first_peak(oracle, kPi, sel, 500);
    auto b = first_peak(run(oracle, kPi, 500), sel);
    EXPECT_EQ(a.k, b.k);
    EXPECT_DOUBLE_EQ(a.p, b.p);
    EXPECT_THROW(run_to_first_peak(oracle, kPi, sel, a.k), NotFoundError);
}

TEST(StatevectorReference, AgreesWithCollectiveOnRandomInstances) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> wd(-20, 20);
    std::uniform_real_distribution<double> ud(-3, 3);
    for (int t = 0; t < 10; ++t) {
        const int n = 2 + static_cast<int>(rng() % 9);
        std::vector<Rational> ws;
        for (int i = 0; i < n; ++i) ws.emplace_back(wd(rng));
        WeightSet w(ws);
        auto spec = build_spectrum_dp(w);
        const double ps = ud(rng), theta = ud(rng);
        auto trace = run(OracleSpec::cost(spec, PhaseScale::radians(ps)), theta, 40);
        for (long k : {0L, 1L, 7L, 40L}) {
            auto ref = full_statevector_reference(w, spec, ps, theta, k);
            for (std::size_t j = 0; j < spec.size(); ++j) {
                EXPECT_NEAR(ref[j], trace.per_iteration[static_cast<std::size_t>(k)].class_probs[j], 1e-9);
            }
        }
    }
}

TEST(StatevectorReference, UniformAtZeroAndCapacity) {
    auto w = weights_w1(6);
    auto spec = build_spectrum_dp(w);
    auto p = full_statevector_reference(w, spec, 0.7, 1.1, 0);
    for (std::size_t j = 0; j < spec.size(); ++j) EXPECT_NEAR(p[j], spec.counts()[j] / 64.0, 1e-15);
    auto big = weights_w1(13);
    EXPECT_THROW(full_statevector_reference(big, build_spectrum_dp(big), 0.1, kPi, 1), CapacityError);
}

TEST(StatevectorReference, GroverConfigMatchesClosedForm) {
    // Marked set: the single all-ones state of 8 qubits.
    auto marked = [](const Bitstring& z) { return Rational(z.index() == 255 ? 1 : 0); };
    auto spec = build_spectrum_bruteforce(marked, 8);
    GroverAnalytic ga(8, 1, 2.0, 2.5);
    for (long k : {0L, 3L, 9L}) {
        auto p = full_statevector_reference(marked, spec, 2.0, 2.5, k);
        EXPECT_NEAR(p[1], ga.probability_m(static_cast<double>(k)), 1e-9);
    }
}

TEST(PiPhaseTracking, FirstTwoIterations) {
    for (int n : {6, 10, 13}) {
        auto spec = build_spectrum_dp(weights_w1(n));
        for (const Rational& c : {Rational(0), Rational(2), spec.values().back()}) {
            auto trace = run(OracleSpec::cost(spec, ps_for_target(spec, c)), kPi, 2);
            const std::size_t j = *spec.index_of(c);
            for (long k : {1L, 2L}) {
                const auto& r = trace.per_iteration[static_cast<std::size_t>(k)];
                // Phase of the target entering diffusion k versus the mean it is reflected about.
                auto prev = trace.per_iteration[static_cast<std::size_t>(k - 1)].amps[j];
                auto post_oracle = prev * OracleSpec::cost(spec, ps_for_target(spec, c)).phase_scale().factor_of(c);
                EXPECT_LT(angle_gap(std::arg(r.mean_amp) - std::arg(post_oracle), kPi), 1e-9) << n << " k=" << k;
            }
        }
    }
}

TEST(ComplexPlane, RowsAndPhaseRelation) {
    auto spec = build_spectrum_dp(weights_w1(10));
    auto trace = run(OracleSpec::cost(spec, ps_for_target(spec, Rational(2))), kPi, 1);
    std::ostringstream out;
    export_complex_plane(out, trace);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "k,C,count,re_alpha,im_alpha,re_mean,im_mean");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 2 * static_cast<int>(spec.size()));
    const auto& r0 = trace.per_iteration[0];
    for (const auto& a : r0.amps) EXPECT_NEAR(std::abs(a - Complex(1 / 32.0, 0)), 0, 1e-15);
    // k = 1: mean that fed the diffusion versus the target's post-oracle amplitude.
    const std::size_t j = *spec.index_of(Rational(2));
    auto post = r0.amps[j] * ps_for_target(spec, Rational(2)).factor_of(Rational(2));
    EXPECT_LT(angle_gap(std::arg(trace.per_iteration[1].mean_amp) - std::arg(post), kPi), 1e-9);
}

TEST(TraceCsv, Header) {
    auto trace = run(OracleSpec::grover(2, 1, kPi), kPi, 1);
    std::ostringstream out;
    write_trace_csv(out, trace);
    const std::string text = out.str();
    EXPECT_EQ(text.substr(0, 15), "k,C,count,prob\n");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

}  // namespace
}  // namespace ampamp
