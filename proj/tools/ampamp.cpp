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

// Command-line front end. Tables go out as CSV and structured results as
// JSON; all angles are radians unless --pi-units is given.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ampamp/ampamp.hpp"

namespace {

using namespace ampamp;

struct Globals {
    bool pi_units = false;
    int jobs = 1;
};

/// Radians from text; with --pi-units the text is an exact multiple of pi.
PhaseScale parse_phase(const std::string& text, const Globals& g) {
    if (g.pi_units) return PhaseScale::pi_times(parse_rational(text));
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return PhaseScale::radians(v);
    } catch (const std::exception&) {
        throw InputError("not a number: '" + text + "'");
    }
}

double parse_angle(const std::string& text, const Globals& g) { return parse_phase(text, g).value(); }

/// "a,b,n" with inclusive endpoints.
std::vector<double> parse_grid(const std::string& text, const Globals& g) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3) throw InputError("grid must be 'start,stop,count'");
    const auto n = detail::parse_int64(parts[2], text);
    if (n < 1 || n > 10'000'000) throw InputError("grid count out of range");
    return linear_grid(parse_angle(parts[0], g), parse_angle(parts[1], g), static_cast<int>(n));
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
    if (out.empty()) throw InputError("empty value list");
    return out;
}

/// Output sink opened before any work starts; "-" or empty means stdout.
class Sink {
   public:
    explicit Sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw InputError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

   private:
    std::unique_ptr<std::ofstream> file_;
};

CostSpectrum spectrum_for(const WeightSet& w, bool brute) {
    return brute ? build_spectrum_bruteforce(w) : build_spectrum_dp(w);
}

int jobs_from_env() {
    if (const char* v = std::getenv("AMPAMP_JOBS")) {
        try {
            int j = std::stoi(v);
            if (j >= 1) return j;
        } catch (const std::exception&) {
        }
        throw InputError("AMPAMP_JOBS must be a positive integer");
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ampamp: amplitude amplification with cost-function oracles"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--pi-units", g.pi_units, "Read angle and phase-scale inputs as exact multiples of pi");
    std::optional<int> jobs_flag;
    app.add_option("--jobs", jobs_flag, "Worker threads for sweep and scan (default: AMPAMP_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Cost spectrum of a linear cost function as CSV C,count");
    std::string sp_weights, sp_out;
    bool sp_dp = false, sp_brute = false;
    spectrum->add_option("--weights", sp_weights, "w1:N, w2, w3 or a JSON weight file")->required();
    auto* dp_flag = spectrum->add_flag("--dp", sp_dp, "Subset-sum counting (default)");
    spectrum->add_flag("--brute", sp_brute, "Enumerate all 2^N assignments")->excludes(dp_flag);
    spectrum->add_option("--out", sp_out, "Output CSV (default stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Iteration trace and complex-plane amplitudes");
    std::string sim_weights, sim_ps, sim_target, sim_theta = "3.141592653589793", sim_out, sim_complex, sim_phi;
    int sim_grover_n = 0;
    std::uint64_t sim_marked = 1;
    long sim_k = 30;
    bool sim_brute = false;
    auto* sim_w = simulate->add_option("--weights", sim_weights, "Cost oracle over w1:N, w2, w3 or a JSON file");
    auto* sim_g = simulate->add_option("--grover", sim_grover_n, "Grover oracle on N qubits instead of a cost oracle");
    sim_w->excludes(sim_g);
    simulate->add_option("--marked", sim_marked, "Marked-state count for --grover");
    simulate->add_option("--phi", sim_phi, "Grover oracle phase (default pi)");
    auto* sim_ps_opt = simulate->add_option("--ps", sim_ps, "Phase scale in radians per cost unit");
    simulate->add_option("--target", sim_target, "Choose ps = pi/(C_bar - T) for target cost T")->excludes(sim_ps_opt);
    simulate->add_option("--theta", sim_theta, "Diffusion phase (default pi)");
    simulate->add_option("--k", sim_k, "Iterations to record")->check(CLI::NonNegativeNumber);
    simulate->add_flag("--brute", sim_brute, "Build the spectrum by enumeration");
    simulate->add_option("--out", sim_out, "Trace CSV k,C,count,prob (default stdout)");
    simulate->add_option("--complex-out", sim_complex, "Complex-plane CSV");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Joint first-peak probability across a ps grid");
    std::string sw_weights, sw_targets, sw_grid, sw_theta = "3.141592653589793", sw_out;
    long sw_kcap = 0;
    sweep->add_option("--weights", sw_weights, "w1:N, w2, w3 or a JSON weight file")->required();
    sweep->add_option("--targets", sw_targets, "Comma-separated target costs")->required();
    sweep->add_option("--ps-grid", sw_grid, "start,stop,count (inclusive)")->required();
    sweep->add_option("--theta", sw_theta, "Diffusion phase (default pi)");
    sweep->add_option("--k-cap", sw_kcap, "Iteration cap (default ceil(2.5 pi/4 sqrt(2^N)))");
    sweep->add_option("--out", sw_out, "Output CSV (default stdout)");

    // scan
    auto* scan = app.add_subcommand("scan", "Peak probability and iteration count for every cost class");
    std::string sc_weights, sc_theta = "3.141592653589793", sc_out, sc_only;
    long sc_kcap = 0;
    scan->add_option("--weights", sc_weights, "w1:N, w2, w3 or a JSON weight file")->required();
    scan->add_option("--theta", sc_theta, "Diffusion phase (default pi)");
    scan->add_option("--k-cap", sc_kcap, "Iteration cap (default ceil(2.5 pi/4 sqrt(2^N)))");
    scan->add_option("--only", sc_only, "Comma-separated subset of classes to scan");
    scan->add_option("--out", sc_out, "Output CSV (default stdout)");
    std::string sc_refs;
    scan->add_option("--grover-refs", sc_refs, "CSV of Grover reference iterations n_marked,k_grover");

    // resonance
    auto* resonance = app.add_subcommand("resonance", "Closed-form peak probability versus oracle phase");
    int rs_n = 0;
    std::string rs_theta = "3.141592653589793", rs_grid, rs_out;
    resonance->add_option("--n", rs_n, "Qubit count")->required()->check(CLI::Range(1, 1023));
    resonance->add_option("--theta", rs_theta, "Diffusion phase (default pi)");
    resonance->add_option("--phi-grid", rs_grid, "start,stop,count (default 0,2pi,101)");
    resonance->add_option("--out", rs_out, "Output CSV phi,p_max (default stdout)");

    // compile
    auto* compile = app.add_subcommand("compile", "Emit OpenQASM and gate metrics");
    int cp_exp = 0, cp_n = 0;
    bool cp_diffusion = false, cp_oracle = false, cp_mcp = false, cp_scaled = false;
    std::string cp_param = "3.141592653589793", cp_qasm, cp_metrics, cp_weights;
    auto* cp_e = compile->add_option("--experiment", cp_exp, "Experiment circuit 1, 2 or 3")->check(CLI::Range(1, 3));
    auto* cp_d = compile->add_flag("--diffusion", cp_diffusion, "Diffusion U_s(param) alone");
    auto* cp_o = compile->add_flag("--oracle", cp_oracle, "Linear cost oracle with ps = param");
    auto* cp_m = compile->add_flag("--mcp", cp_mcp, "Multi-controlled phase P(param) alone");
    cp_e->excludes(cp_d, cp_o, cp_m);
    cp_d->excludes(cp_o, cp_m);
    cp_o->excludes(cp_m);
    compile->add_option("--n", cp_n, "Qubit count")->check(CLI::Range(1, 24));
    compile->add_option("--param", cp_param, "ps for experiment 1 and --oracle, theta otherwise");
    compile->add_option("--weights", cp_weights, "Weights for --oracle (default w1:n)");
    compile->add_flag("--scaled", cp_scaled, "Oracle angles W_i pi ps / N' instead of W_i ps");
    compile->add_option("--qasm", cp_qasm, "QASM output (default stdout)");
    compile->add_option("--metrics", cp_metrics, "Metrics JSON output (default stderr)");

    // dense
    auto* dense = app.add_subcommand("dense", "Simulate a QASM file from |0...0> and print bitstring,prob");
    std::string ds_qasm, ds_out;
    dense->add_option("--qasm", ds_qasm, "QASM input file")->required()->check(CLI::ExistingFile);
    dense->add_option("--out", ds_out, "Output CSV (default stdout)");

    // theory
    auto* theory = app.add_subcommand("theory", "First-iteration predicted probabilities over the experiment grid");
    int th_exp = 1, th_n = 2, th_points = 100;
    std::string th_out;
    theory->add_option("--experiment", th_exp, "1, 2 or 3")->required();
    theory->add_option("--n", th_n, "Qubit count")->required();
    theory->add_option("--points", th_points, "Grid points")->check(CLI::PositiveNumber);
    theory->add_option("--out", th_out, "Output CSV param,bitstring,prob (default stdout)");

    // fidelity
    auto* fidelity = app.add_subcommand("fidelity", "Score measurement records with the f-metric");
    std::string fd_records, fd_out;
    fidelity->add_option("--records", fd_records, "Record JSON file")->required()->check(CLI::ExistingFile);
    fidelity->add_option("--out", fd_out, "Report JSON (default stdout)");

    // synth
    auto* synth = app.add_subcommand("synth", "Synthetic measurement records sampled from theory");
    int sy_exp = 1, sy_n = 2, sy_points = 100;
    std::uint64_t sy_shots = 10000, sy_seed = 1;
    double sy_lambda = 0.0;
    std::string sy_out;
    synth->add_option("--experiment", sy_exp, "1, 2 or 3")->required();
    synth->add_option("--n", sy_n, "Qubit count")->required();
    synth->add_option("--points", sy_points, "Grid points")->check(CLI::PositiveNumber);
    synth->add_option("--shots", sy_shots, "Shots per grid point")->check(CLI::PositiveNumber);
    synth->add_option("--lambda", sy_lambda, "Mix weight of the uniform distribution")->check(CLI::Range(0.0, 1.0));
    synth->add_option("--seed", sy_seed, "Generator seed");
    synth->add_option("--out", sy_out, "Record JSON (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        g.jobs = jobs_flag ? *jobs_flag : jobs_from_env();

        if (*spectrum) {
            WeightSet w = resolve_weights(sp_weights);
            Sink out(sp_out);
            write_spectrum_csv(out.stream(), spectrum_for(w, sp_brute));
        } else if (*simulate) {
            std::optional<OracleSpec> oracle;
            if (sim_grover_n > 0) {
                const double phi = sim_phi.empty() ? kPi : parse_angle(sim_phi, g);
                oracle = OracleSpec::grover(sim_grover_n, sim_marked, phi);
            } else {
                if (sim_weights.empty()) throw InputError("simulate needs --weights or --grover");
                WeightSet w = resolve_weights(sim_weights);
                CostSpectrum s = spectrum_for(w, sim_brute);
                PhaseScale ps;
                if (!sim_target.empty()) {
                    ps = ps_for_target(s, parse_rational(sim_target));
                } else if (!sim_ps.empty()) {
                    ps = parse_phase(sim_ps, g);
                } else {
                    throw InputError("simulate with --weights needs --ps or --target");
                }
                oracle = OracleSpec::cost(std::move(s), ps);
            }
            const double theta = parse_angle(sim_theta, g);
            Sink out(sim_out);
            std::optional<Sink> cplx;
            if (!sim_complex.empty()) cplx.emplace(sim_complex);
            SimulationTrace trace = run(*oracle, theta, sim_k);
            write_trace_csv(out.stream(), trace);
            if (cplx) export_complex_plane(cplx->stream(), trace);
        } else if (*sweep) {
            WeightSet w = resolve_weights(sw_weights);
            auto targets = parse_rational_list(sw_targets);
            auto grid = parse_grid(sw_grid, g);
            const double theta = parse_angle(sw_theta, g);
            Sink out(sw_out);
            CostSpectrum s = build_spectrum_dp(w);
            const long cap = sw_kcap > 0 ? sw_kcap : default_k_cap(w.size());
            write_sweep_csv(out.stream(), ps_sweep(s, targets, grid, theta, cap, g.jobs));
        } else if (*scan) {
            WeightSet w = resolve_weights(sc_weights);
            std::vector<Rational> only;
            if (!sc_only.empty()) only = parse_rational_list(sc_only);
            const double theta = parse_angle(sc_theta, g);
            Sink out(sc_out);
            std::optional<Sink> refs;
            if (!sc_refs.empty()) refs.emplace(sc_refs);
            CostSpectrum s = build_spectrum_dp(w);
            const long cap = sc_kcap > 0 ? sc_kcap : default_k_cap(w.size());
            ScanResult r = spectrum_scan(s, theta, cap, g.jobs, only);
            write_scan_csv(out.stream(), r);
            if (refs) {
                refs->stream() << "n_marked,k_grover\n";
                for (const auto& ref : r.grover_refs) refs->stream() << ref.n_marked << ',' << ref.k_grover << '\n';
            }
        } else if (*resonance) {
            const double theta = parse_angle(rs_theta, g);
            std::vector<double> grid = rs_grid.empty() ? linear_grid(0.0, kTwoPi, 101) : parse_grid(rs_grid, g);
            Sink out(rs_out);
            auto& os = out.stream();
            os.precision(17);
            os << "phi,p_max\n";
            for (const auto& p : resonance_curve(rs_n, theta, grid)) os << p.phi << ',' << p.p << '\n';
        } else if (*compile) {
            if (cp_n < 1) throw InputError("compile needs --n");
            const double param = parse_angle(cp_param, g);
            std::optional<Circuit> c;
            if (cp_exp) {
                c = compile_experiment(cp_exp, cp_n, param);
            } else if (cp_diffusion) {
                c = compile_diffusion(cp_n, param);
            } else if (cp_oracle) {
                WeightSet w = cp_weights.empty() ? weights_w1(cp_n) : resolve_weights(cp_weights);
                if (w.size() != cp_n) throw InputError("--weights size does not match --n");
                c = compile_cost_oracle_linear(w, param, cp_scaled);
            } else if (cp_mcp) {
                c = compile_mcp(cp_n, param);
            } else {
                throw InputError("compile needs --experiment, --diffusion, --oracle or --mcp");
            }
            Sink qasm(cp_qasm);
            std::optional<Sink> metrics;
            if (!cp_metrics.empty()) metrics.emplace(cp_metrics);
            qasm.stream() << emit_qasm(*c);
            (metrics ? metrics->stream() : std::cerr) << circuit_metrics(*c).dump() << '\n';
        } else if (*dense) {
            std::ifstream in(ds_qasm);
            if (!in) throw InputError("cannot open '" + ds_qasm + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            Circuit c = parse_qasm(buf.str());
            Sink out(ds_out);
            auto psi = simulate_statevector(c);
            auto& os = out.stream();
            os.precision(17);
            os << "bitstring,prob\n";
            for (Eigen::Index z = 0; z < psi.size(); ++z) {
                os << Bitstring(static_cast<std::uint64_t>(z), c.width()).to_string() << ',' << std::norm(psi(z))
                   << '\n';
            }
        } else if (*theory) {
            auto spec = ExperimentSpec::standard(th_exp, th_n, th_points);
            Sink out(th_out);
            auto& os = out.stream();
            os.precision(17);
            os << "param,bitstring,prob\n";
            for (double p : spec.grid) {
                auto probs = theory_probabilities(spec, p);
                for (std::uint64_t z = 0; z < probs.size(); ++z) {
                    os << p << ',' << Bitstring(z, th_n).to_string() << ',' << probs[z] << '\n';
                }
            }
        } else if (*fidelity) {
            RecordFile f = load_records(fd_records);
            Sink out(fd_out);
            ExperimentSpec spec{f.kind, f.n_qubits, {}};
            out.stream() << report_to_json(f_metric(spec, f.records)).dump(2) << '\n';
        } else if (*synth) {
            auto spec = ExperimentSpec::standard(sy_exp, sy_n, sy_points);
            Sink out(sy_out);
            auto recs = synthesize_records(spec, sy_shots, sy_lambda, sy_seed);
            out.stream() << records_to_json(sy_exp, sy_n, recs).dump(2) << '\n';
        }
    } catch (const CapacityError& e) {
        std::cerr << "ampamp: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "ampamp: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
