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

/// First-iteration theory for the three experiment circuits and the f-metric
/// that scores measured counts against it.
///
/// All three experiments prepare |s>, apply one oracle and one diffusion.
/// With a_Z the post-oracle amplitude and abar its mean, the final amplitude
/// is a_Z - (1 - e^{i theta}) abar. For the scaled W1 oracle the mean
/// factorizes, abar = 2^{-N/2} prod_i (1 + e^{i i ps'}) / 2, with
/// ps' = pi ps / N'.
///
/// f_i = 1 - RMS_i / RMS~_i compares the RMS deviation of measured from
/// predicted probability against that of the uniform distribution; 1 means
/// agreement, 0 means fully decohered, negative means worse than decohered.
#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ampamp/bitstring.hpp"
#include "ampamp/errors.hpp"
#include "ampamp/param_engine.hpp"
#include "ampamp/phase.hpp"

namespace ampamp {

inline constexpr int kMaxExperimentQubits = 16;

struct ExperimentSpec {
    int kind = 1;
    int n_qubits = 2;
    std::vector<double> grid;

    /// Experiment 1 sweeps ps over [0, 2N'] (one period of the scaled oracle);
    /// experiments 2 and 3 sweep theta over [0, 2 pi].
    static ExperimentSpec standard(int kind, int n_qubits, int points = 100) {
        validate(kind, n_qubits);
        ExperimentSpec s{kind, n_qubits, {}};
        const double hi = kind == 1 ? static_cast<double>(n_qubits * (n_qubits + 1)) : kTwoPi;
        s.grid = linear_grid(0.0, hi, points);
        return s;
    }

    static void validate(int kind, int n_qubits) {
        if (kind < 1 || kind > 3) throw InputError("experiment kind must be 1, 2 or 3");
        if (n_qubits < 2) throw InputError("experiments need at least two qubits");
        if (n_qubits > kMaxExperimentQubits) throw CapacityError("experiments are limited to 16 qubits");
    }

    std::uint64_t dimension() const { return std::uint64_t{1} << n_qubits; }
};

/// The ps fed to the scaled oracle: the swept value in experiment 1, fixed 1 in experiment 2.
inline double kind_scale(int kind, double parameter) { return kind == 1 ? parameter : 1.0; }

/// Probability of every basis index after one iteration at `parameter`.
inline std::vector<double> theory_probabilities(const ExperimentSpec& spec, double parameter) {
    ExperimentSpec::validate(spec.kind, spec.n_qubits);
    const int n = spec.n_qubits;
    const std::uint64_t dim = spec.dimension();
    const double amp0 = 1.0 / std::sqrt(static_cast<double>(dim));
    const std::complex<double> i(0, 1);
    std::vector<double> out(dim);

    if (spec.kind == 3) {
        const double theta = parameter;
        // One marked state flipped by phi = pi.
        const std::complex<double> mean = amp0 * (static_cast<double>(dim) - 2.0) / static_cast<double>(dim);
        const std::complex<double> shift = (1.0 - std::polar(1.0, theta)) * mean;
        const double p_rest = std::norm(amp0 - shift);
        const double p_marked = std::norm(-amp0 - shift);
        for (std::uint64_t z = 0; z < dim; ++z) out[z] = z == dim - 1 ? p_marked : p_rest;
        return out;
    }

    const double n_prime = static_cast<double>(n * (n + 1) / 2);
    const double ps = kind_scale(spec.kind, parameter) * kPi / n_prime;
    const double theta = spec.kind == 1 ? kPi : parameter;
    std::complex<double> mean = amp0;
    for (int q = 1; q <= n; ++q) mean *= (1.0 + std::exp(i * (q * ps))) / 2.0;
    const std::complex<double> shift = (1.0 - std::polar(1.0, theta)) * mean;
    for (std::uint64_t z = 0; z < dim; ++z) {
        std::int64_t cost = 0;
        for (int q = 0; q < n; ++q) {
            if ((z >> q) & 1U) cost += q + 1;
        }
        out[z] = std::norm(amp0 * std::polar(1.0, static_cast<double>(cost) * ps) - shift);
    }
    return out;
}

struct MeasurementRecord {
    double parameter = 0.0;
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;
};

struct StateScore {
    std::string bitstring;
    bool excluded = false;
    double f = 0.0;
};

struct FidelityReport {
    int kind = 0;
    int n_qubits = 0;
    std::vector<StateScore> per_state;
    double f_exp = 0.0;
    std::optional<double> f_m;
    std::vector<std::string> excluded;
};

/// Deviations at or below this RMS~ leave f_i undefined.
inline constexpr double kExclusionThreshold = 1e-12;

inline void validate_record(const MeasurementRecord& r, int n_qubits) {
    if (r.shots == 0) throw InputError("record shots must be positive");
    std::uint64_t total = 0;
    for (const auto& [key, n] : r.counts) {
        if (static_cast<int>(key.size()) != n_qubits) throw InputError("count key '" + key + "' has the wrong length");
        Bitstring::parse(key);
        total += n;
    }
    if (total > r.shots) throw InputError("record counts exceed shots");
}

inline FidelityReport f_metric(const ExperimentSpec& spec, const std::vector<MeasurementRecord>& records) {
    ExperimentSpec::validate(spec.kind, spec.n_qubits);
    if (records.empty()) throw InputError("no measurement records");
    const std::uint64_t dim = spec.dimension();
    const double uniform = 1.0 / static_cast<double>(dim);
    std::vector<long double> dev(dim, 0), dev_uniform(dim, 0);
    for (const auto& r : records) {
        validate_record(r, spec.n_qubits);
        const auto p = theory_probabilities(spec, r.parameter);
        std::vector<double> meas(dim, 0.0);
        for (const auto& [key, n] : r.counts) {
            meas[Bitstring::parse(key).index()] = static_cast<double>(n) / static_cast<double>(r.shots);
        }
        for (std::uint64_t z = 0; z < dim; ++z) {
            const long double d = meas[z] - p[z], du = uniform - p[z];
            dev[z] += d * d;
            dev_uniform[z] += du * du;
        }
    }
    const long double j = static_cast<long double>(records.size());
    FidelityReport rep{spec.kind, spec.n_qubits, {}, 0.0, std::nullopt, {}};
    long double sum = 0;
    std::size_t used = 0;
    for (std::uint64_t z = 0; z < dim; ++z) {
        const double rms = static_cast<double>(std::sqrt(dev[z] / j));
        const double rms_u = static_cast<double>(std::sqrt(dev_uniform[z] / j));
        StateScore s{Bitstring(z, spec.n_qubits).to_string(), false, 0.0};
        if (rms_u <= kExclusionThreshold) {
            s.excluded = true;
            rep.excluded.push_back(s.bitstring);
        } else {
            s.f = 1.0 - rms / rms_u;
            sum += s.f;
            ++used;
        }
        rep.per_state.push_back(s);
    }
    if (used == 0) throw DomainError("every basis state is excluded; f_exp is undefined");
    rep.f_exp = static_cast<double>(sum / static_cast<long double>(used));
    if (spec.kind == 3 && !rep.per_state.back().excluded) rep.f_m = rep.per_state.back().f;
    return rep;
}

/// Counts floor(p_z * shots) for a given distribution over basis indices.
inline MeasurementRecord record_from_distribution(int n_qubits, double parameter, const std::vector<double>& probs,
                                                  std::uint64_t shots) {
    MeasurementRecord r{parameter, shots, {}};
    for (std::uint64_t z = 0; z < probs.size(); ++z) {
        const double c = std::floor(std::max(0.0, probs[z]) * static_cast<double>(shots));
        if (c > 0) r.counts[Bitstring(z, n_qubits).to_string()] = static_cast<std::uint64_t>(c);
    }
    return r;
}

/// Samples `shots` outcomes per grid point from (1 - lambda) theory + lambda uniform.
inline std::vector<MeasurementRecord> synthesize_records(const ExperimentSpec& spec, std::uint64_t shots,
                                                         double lambda, std::uint64_t seed) {
    if (shots < 1) throw InputError("shots must be at least 1");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw InputError("noise mix must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    const std::uint64_t dim = spec.dimension();
    std::vector<MeasurementRecord> out;
    for (double param : spec.grid) {
        auto p = theory_probabilities(spec, param);
        std::vector<double> cdf(dim);
        double acc = 0.0;
        for (std::uint64_t z = 0; z < dim; ++z) {
            acc += (1.0 - lambda) * p[z] + lambda / static_cast<double>(dim);
            cdf[z] = acc;
        }
        std::vector<std::uint64_t> hist(dim, 0);
        for (std::uint64_t s = 0; s < shots; ++s) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            if (it == cdf.end()) --it;
            ++hist[static_cast<std::size_t>(it - cdf.begin())];
        }
        MeasurementRecord r{param, shots, {}};
        for (std::uint64_t z = 0; z < dim; ++z) {
            if (hist[z] > 0) r.counts[Bitstring(z, spec.n_qubits).to_string()] = hist[z];
        }
        out.push_back(std::move(r));
    }
    return out;
}

// Record files: {"experiment": k, "n_qubits": N, "records": [{"param", "shots", "counts"}, ...]}.
// A top-level array whose first element is the {"experiment", "n_qubits"} header is also read.

struct RecordFile {
    int kind = 1;
    int n_qubits = 2;
    std::vector<MeasurementRecord> records;
};

inline nlohmann::json records_to_json(int kind, int n_qubits, const std::vector<MeasurementRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json counts = nlohmann::json::object();
        for (const auto& [k, n] : r.counts) counts[k] = n;
        arr.push_back({{"param", r.parameter}, {"shots", r.shots}, {"counts", counts}});
    }
    return {{"experiment", kind}, {"n_qubits", n_qubits}, {"records", arr}};
}

inline RecordFile records_from_json(const nlohmann::json& doc) {
    try {
        RecordFile f;
        const nlohmann::json* header = &doc;
        std::vector<const nlohmann::json*> items;
        if (doc.is_array()) {
            if (doc.empty()) throw InputError("record file is empty");
            header = &doc.front();
            for (std::size_t k = 1; k < doc.size(); ++k) items.push_back(&doc[k]);
        } else if (doc.is_object() && doc.contains("records")) {
            for (const auto& r : doc.at("records")) items.push_back(&r);
        } else {
            throw InputError("record file must be an object with \"records\" or a header-first array");
        }
        f.kind = header->at("experiment").get<int>();
        f.n_qubits = header->at("n_qubits").get<int>();
        ExperimentSpec::validate(f.kind, f.n_qubits);
        for (const auto* item : items) {
            MeasurementRecord r;
            r.parameter = item->at("param").get<double>();
            const auto shots = item->at("shots").get<std::int64_t>();
            if (shots <= 0) throw InputError("record shots must be positive");
            r.shots = static_cast<std::uint64_t>(shots);
            for (const auto& [k, v] : item->at("counts").items()) {
                const auto n = v.get<std::int64_t>();
                if (n < 0) throw InputError("negative count for '" + k + "'");
                r.counts[k] = static_cast<std::uint64_t>(n);
            }
            validate_record(r, f.n_qubits);
            f.records.push_back(std::move(r));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed record file: ") + e.what());
    }
}

inline RecordFile load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open record file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("record file '" + path + "': " + e.what());
    }
    return records_from_json(doc);
}

inline nlohmann::json report_to_json(const FidelityReport& r) {
    nlohmann::json states = nlohmann::json::array();
    for (const auto& s : r.per_state) {
        if (s.excluded) {
            states.push_back({{"bitstring", s.bitstring}, {"excluded", true}});
        } else {
            states.push_back({{"bitstring", s.bitstring}, {"f_i", s.f}});
        }
    }
    nlohmann::json doc = {{"experiment", r.kind}, {"n_qubits", r.n_qubits}, {"f_exp", r.f_exp},
                          {"per_state", states}, {"excluded", r.excluded}};
    if (r.f_m) doc["f_m"] = *r.f_m;
    return doc;
}

}  // namespace ampamp
