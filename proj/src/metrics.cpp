// Copyright 2026 The pqcsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqc/metrics.hpp"

#include <cmath>
#include <limits>

#include "pqc/error.hpp"
#include "pqc/parallel.hpp"

namespace pqc {

namespace {

// Keeps fidelity and entanglement draws of the same seed on disjoint substreams.
constexpr uint64_t kExpressibilityStream = 0x45787072;  // "Expr"
constexpr uint64_t kEntanglingStream = 0x456e7461;      // "Enta"

}  // namespace

FidelityHistogram::FidelityHistogram(size_t n_bins) : counts_(n_bins, 0) {
    if (n_bins < 1) {
        throw ArgumentError("histogram needs at least one bin");
    }
}

size_t FidelityHistogram::bin_of(double fidelity) const {
    const size_t n = counts_.size();
    if (!(fidelity > 0)) {
        return 0;
    }
    double scaled = fidelity * static_cast<double>(n);
    if (scaled >= static_cast<double>(n)) {
        return n - 1;
    }
    return static_cast<size_t>(scaled);
}

void FidelityHistogram::add(double fidelity) {
    ++counts_[bin_of(fidelity)];
    ++total_;
}

std::vector<double> FidelityHistogram::edges() const {
    const size_t n = counts_.size();
    std::vector<double> e(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        e[i] = static_cast<double>(i) / static_cast<double>(n);
    }
    return e;
}

double haar_bin_probability(size_t bin, size_t n_qubits, size_t n_bins) {
    if (bin >= n_bins) {
        throw ArgumentError("bin " + std::to_string(bin) + " out of range for " + std::to_string(n_bins) + " bins");
    }
    const double exponent = std::ldexp(1.0, static_cast<int>(n_qubits)) - 1.0;
    const double nb = static_cast<double>(n_bins);
    // 1 - lo and 1 - hi computed from integers so the last bin's upper term is exactly 0.
    const double one_minus_lo = static_cast<double>(n_bins - bin) / nb;
    const double one_minus_hi = static_cast<double>(n_bins - bin - 1) / nb;
    return std::pow(one_minus_lo, exponent) - std::pow(one_minus_hi, exponent);
}

double log_haar_bin_probability(size_t bin, size_t n_qubits, size_t n_bins) {
    if (bin >= n_bins) {
        throw ArgumentError("bin " + std::to_string(bin) + " out of range for " + std::to_string(n_bins) + " bins");
    }
    const double exponent = std::ldexp(1.0, static_cast<int>(n_qubits)) - 1.0;
    const double log_lo = std::log(static_cast<double>(n_bins - bin) / static_cast<double>(n_bins));
    if (bin + 1 == n_bins) {
        return exponent * log_lo;
    }
    // a^E - b^E = a^E (1 - (b/a)^E)
    const double ratio = static_cast<double>(n_bins - bin - 1) / static_cast<double>(n_bins - bin);
    return exponent * log_lo + std::log1p(-std::pow(ratio, exponent));
}

double idle_baseline(size_t n_qubits, size_t n_bins) {
    return (std::ldexp(1.0, static_cast<int>(n_qubits)) - 1.0) * std::log(static_cast<double>(n_bins));
}

double kl_to_haar(const FidelityHistogram &hist, size_t n_qubits) {
    if (hist.total() == 0) {
        throw ArgumentError("empty fidelity histogram");
    }
    const double total = static_cast<double>(hist.total());
    double kl = 0;
    for (size_t b = 0; b < hist.num_bins(); ++b) {
        uint64_t c = hist.counts()[b];
        if (c == 0) {
            continue;
        }
        double p = static_cast<double>(c) / total;
        kl += p * (std::log(p) - log_haar_bin_probability(b, n_qubits, hist.num_bins()));
    }
    return kl;
}

double relative_expressibility(double expr, size_t n_qubits, size_t n_bins) {
    if (expr <= 0) {
        return std::numeric_limits<double>::infinity();
    }
    const double r = -std::log(expr / idle_baseline(n_qubits, n_bins));
    return r == 0 ? 0.0 : r;
}

size_t default_sample_count(size_t n_qubits) {
    return 1000 * (n_qubits + 1);
}

ExpressibilityResult expressibility_of(size_t n_qubits, const StateSampler &sampler, const SamplingOptions &opts) {
    if (opts.n_samples < 1) {
        throw ArgumentError("expressibility needs at least one sample pair");
    }
    std::vector<double> fidelities(opts.n_samples);
    parallel_for(opts.n_samples, opts.workers, [&](size_t i) {
        Rng rng = substream(opts.seed, {kExpressibilityStream, i});
        Statevector a = sampler(rng);
        Statevector b = sampler(rng);
        fidelities[i] = fidelity(a, b);
    });
    FidelityHistogram hist(opts.n_bins);
    for (double f : fidelities) {
        hist.add(f);
    }
    double expr = kl_to_haar(hist, n_qubits);
    return {expr, relative_expressibility(expr, n_qubits, opts.n_bins), opts.n_samples, opts.seed};
}

EntanglingResult entangling_capability_of(const StateSampler &sampler, const SamplingOptions &opts) {
    if (opts.n_samples < 1) {
        throw ArgumentError("entangling capability needs at least one sample");
    }
    std::vector<double> q(opts.n_samples);
    parallel_for(opts.n_samples, opts.workers, [&](size_t i) {
        Rng rng = substream(opts.seed, {kEntanglingStream, i});
        q[i] = meyer_wallach_q(sampler(rng));
    });
    double sum = 0;
    for (double v : q) {
        sum += v;
    }
    return {sum / static_cast<double>(opts.n_samples), opts.n_samples, opts.seed};
}

StateSampler circuit_sampler(const RotationConfiguration &config) {
    return [config](Rng &rng) {
        std::vector<double> theta(config.num_active());
        for (double &t : theta) {
            t = uniform_angle(rng);
        }
        return run_circuit(config, theta);
    };
}

ExpressibilityResult expressibility(const RotationConfiguration &config, const SamplingOptions &opts) {
    return expressibility_of(config.circuit().num_qubits(), circuit_sampler(config), opts);
}

EntanglingResult entangling_capability(const RotationConfiguration &config, const SamplingOptions &opts) {
    if (opts.n_samples < 1) {
        throw ArgumentError("entangling capability needs at least one sample");
    }
    if (config.circuit().num_qubits() < 2) {
        throw ArgumentError("entangling capability is undefined for a single qubit");
    }
    if (config.circuit().entangler_gates().empty()) {
        return {0.0, opts.n_samples, opts.seed};
    }
    return entangling_capability_of(circuit_sampler(config), opts);
}

double meyer_wallach_q(const Statevector &state) {
    const size_t n = state.num_qubits();
    if (n < 2) {
        throw ArgumentError("Meyer-Wallach measure needs at least two qubits");
    }
    double sum = 0;
    for (size_t j = 0; j < n; ++j) {
        sum += generalized_distance(project_out(state, j, 0), project_out(state, j, 1));
    }
    return 4.0 * sum / static_cast<double>(n);
}

Statevector haar_random_state(size_t n_qubits, Rng &rng) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(n_qubits) + " outside [1, 12]");
    }
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(size_t{1} << n_qubits);
    double norm = 0;
    for (auto &a : amps) {
        a = Complex(gauss(rng), gauss(rng));
        norm += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto &a : amps) {
        a *= scale;
    }
    return Statevector::from_amplitudes(std::move(amps));
}

}  // namespace pqc
