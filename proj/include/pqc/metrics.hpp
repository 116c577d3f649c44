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

#ifndef PQC_METRICS_HPP
#define PQC_METRICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "pqc/circuit.hpp"
#include "pqc/rng.hpp"
#include "pqc/statevector.hpp"

namespace pqc {

inline constexpr size_t kDefaultBins = 75;

/// Histogram of pair fidelities over n_bins equal bins of [0, 1]. Bins are [lo, hi) except
/// the last, which is closed, so F = 1 lands in bin n_bins - 1.
class FidelityHistogram {
   public:
    explicit FidelityHistogram(size_t n_bins = kDefaultBins);

    void add(double fidelity);
    size_t bin_of(double fidelity) const;

    size_t num_bins() const {
        return counts_.size();
    }
    const std::vector<uint64_t> &counts() const {
        return counts_;
    }
    uint64_t total() const {
        return total_;
    }
    /// n_bins + 1 edges, 0 first and 1 last.
    std::vector<double> edges() const;

   private:
    std::vector<uint64_t> counts_;
    uint64_t total_ = 0;
};

/// Haar probability mass of fidelity bin `bin` for states of dimension 2^n_qubits:
/// (1 - lo)^(D - 1) - (1 - hi)^(D - 1), the exact integral of (D - 1)(1 - F)^(D - 2).
double haar_bin_probability(size_t bin, size_t n_qubits, size_t n_bins = kDefaultBins);

/// Natural log of haar_bin_probability, accurate where the probability itself underflows
/// (the top bin for N >= 8).
double log_haar_bin_probability(size_t bin, size_t n_qubits, size_t n_bins = kDefaultBins);

/// Expressibility of the idle circuit, (2^N - 1) ln(n_bins).
double idle_baseline(size_t n_qubits, size_t n_bins = kDefaultBins);

/// KL divergence of the histogram from the binned Haar distribution. Empty bins contribute 0.
double kl_to_haar(const FidelityHistogram &hist, size_t n_qubits);

/// -ln(expr / idle_baseline). +infinity when expr == 0.
double relative_expressibility(double expr, size_t n_qubits, size_t n_bins = kDefaultBins);

struct ExpressibilityResult {
    double expr;
    double relative;
    size_t n_samples;
    uint64_t seed;
};

struct EntanglingResult {
    double capability;
    size_t n_samples;
    uint64_t seed;
};

struct SamplingOptions {
    size_t n_samples;
    uint64_t seed = 0;
    unsigned workers = 1;
    size_t n_bins = kDefaultBins;
};

/// 1000(N + 1).
size_t default_sample_count(size_t n_qubits);

/// Draws one random state. Called with a generator private to the current sample.
using StateSampler = std::function<Statevector(Rng &)>;

/// Expressibility of the ensemble produced by `sampler`. Sample i draws both states of its pair
/// from substream (seed, i), so the result does not depend on the worker count.
ExpressibilityResult expressibility_of(size_t n_qubits, const StateSampler &sampler, const SamplingOptions &opts);

/// Mean Meyer-Wallach Q over opts.n_samples draws, summed in sample order.
EntanglingResult entangling_capability_of(const StateSampler &sampler, const SamplingOptions &opts);

/// Samples every active angle uniformly on [0, 2pi).
StateSampler circuit_sampler(const RotationConfiguration &config);

/// Throws ArgumentError if opts.n_samples < 1.
ExpressibilityResult expressibility(const RotationConfiguration &config, const SamplingOptions &opts);

/// A template without entangling gates yields capability 0 exactly, since it only prepares
/// product states.
EntanglingResult entangling_capability(const RotationConfiguration &config, const SamplingOptions &opts);

/// (4/n) sum_j D(iota_j(0) psi, iota_j(1) psi). Throws ArgumentError for a single qubit.
double meyer_wallach_q(const Statevector &state);

/// Normalized vector of independent standard complex Gaussians.
Statevector haar_random_state(size_t n_qubits, Rng &rng);

}  // namespace pqc

#endif
