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

#ifndef PQC_HARNESS_HPP
#define PQC_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqc/gates.hpp"
#include "pqc/metrics.hpp"

namespace pqc {

enum class Experiment { Expressibility, Entanglement, Vqe, QubitSweep, Photonic };

std::string_view to_string(Experiment e);
/// Accepts "expressibility", "entanglement", "vqe", "qubit_sweep" (or "qubit-sweep"), "photonic".
Experiment parse_experiment(std::string_view name);

enum class OutputFormat { Csv, Json };

/// Everything needed to reproduce one run of the harness.
struct ExperimentConfig {
    Experiment experiment = Experiment::Expressibility;
    size_t num_qubits = 4;
    size_t layers = 1;
    EntanglerKind entangler = EntanglerKind::None;
    std::vector<size_t> m_values;
    size_t circuits_per_m = 100;
    /// Fidelity pairs (expressibility) or parameter draws (entanglement). 0 means 1000(N + 1).
    size_t samples = 0;
    uint64_t seed = 0;
    size_t n_bins = kDefaultBins;

    /// vqe
    std::optional<std::filesystem::path> hamiltonian_path;
    size_t restarts = 5;
    size_t max_evaluations = 20000;

    /// qubit_sweep
    std::vector<size_t> qubit_counts;
    std::vector<size_t> layer_counts{1, 2, 3};
    std::vector<EntanglerKind> entanglers;
    bool include_photonic = true;

    /// photonic; m_values holds the active phase counts and num_qubits sets d = 2^N.
    bool dft_stage = false;
    bool photonic_entanglement = false;

    std::optional<std::filesystem::path> output_path;
    OutputFormat format = OutputFormat::Csv;
    unsigned workers = 1;

    size_t effective_samples(size_t n_qubits) const {
        return samples ? samples : default_sample_count(n_qubits);
    }
};

/// Parses the JSON config format. Unknown keys are rejected. Throws ParseError on malformed
/// JSON and ArgumentError on invalid values.
ExperimentConfig parse_experiment_config(std::string_view json_text);

/// Throws ArgumentError (or CapacityError for N above the sweep limit) before any work starts.
void validate(const ExperimentConfig &config);

/// One row of harness output.
struct MetricSample {
    std::string experiment;
    size_t num_qubits = 0;
    size_t layers = 0;
    std::string entangler;
    size_t m = 0;
    size_t circuit_index = 0;
    std::string metric;
    double value = 0;
    uint64_t seed = 0;

    bool operator==(const MetricSample &) const = default;
};

inline constexpr size_t kMaxSweepQubits = 10;

/// For each m, draws circuits_per_m configurations with seeds derived from (seed, m, index)
/// and evaluates the experiment's metric on each. Rows are ordered by (m, circuit_index, metric)
/// regardless of the worker count. Handles the expressibility, entanglement, vqe, and photonic
/// experiments.
std::vector<MetricSample> run_m_sweep(const ExperimentConfig &config);

/// Fully rotated circuits (m = M) for every qubit count, compatible entangler, and layer count,
/// plus the photonic pulse shaper at d = 2^N when include_photonic is set.
std::vector<MetricSample> run_qubit_sweep(const ExperimentConfig &config);

/// Dispatches on config.experiment.
std::vector<MetricSample> run_experiment(const ExperimentConfig &config);

/// Circuit configurations drawn by an m-sweep, in row order, as key=value records separated by
/// blank lines.
std::string describe_configurations(const ExperimentConfig &config);

inline constexpr std::string_view kCsvHeader = "experiment,N,L,entangler,m,circuit_index,metric,value,seed";

/// Header line plus one line per sample; values carry 9 significant digits.
std::string to_csv(const std::vector<MetricSample> &samples);
/// Array of records with the CSV column names as keys.
std::string to_json(const std::vector<MetricSample> &samples);
/// Throws ParseError with the offending line number.
std::vector<MetricSample> parse_csv(std::string_view text);
std::vector<MetricSample> parse_json(std::string_view text);

/// Writes the samples to path. Throws IoError naming the path on failure.
void emit(const std::vector<MetricSample> &samples, const std::filesystem::path &path, OutputFormat format);

}  // namespace pqc

#endif
