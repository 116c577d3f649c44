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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pqc/error.hpp"
#include "pqc/harness.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIo = 4;

struct Overrides {
    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<unsigned> workers;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<size_t> num_qubits;
    std::optional<size_t> layers;
    std::optional<std::string> entangler;
    std::vector<size_t> m_values;
    std::optional<size_t> circuits;
    std::optional<size_t> samples;
    std::optional<std::string> hamiltonian;
    std::vector<size_t> qubit_counts;
    std::vector<size_t> layer_counts;
    bool describe = false;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw pqc::IoError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

pqc::ExperimentConfig build_config(pqc::Experiment experiment, const Overrides &o) {
    pqc::ExperimentConfig c;
    if (!o.config_path.empty()) {
        c = pqc::parse_experiment_config(read_file(o.config_path));
    }
    c.experiment = experiment;
    if (o.seed) {
        c.seed = *o.seed;
    }
    if (o.workers) {
        c.workers = *o.workers;
    }
    if (o.out) {
        c.output_path = *o.out;
    }
    if (o.format) {
        c.format = *o.format == "json" ? pqc::OutputFormat::Json : pqc::OutputFormat::Csv;
    }
    if (o.num_qubits) {
        c.num_qubits = *o.num_qubits;
    }
    if (o.layers) {
        c.layers = *o.layers;
    }
    if (o.entangler) {
        c.entangler = pqc::parse_entangler(*o.entangler);
    }
    if (!o.m_values.empty()) {
        c.m_values = o.m_values;
    }
    if (o.circuits) {
        c.circuits_per_m = *o.circuits;
    }
    if (o.samples) {
        c.samples = *o.samples;
    }
    if (o.hamiltonian) {
        c.hamiltonian_path = *o.hamiltonian;
    }
    if (!o.qubit_counts.empty()) {
        c.qubit_counts = o.qubit_counts;
    }
    if (!o.layer_counts.empty()) {
        c.layer_counts = o.layer_counts;
    }
    return c;
}

int run(pqc::Experiment experiment, const Overrides &o) {
    try {
        pqc::ExperimentConfig c = build_config(experiment, o);
        pqc::validate(c);
        if (o.describe) {
            std::cout << pqc::describe_configurations(c);
            return 0;
        }
        auto samples = pqc::run_experiment(c);
        if (c.output_path) {
            pqc::emit(samples, *c.output_path, c.format);
        } else {
            std::cout << (c.format == pqc::OutputFormat::Csv ? pqc::to_csv(samples) : pqc::to_json(samples));
        }
        return 0;
    } catch (const pqc::CapacityError &e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const pqc::IoError &e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const pqc::ParseError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const pqc::ArgumentError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const pqc::FormatError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const pqc::ValidationError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Expressibility, entanglement and VQE sweeps for parameterized circuits"};
    app.require_subcommand(1);

    Overrides o;
    const std::vector<std::pair<std::string, pqc::Experiment>> commands = {
        {"expressibility", pqc::Experiment::Expressibility},
        {"entanglement", pqc::Experiment::Entanglement},
        {"vqe", pqc::Experiment::Vqe},
        {"qubit-sweep", pqc::Experiment::QubitSweep},
        {"photonic", pqc::Experiment::Photonic},
    };
    std::optional<pqc::Experiment> chosen;
    for (const auto &[name, experiment] : commands) {
        CLI::App *sub = app.add_subcommand(name, "run the " + name + " experiment");
        sub->add_option("--config", o.config_path, "JSON experiment config");
        sub->add_option("--seed", o.seed, "base seed");
        sub->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", o.out, "output file (stdout if omitted)");
        sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("-N,--qubits", o.num_qubits, "number of qubits");
        sub->add_option("-L,--layers", o.layers, "number of layers");
        sub->add_option("--entangler", o.entangler, "none, cnot, iswap, diamond, mc-not, mc-inot, mc-iswap");
        sub->add_option("--m", o.m_values, "rotation counts (or active phase counts)")->delimiter(',');
        sub->add_option("--circuits", o.circuits, "random circuits per m");
        sub->add_option("--samples", o.samples, "samples per circuit");
        sub->add_option("--hamiltonian", o.hamiltonian, "Pauli Hamiltonian file");
        sub->add_option("--qubit-counts", o.qubit_counts, "qubit counts for qubit-sweep")->delimiter(',');
        sub->add_option("--layer-counts", o.layer_counts, "layer counts for qubit-sweep")->delimiter(',');
        sub->add_flag("--describe", o.describe, "print the sampled configurations instead of running");
        const pqc::Experiment e = experiment;
        sub->callback([&chosen, e] { chosen = e; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }
    return run(*chosen, o);
}
