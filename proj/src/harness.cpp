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

#include "pqc/harness.hpp"

#include <bit>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pqc/circuit.hpp"
#include "pqc/error.hpp"
#include "pqc/parallel.hpp"
#include "pqc/pauli.hpp"
#include "pqc/photonics.hpp"
#include "pqc/vqe.hpp"

namespace pqc {

namespace {

constexpr uint64_t kCircuitStream = 0x43697263;  // "Circ"
constexpr uint64_t kConfigStream = 0x436f6e66;   // "Conf"
constexpr uint64_t kSweepStream = 0x53776570;    // "Swep"

using json = nlohmann::json;

}  // namespace

std::string_view to_string(Experiment e) {
    switch (e) {
        case Experiment::Expressibility:
            return "expressibility";
        case Experiment::Entanglement:
            return "entanglement";
        case Experiment::Vqe:
            return "vqe";
        case Experiment::QubitSweep:
            return "qubit_sweep";
        case Experiment::Photonic:
            return "photonic";
    }
    return "?";
}

Experiment parse_experiment(std::string_view name) {
    if (name == "expressibility") {
        return Experiment::Expressibility;
    }
    if (name == "entanglement") {
        return Experiment::Entanglement;
    }
    if (name == "vqe") {
        return Experiment::Vqe;
    }
    if (name == "qubit_sweep" || name == "qubit-sweep") {
        return Experiment::QubitSweep;
    }
    if (name == "photonic") {
        return Experiment::Photonic;
    }
    throw ArgumentError("unknown experiment '" + std::string(name) + "'");
}

namespace {

template <typename T>
T get_as(const json &j, const char *key) {
    try {
        return j.get<T>();
    } catch (const json::exception &) {
        throw ArgumentError(std::string("config key '") + key + "' has the wrong type");
    }
}

std::vector<size_t> get_size_list(const json &j, const char *key) {
    if (!j.is_array()) {
        throw ArgumentError(std::string("config key '") + key + "' must be an array of non-negative integers");
    }
    std::vector<size_t> out;
    for (const auto &v : j) {
        if (!v.is_number_unsigned()) {
            throw ArgumentError(std::string("config key '") + key + "' must be an array of non-negative integers");
        }
        out.push_back(v.get<size_t>());
    }
    return out;
}

size_t get_size(const json &j, const char *key) {
    if (!j.is_number_unsigned()) {
        throw ArgumentError(std::string("config key '") + key + "' must be a non-negative integer");
    }
    return j.get<size_t>();
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON config: ") + e.what(), 0);
    }
    if (!root.is_object()) {
        throw ArgumentError("config must be a JSON object");
    }
    ExperimentConfig c;
    bool m_all = false;
    for (const auto &[key, v] : root.items()) {
        const char *k = key.c_str();
        if (key == "experiment") {
            c.experiment = parse_experiment(get_as<std::string>(v, k));
        } else if (key == "N") {
            c.num_qubits = get_size(v, k);
        } else if (key == "L") {
            c.layers = get_size(v, k);
        } else if (key == "entangler") {
            c.entangler = parse_entangler(get_as<std::string>(v, k));
        } else if (key == "m_values") {
            if (v.is_string() && v.get<std::string>() == "all") {
                m_all = true;
            } else {
                c.m_values = get_size_list(v, k);
            }
        } else if (key == "circuits_per_m") {
            c.circuits_per_m = get_size(v, k);
        } else if (key == "samples") {
            c.samples = get_size(v, k);
        } else if (key == "seed") {
            c.seed = get_as<uint64_t>(v, k);
        } else if (key == "n_bins") {
            c.n_bins = get_size(v, k);
        } else if (key == "hamiltonian_path") {
            c.hamiltonian_path = get_as<std::string>(v, k);
        } else if (key == "restarts") {
            c.restarts = get_size(v, k);
        } else if (key == "max_evaluations") {
            c.max_evaluations = get_size(v, k);
        } else if (key == "qubit_counts") {
            c.qubit_counts = get_size_list(v, k);
        } else if (key == "layer_counts") {
            c.layer_counts = get_size_list(v, k);
        } else if (key == "entanglers") {
            if (!v.is_array()) {
                throw ArgumentError("config key 'entanglers' must be an array of names");
            }
            for (const auto &e : v) {
                c.entanglers.push_back(parse_entangler(get_as<std::string>(e, k)));
            }
        } else if (key == "include_photonic") {
            c.include_photonic = get_as<bool>(v, k);
        } else if (key == "dft_stage") {
            c.dft_stage = get_as<bool>(v, k);
        } else if (key == "photonic_entanglement") {
            c.photonic_entanglement = get_as<bool>(v, k);
        } else if (key == "output_path") {
            c.output_path = get_as<std::string>(v, k);
        } else if (key == "format") {
            std::string f = get_as<std::string>(v, k);
            if (f == "csv") {
                c.format = OutputFormat::Csv;
            } else if (f == "json") {
                c.format = OutputFormat::Json;
            } else {
                throw ArgumentError("format must be 'csv' or 'json'");
            }
        } else if (key == "workers") {
            c.workers = static_cast<unsigned>(get_size(v, k));
        } else {
            throw ArgumentError("unknown config key '" + key + "'");
        }
    }
    if (m_all) {
        size_t top = c.experiment == Experiment::Photonic ? (size_t{1} << std::min<size_t>(c.num_qubits, 12))
                                                          : max_rotations(c.num_qubits, c.layers);
        for (size_t m = 0; m <= top; ++m) {
            c.m_values.push_back(m);
        }
    }
    return c;
}

void validate(const ExperimentConfig &c) {
    if (c.n_bins < 2) {
        throw ArgumentError("n_bins must be at least 2");
    }
    if (c.circuits_per_m < 1) {
        throw ArgumentError("circuits_per_m must be at least 1");
    }
    if (c.experiment == Experiment::QubitSweep) {
        if (c.qubit_counts.empty()) {
            throw ArgumentError("qubit_sweep needs a non-empty qubit_counts list");
        }
        for (size_t n : c.qubit_counts) {
            if (n > kMaxSweepQubits) {
                throw CapacityError("qubit sweep is limited to N <= 10, got " + std::to_string(n));
            }
            if (n < 2) {
                throw ArgumentError("qubit sweep needs N >= 2 for the entangling capability");
            }
        }
        for (size_t l : c.layer_counts) {
            if (l < 1) {
                throw ArgumentError("layer counts must be >= 1");
            }
        }
        return;
    }
    if (c.num_qubits > kMaxSweepQubits) {
        throw CapacityError("experiments are limited to N <= 10, got " + std::to_string(c.num_qubits));
    }
    if (c.num_qubits < 1) {
        throw ArgumentError("N must be at least 1");
    }
    if (c.m_values.empty()) {
        throw ArgumentError("m_values must not be empty");
    }
    if (c.experiment == Experiment::Photonic) {
        const size_t d = size_t{1} << c.num_qubits;
        for (size_t k : c.m_values) {
            if (k > d) {
                throw ArgumentError("active phase count " + std::to_string(k) + " exceeds d = " + std::to_string(d));
            }
        }
        if (c.photonic_entanglement && c.num_qubits < 2) {
            throw ArgumentError("entangling capability needs N >= 2");
        }
        return;
    }
    if (c.layers < 1) {
        throw ArgumentError("L must be at least 1");
    }
    check_entangler_compatible(c.entangler, c.num_qubits);
    const size_t m_max = max_rotations(c.num_qubits, c.layers);
    for (size_t m : c.m_values) {
        if (m > m_max) {
            throw ArgumentError("m = " + std::to_string(m) + " exceeds M = N(3L+1) = " + std::to_string(m_max));
        }
    }
    if (c.experiment == Experiment::Entanglement && c.num_qubits < 2) {
        throw ArgumentError("entangling capability needs N >= 2");
    }
    if (c.experiment == Experiment::Vqe && !c.hamiltonian_path) {
        throw ArgumentError("vqe needs hamiltonian_path");
    }
}

namespace {

uint64_t derived_seed(uint64_t base, std::initializer_list<uint64_t> keys) {
    Rng r = substream(base, keys);
    return r();
}

MetricSample row(const ExperimentConfig &c, size_t n, size_t l, std::string_view entangler, size_t m, size_t idx,
                 std::string metric, double value, uint64_t seed) {
    return {std::string(to_string(c.experiment)), n, l, std::string(entangler), m, idx, std::move(metric), value,
            seed};
}

std::string_view photonic_label(bool dft_stage) {
    return dft_stage ? "ps-dft-ps" : "ps";
}

std::vector<MetricSample> evaluate_circuit(const ExperimentConfig &c, size_t m, size_t idx, uint64_t seed,
                                           const PauliHamiltonian *h, double exact) {
    std::vector<MetricSample> rows;
    const SamplingOptions opts{c.effective_samples(c.num_qubits), seed, 1, c.n_bins};
    Rng cfg_rng = substream(seed, {kConfigStream});

    if (c.experiment == Experiment::Photonic) {
        const PhotonicKind kind = c.dft_stage ? PhotonicKind::PsDftPs : PhotonicKind::Ps;
        PhotonicCircuit circuit = random_photonic_circuit(kind, size_t{1} << c.num_qubits, m, cfg_rng);
        const auto label = photonic_label(c.dft_stage);
        const size_t stages = circuit.num_stages();
        StateSampler sampler = photonic_sampler(circuit);
        ExpressibilityResult e = expressibility_of(c.num_qubits, sampler, opts);
        rows.push_back(row(c, c.num_qubits, stages, label, m, idx, "expressibility", e.expr, seed));
        rows.push_back(row(c, c.num_qubits, stages, label, m, idx, "relative_expressibility", e.relative, seed));
        if (c.photonic_entanglement) {
            EntanglingResult q = entangling_capability_of(sampler, opts);
            rows.push_back(row(c, c.num_qubits, stages, label, m, idx, "entangling_capability", q.capability, seed));
        }
        return rows;
    }

    CircuitTemplate tmpl(c.num_qubits, c.layers, c.entangler);
    RotationConfiguration config = random_configuration(tmpl, m, cfg_rng);
    const auto ent = to_string(c.entangler);
    switch (c.experiment) {
        case Experiment::Expressibility: {
            ExpressibilityResult e = expressibility(config, opts);
            rows.push_back(row(c, c.num_qubits, c.layers, ent, m, idx, "expressibility", e.expr, seed));
            rows.push_back(row(c, c.num_qubits, c.layers, ent, m, idx, "relative_expressibility", e.relative, seed));
            break;
        }
        case Experiment::Entanglement: {
            EntanglingResult q = entangling_capability(config, opts);
            rows.push_back(row(c, c.num_qubits, c.layers, ent, m, idx, "entangling_capability", q.capability, seed));
            break;
        }
        case Experiment::Vqe: {
            VqeOptions vo;
            vo.restarts = c.restarts;
            vo.optimizer.max_evaluations = c.max_evaluations;
            VqeOutcome out = vqe_minimize(config, *h, vo, seed, exact);
            rows.push_back(row(c, c.num_qubits, c.layers, ent, m, idx, "best_energy", out.best_energy, seed));
            rows.push_back(row(c, c.num_qubits, c.layers, ent, m, idx, "energy_error", out.energy_error, seed));
            break;
        }
        default:
            throw ArgumentError("experiment not handled by an m-sweep");
    }
    return rows;
}

std::vector<MetricSample> flatten(std::vector<std::vector<MetricSample>> &&parts) {
    std::vector<MetricSample> out;
    for (auto &p : parts) {
        for (auto &r : p) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

std::vector<MetricSample> run_m_sweep(const ExperimentConfig &c) {
    validate(c);
    if (c.experiment == Experiment::QubitSweep) {
        throw ArgumentError("qubit_sweep is not an m-sweep");
    }
    std::optional<PauliHamiltonian> h;
    double exact = 0;
    if (c.experiment == Experiment::Vqe) {
        h = load_hamiltonian(*c.hamiltonian_path);
        if (h->num_qubits != c.num_qubits) {
            throw ArgumentError("Hamiltonian has " + std::to_string(h->num_qubits) + " qubits but N = " +
                                std::to_string(c.num_qubits));
        }
        exact = exact_ground_energy(*h);
    }
    const size_t per_m = c.circuits_per_m;
    const size_t tasks = c.m_values.size() * per_m;
    std::vector<std::vector<MetricSample>> parts(tasks);
    parallel_for(tasks, c.workers, [&](size_t t) {
        const size_t m = c.m_values[t / per_m];
        const size_t idx = t % per_m;
        const uint64_t seed = derived_seed(c.seed, {kCircuitStream, m, idx});
        parts[t] = evaluate_circuit(c, m, idx, seed, h ? &*h : nullptr, exact);
    });
    return flatten(std::move(parts));
}

std::vector<MetricSample> run_qubit_sweep(const ExperimentConfig &c) {
    validate(c);
    struct Task {
        size_t n;
        std::optional<EntanglerKind> kind;  // empty: photonic pulse shaper
        size_t layers;
        size_t idx;
    };
    const std::vector<EntanglerKind> &kinds = c.entanglers.empty() ? all_entanglers() : c.entanglers;
    std::vector<Task> tasks;
    for (size_t n : c.qubit_counts) {
        for (EntanglerKind k : kinds) {
            try {
                check_entangler_compatible(k, n);
            } catch (const ArgumentError &) {
                continue;
            }
            for (size_t l : c.layer_counts) {
                for (size_t i = 0; i < c.circuits_per_m; ++i) {
                    tasks.push_back({n, k, l, i});
                }
            }
        }
        if (c.include_photonic) {
            for (size_t i = 0; i < c.circuits_per_m; ++i) {
                tasks.push_back({n, std::nullopt, 1, i});
            }
        }
    }
    std::vector<std::vector<MetricSample>> parts(tasks.size());
    parallel_for(tasks.size(), c.workers, [&](size_t t) {
        const Task &task = tasks[t];
        const uint64_t kind_key = task.kind ? static_cast<uint64_t>(*task.kind) : 0xff;
        const uint64_t seed = derived_seed(c.seed, {kSweepStream, task.n, kind_key, task.layers, task.idx});
        const SamplingOptions opts{c.effective_samples(task.n), seed, 1, c.n_bins};
        auto &out = parts[t];
        if (!task.kind) {
            PhotonicCircuit circuit = full_photonic_circuit(PhotonicKind::Ps, size_t{1} << task.n);
            StateSampler sampler = photonic_sampler(circuit);
            ExpressibilityResult e = expressibility_of(task.n, sampler, opts);
            EntanglingResult q = entangling_capability_of(sampler, opts);
            out.push_back(row(c, task.n, 1, "ps", 0, task.idx, "relative_expressibility", e.relative, seed));
            out.push_back(row(c, task.n, 1, "ps", 0, task.idx, "entangling_capability", q.capability, seed));
            return;
        }
        CircuitTemplate tmpl(task.n, task.layers, *task.kind);
        const size_t m = tmpl.max_rotations();
        std::vector<size_t> all(m);
        for (size_t s = 0; s < m; ++s) {
            all[s] = s;
        }
        RotationConfiguration config(tmpl, std::move(all));
        ExpressibilityResult e = expressibility(config, opts);
        EntanglingResult q = entangling_capability(config, opts);
        const auto ent = to_string(*task.kind);
        out.push_back(row(c, task.n, task.layers, ent, m, task.idx, "relative_expressibility", e.relative, seed));
        out.push_back(row(c, task.n, task.layers, ent, m, task.idx, "entangling_capability", q.capability, seed));
    });
    return flatten(std::move(parts));
}

std::vector<MetricSample> run_experiment(const ExperimentConfig &config) {
    if (config.experiment == Experiment::QubitSweep) {
        return run_qubit_sweep(config);
    }
    return run_m_sweep(config);
}

std::string describe_configurations(const ExperimentConfig &c) {
    validate(c);
    if (c.experiment == Experiment::QubitSweep || c.experiment == Experiment::Photonic) {
        return "";
    }
    std::string out;
    CircuitTemplate tmpl(c.num_qubits, c.layers, c.entangler);
    for (size_t m : c.m_values) {
        for (size_t idx = 0; idx < c.circuits_per_m; ++idx) {
            const uint64_t seed = derived_seed(c.seed, {kCircuitStream, m, idx});
            Rng cfg_rng = substream(seed, {kConfigStream});
            if (!out.empty()) {
                out += '\n';
            }
            out += "# circuit_index=" + std::to_string(idx) + '\n';
            out += format_configuration(random_configuration(tmpl, m, cfg_rng), seed);
        }
    }
    return out;
}

namespace {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

double round_to_9_digits(double v) {
    return std::strtod(format_value(v).c_str(), nullptr);
}

}  // namespace

std::string to_csv(const std::vector<MetricSample> &samples) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto &s : samples) {
        out += s.experiment + ',' + std::to_string(s.num_qubits) + ',' + std::to_string(s.layers) + ',' +
               s.entangler + ',' + std::to_string(s.m) + ',' + std::to_string(s.circuit_index) + ',' + s.metric +
               ',' + format_value(s.value) + ',' + std::to_string(s.seed) + '\n';
    }
    return out;
}

std::string to_json(const std::vector<MetricSample> &samples) {
    json arr = json::array();
    for (const auto &s : samples) {
        json rec;
        rec["experiment"] = s.experiment;
        rec["N"] = s.num_qubits;
        rec["L"] = s.layers;
        rec["entangler"] = s.entangler;
        rec["m"] = s.m;
        rec["circuit_index"] = s.circuit_index;
        rec["metric"] = s.metric;
        // Rounded through the 9-digit decimal form so the shortest round-trip print matches the CSV.
        if (std::isfinite(s.value)) {
            rec["value"] = round_to_9_digits(s.value);
        } else {
            rec["value"] = format_value(s.value);
        }
        rec["seed"] = s.seed;
        arr.push_back(std::move(rec));
    }
    return arr.dump(1) + '\n';
}

namespace {

template <typename T>
T parse_unsigned_field(const std::string &s, size_t line, const char *name) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(std::string("invalid ") + name + " '" + s + "'", line);
    }
    return v;
}

double parse_double_field(const std::string &s, size_t line) {
    if (s.empty()) {
        throw ParseError("empty value", line);
    }
    char *end = nullptr;
    errno = 0;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
        throw ParseError("invalid value '" + s + "'", line);
    }
    return v;
}

}  // namespace

std::vector<MetricSample> parse_csv(std::string_view text) {
    std::vector<MetricSample> out;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line_no == 1) {
            if (line != kCsvHeader) {
                throw ParseError("expected header '" + std::string(kCsvHeader) + "'", 1);
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::string field;
        std::istringstream fields(line);
        while (std::getline(fields, field, ',')) {
            f.push_back(field);
        }
        if (!line.empty() && line.back() == ',') {
            f.emplace_back();
        }
        if (f.size() != 9) {
            throw ParseError("expected 9 fields, got " + std::to_string(f.size()), line_no);
        }
        MetricSample s;
        s.experiment = f[0];
        s.num_qubits = parse_unsigned_field<size_t>(f[1], line_no, "N");
        s.layers = parse_unsigned_field<size_t>(f[2], line_no, "L");
        s.entangler = f[3];
        s.m = parse_unsigned_field<size_t>(f[4], line_no, "m");
        s.circuit_index = parse_unsigned_field<size_t>(f[5], line_no, "circuit_index");
        s.metric = f[6];
        s.value = parse_double_field(f[7], line_no);
        s.seed = parse_unsigned_field<uint64_t>(f[8], line_no, "seed");
        out.push_back(std::move(s));
    }
    if (line_no == 0) {
        throw ParseError("missing header", 0);
    }
    return out;
}

std::vector<MetricSample> parse_json(std::string_view text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!arr.is_array()) {
        throw ParseError("expected a JSON array of records", 0);
    }
    std::vector<MetricSample> out;
    try {
        for (const auto &rec : arr) {
            MetricSample s;
            s.experiment = rec.at("experiment").get<std::string>();
            s.num_qubits = rec.at("N").get<size_t>();
            s.layers = rec.at("L").get<size_t>();
            s.entangler = rec.at("entangler").get<std::string>();
            s.m = rec.at("m").get<size_t>();
            s.circuit_index = rec.at("circuit_index").get<size_t>();
            s.metric = rec.at("metric").get<std::string>();
            const json &v = rec.at("value");
            s.value = v.is_string() ? parse_double_field(v.get<std::string>(), 0) : v.get<double>();
            s.seed = rec.at("seed").get<uint64_t>();
            out.push_back(std::move(s));
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed record: ") + e.what(), 0);
    }
    return out;
}

void emit(const std::vector<MetricSample> &samples, const std::filesystem::path &path, OutputFormat format) {
    const std::string body = format == OutputFormat::Csv ? to_csv(samples) : to_json(samples);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << body;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace pqc
