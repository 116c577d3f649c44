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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "pqc/circuit.hpp"
#include "pqc/error.hpp"

using namespace pqc;

namespace {

const std::string kDataDir = PQC_DATA_DIR;

ExperimentConfig small_config(Experiment e) {
    ExperimentConfig c;
    c.experiment = e;
    c.num_qubits = 3;
    c.layers = 2;
    c.entangler = EntanglerKind::CnotChain;
    c.m_values = {0, 5, 21};
    c.circuits_per_m = 3;
    c.samples = 200;
    c.seed = 42;
    return c;
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::path(::testing::TempDir()) / name;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string &args) {
    std::string cmd = std::string(PQCSAT_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(experiment_config, parse_json) {
    ExperimentConfig c = parse_experiment_config(R"({
        "experiment": "entanglement", "N": 4, "L": 2, "entangler": "diamond",
        "m_values": [0, 10, 25], "circuits_per_m": 7, "samples": 300, "seed": 9,
        "workers": 2, "format": "json", "output_path": "out.json"
    })");
    EXPECT_EQ(c.experiment, Experiment::Entanglement);
    EXPECT_EQ(c.num_qubits, 4u);
    EXPECT_EQ(c.layers, 2u);
    EXPECT_EQ(c.entangler, EntanglerKind::Diamond);
    EXPECT_EQ(c.m_values, (std::vector<size_t>{0, 10, 25}));
    EXPECT_EQ(c.circuits_per_m, 7u);
    EXPECT_EQ(c.effective_samples(4), 300u);
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.workers, 2u);
    EXPECT_EQ(c.format, OutputFormat::Json);
    EXPECT_EQ(c.output_path->string(), "out.json");
}

TEST(experiment_config, defaults) {
    ExperimentConfig c = parse_experiment_config(R"({"m_values": "all", "N": 2, "L": 1})");
    EXPECT_EQ(c.circuits_per_m, 100u);
    EXPECT_EQ(c.effective_samples(2), 3000u);
    EXPECT_EQ(c.n_bins, 75u);
    EXPECT_EQ(c.m_values.size(), 9u);
    EXPECT_EQ(c.m_values.back(), 8u);
}

TEST(experiment_config, rejects_bad_input) {
    EXPECT_THROW(parse_experiment_config(R"({"colour": 3})"), ArgumentError);
    EXPECT_THROW(parse_experiment_config(R"({"N": -1})"), ArgumentError);
    EXPECT_THROW(parse_experiment_config(R"({"N": "four"})"), ArgumentError);
    EXPECT_THROW(parse_experiment_config(R"({"entangler": "toffoli"})"), ArgumentError);
    EXPECT_THROW(parse_experiment_config(R"({"experiment": "magic"})"), ArgumentError);
    EXPECT_THROW(parse_experiment_config(R"({"format": "xml"})"), ArgumentError);
    EXPECT_THROW(parse_experiment_config("{not json"), ParseError);
    EXPECT_THROW(parse_experiment_config("[1, 2]"), ArgumentError);
}

TEST(validate, m_range_and_capacity) {
    ExperimentConfig c = small_config(Experiment::Expressibility);
    c.m_values = {0, 22};
    EXPECT_THROW(validate(c), ArgumentError);
    EXPECT_THROW(run_m_sweep(c), ArgumentError);
    c.m_values = {21};
    c.circuits_per_m = 0;
    EXPECT_THROW(validate(c), ArgumentError);
    c.circuits_per_m = 1;
    c.num_qubits = 11;
    EXPECT_THROW(validate(c), CapacityError);
    c.num_qubits = 3;
    c.entangler = EntanglerKind::Diamond;
    EXPECT_THROW(validate(c), ArgumentError);

    ExperimentConfig v = small_config(Experiment::Vqe);
    EXPECT_THROW(validate(v), ArgumentError);

    ExperimentConfig q = small_config(Experiment::QubitSweep);
    q.qubit_counts = {2, 11};
    EXPECT_THROW(validate(q), CapacityError);

    ExperimentConfig p = small_config(Experiment::Photonic);
    p.m_values = {9};
    EXPECT_THROW(validate(p), ArgumentError);
}

TEST(run_m_sweep, idle_rows_have_zero_relative) {
    ExperimentConfig c = small_config(Experiment::Expressibility);
    c.entangler = EntanglerKind::None;
    c.m_values = {0};
    auto rows = run_m_sweep(c);
    ASSERT_EQ(rows.size(), 6u);
    for (const auto &r : rows) {
        EXPECT_EQ(r.experiment, "expressibility");
        EXPECT_EQ(r.m, 0u);
        if (r.metric == "relative_expressibility") {
            EXPECT_EQ(r.value, 0.0);
        } else {
            EXPECT_EQ(r.metric, "expressibility");
            EXPECT_NEAR(r.value, idle_baseline(3), 1e-9);
        }
    }
}

TEST(run_m_sweep, row_layout_and_revalidation) {
    ExperimentConfig c = small_config(Experiment::Entanglement);
    auto rows = run_m_sweep(c);
    ASSERT_EQ(rows.size(), c.m_values.size() * c.circuits_per_m);
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        EXPECT_EQ(r.m, c.m_values[i / 3]);
        EXPECT_EQ(r.circuit_index, i % 3);
        EXPECT_EQ(r.metric, "entangling_capability");
        EXPECT_EQ(r.entangler, "cnot");
        EXPECT_LE(r.m, max_rotations(r.num_qubits, r.layers));
        EXPECT_GE(r.value, 0.0);
        EXPECT_LE(r.value, 1.0);
    }
    // Distinct circuits get distinct seeds.
    EXPECT_NE(rows[0].seed, rows[1].seed);
}

TEST(run_m_sweep, seeds_reproduce_configurations) {
    ExperimentConfig c = small_config(Experiment::Expressibility);
    c.m_values = {5};
    c.circuits_per_m = 2;
    std::string described = describe_configurations(c);
    EXPECT_NE(described.find("m=5"), std::string::npos);
    auto rows = run_m_sweep(c);
    EXPECT_NE(described.find("seed=" + std::to_string(rows[0].seed)), std::string::npos);
    EXPECT_NE(described.find("seed=" + std::to_string(rows.back().seed)), std::string::npos);
}

TEST(run_m_sweep, deterministic_across_workers) {
    ExperimentConfig c = small_config(Experiment::Expressibility);
    c.workers = 1;
    std::string one = to_csv(run_m_sweep(c));
    c.workers = 3;
    std::string three = to_csv(run_m_sweep(c));
    c.workers = 8;
    std::string eight = to_csv(run_m_sweep(c));
    EXPECT_EQ(one, three);
    EXPECT_EQ(one, eight);
    c.seed = 43;
    EXPECT_NE(one, to_csv(run_m_sweep(c)));
}

TEST(run_m_sweep, vqe_rows) {
    ExperimentConfig c;
    c.experiment = Experiment::Vqe;
    c.num_qubits = 4;
    c.layers = 1;
    c.entangler = EntanglerKind::CnotChain;
    c.m_values = {4};
    c.circuits_per_m = 2;
    c.restarts = 1;
    c.max_evaluations = 400;
    c.hamiltonian_path = kDataDir + "/lih_4q.ham";
    auto rows = run_m_sweep(c);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].metric, "best_energy");
    EXPECT_EQ(rows[1].metric, "energy_error");
    EXPECT_GE(rows[1].value, 0.0);
    EXPECT_GE(rows[0].value, -7.941994498016287 - 1e-9);

    c.num_qubits = 3;
    c.m_values = {2};
    EXPECT_THROW(run_m_sweep(c), ArgumentError);
    c.num_qubits = 4;
    c.hamiltonian_path = kDataDir + "/missing.ham";
    EXPECT_THROW(run_m_sweep(c), IoError);
}

TEST(run_m_sweep, photonic_rows) {
    ExperimentConfig c;
    c.experiment = Experiment::Photonic;
    c.num_qubits = 3;
    c.m_values = {0, 8};
    c.circuits_per_m = 2;
    c.samples = 200;
    c.dft_stage = true;
    c.photonic_entanglement = true;
    auto rows = run_m_sweep(c);
    ASSERT_EQ(rows.size(), 12u);
    EXPECT_EQ(rows[0].entangler, "ps-dft-ps");
    EXPECT_EQ(rows[0].layers, 2u);
    EXPECT_EQ(rows[0].num_qubits, 3u);
    EXPECT_EQ(rows[1].metric, "relative_expressibility");
    EXPECT_EQ(rows[1].value, 0.0);
    EXPECT_EQ(rows[2].metric, "entangling_capability");
}

TEST(run_qubit_sweep, series) {
    ExperimentConfig c;
    c.experiment = Experiment::QubitSweep;
    c.qubit_counts = {2, 4};
    c.layer_counts = {1};
    c.circuits_per_m = 1;
    c.samples = 100;
    auto rows = run_qubit_sweep(c);
    std::set<std::string> at2, at4;
    for (const auto &r : rows) {
        (r.num_qubits == 2 ? at2 : at4).insert(r.entangler);
        if (r.entangler == "none" && r.metric == "entangling_capability") {
            EXPECT_EQ(r.value, 0.0);
        }
        if (r.entangler == "ps") {
            EXPECT_EQ(r.m, 0u);
        } else {
            EXPECT_EQ(r.m, max_rotations(r.num_qubits, r.layers));
        }
    }
    EXPECT_EQ(at2.count("diamond"), 0u);
    EXPECT_EQ(at2.count("mc-iswap"), 0u);
    EXPECT_EQ(at4.size(), 8u);
    EXPECT_EQ(at2.count("ps"), 1u);
}

TEST(csv, examples) {
    EXPECT_EQ(to_csv({}), std::string(kCsvHeader) + "\n");
    MetricSample s{"expressibility", 4, 1, "none", 16, 0, "relative_expressibility", 5.8123456789123, 7};
    std::string one = to_csv({s});
    EXPECT_EQ(one, std::string(kCsvHeader) + "\nexpressibility,4,1,none,16,0,relative_expressibility,5.81234568,7\n");
    EXPECT_TRUE(parse_csv(to_csv({})).empty());
}

TEST(csv, round_trip) {
    std::vector<MetricSample> rows = {
        {"expressibility", 4, 2, "diamond", 25, 3, "expressibility", 0.0123456789, 18446744073709551615ull},
        {"entanglement", 2, 1, "cnot", 0, 0, "entangling_capability", 0.0, 0},
        {"vqe", 4, 4, "cnot", 52, 19, "energy_error", 1.5e-7, 5},
        {"photonic", 4, 1, "ps", 16, 1, "relative_expressibility", std::numeric_limits<double>::infinity(), 1},
    };
    EXPECT_EQ(parse_csv(to_csv(rows)), rows);
    auto json_rows = parse_json(to_json(rows));
    EXPECT_EQ(json_rows, rows);
}

TEST(csv, nine_significant_digits) {
    MetricSample s{"expressibility", 4, 1, "none", 1, 0, "expressibility", 1.0 / 3.0, 1};
    auto back = parse_csv(to_csv({s}));
    EXPECT_EQ(back[0].value, 0.333333333);
    auto back_json = parse_json(to_json({s}));
    EXPECT_EQ(back_json[0].value, 0.333333333);
}

TEST(csv, parse_errors) {
    EXPECT_THROW(parse_csv(""), ParseError);
    EXPECT_THROW(parse_csv("a,b\n"), ParseError);
    try {
        parse_csv(std::string(kCsvHeader) + "\nexpressibility,4,1,none,16,0,x,1.0,7\nexpressibility,4,1\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\ne,x,1,none,16,0,m,1.0,7\n"), ParseError);
    EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\ne,4,1,none,16,0,m,abc,7\n"), ParseError);
    EXPECT_THROW(parse_json("{}"), ParseError);
    EXPECT_THROW(parse_json(R"([{"N": 1}])"), ParseError);
}

TEST(emit, writes_files) {
    std::vector<MetricSample> rows = {{"expressibility", 2, 1, "none", 0, 0, "expressibility", 12.5, 3}};
    auto csv = temp_path("pqc_emit.csv");
    emit(rows, csv, OutputFormat::Csv);
    EXPECT_EQ(slurp(csv), to_csv(rows));
    auto json = temp_path("pqc_emit.json");
    emit(rows, json, OutputFormat::Json);
    EXPECT_EQ(parse_json(slurp(json)), rows);
    try {
        emit(rows, "/nonexistent-dir/x.csv", OutputFormat::Csv);
        FAIL();
    } catch (const IoError &e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.csv"), std::string::npos);
    }
}

TEST(cli, exit_codes) {
    auto out = temp_path("pqc_cli.csv");
    EXPECT_EQ(run_cli("expressibility -N 2 -L 1 --m 0,4 --circuits 2 --samples 50 --seed 1 --out " + out.string()), 0);
    auto rows = parse_csv(slurp(out));
    EXPECT_EQ(rows.size(), 8u);

    auto cfg = temp_path("pqc_cli.json");
    std::ofstream(cfg) << R"({"N": 2, "L": 1, "m_values": [3], "circuits_per_m": 1, "samples": 50, "seed": 4})";
    auto out2 = temp_path("pqc_cli2.csv");
    EXPECT_EQ(run_cli("entanglement --config " + cfg.string() + " --workers 2 --entangler cnot --out " + out2.string()),
              0);
    EXPECT_EQ(parse_csv(slurp(out2))[0].metric, "entangling_capability");

    EXPECT_EQ(run_cli("expressibility -N 2 -L 1 --m 99"), 2);
    EXPECT_EQ(run_cli("expressibility --entangler bogus"), 2);
    EXPECT_EQ(run_cli("frobnicate"), 2);
    EXPECT_EQ(run_cli("expressibility --config /nonexistent/cfg.json"), 4);
    EXPECT_EQ(run_cli("qubit-sweep --qubit-counts 2,11"), 3);
    EXPECT_EQ(run_cli("expressibility -N 11 --m 0"), 3);
    EXPECT_EQ(run_cli("expressibility -N 2 --m 0 --out /nonexistent-dir/out.csv"), 4);
}

TEST(cli, byte_identical_across_workers) {
    auto a = temp_path("pqc_w1.csv");
    auto b = temp_path("pqc_w4.csv");
    const std::string args = "entanglement -N 3 -L 2 --entangler iswap --m 4,12 --circuits 3 --samples 100 --seed 77";
    ASSERT_EQ(run_cli(args + " --workers 1 --out " + a.string()), 0);
    ASSERT_EQ(run_cli(args + " --workers 4 --out " + b.string()), 0);
    EXPECT_EQ(slurp(a), slurp(b));
}
