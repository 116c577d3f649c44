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

#include "pqc/vqe.hpp"

#include <limits>

#include "pqc/error.hpp"
#include "pqc/rng.hpp"

namespace pqc {

namespace {

constexpr uint64_t kRestartStream = 0x56514552;  // "VQER"

}  // namespace

VqeOutcome minimize_energy(const Ansatz &ansatz, size_t n_params, const PauliHamiltonian &h, const VqeOptions &opts,
                           uint64_t seed, std::optional<double> exact_energy) {
    const double exact = exact_energy ? *exact_energy : exact_ground_energy(h);
    auto energy = [&](std::span<const double> theta) { return expectation(ansatz(theta), h); };

    VqeOutcome out{std::numeric_limits<double>::infinity(), {}, 0, exact, 0};
    const size_t runs = std::max<size_t>(opts.restarts, 1);
    for (size_t r = 0; r < runs; ++r) {
        Rng rng = substream(seed, {kRestartStream, r});
        std::vector<double> start(n_params);
        for (double &t : start) {
            t = uniform_angle(rng);
        }
        NelderMeadResult res = nelder_mead(energy, std::move(start), opts.optimizer);
        out.evaluations += res.evaluations;
        if (res.f < out.best_energy) {
            out.best_energy = res.f;
            out.best_theta = std::move(res.x);
        }
        // Without parameters every restart sees the same landscape point.
        if (n_params == 0) {
            break;
        }
    }
    out.energy_error = out.best_energy - exact;
    return out;
}

VqeOutcome vqe_minimize(const RotationConfiguration &config, const PauliHamiltonian &h, const VqeOptions &opts,
                        uint64_t seed, std::optional<double> exact_energy) {
    if (config.circuit().num_qubits() != h.num_qubits) {
        throw ArgumentError("circuit has " + std::to_string(config.circuit().num_qubits()) +
                            " qubits but Hamiltonian has " + std::to_string(h.num_qubits));
    }
    return minimize_energy([&config](std::span<const double> theta) { return run_circuit(config, theta); },
                           config.num_active(), h, opts, seed, exact_energy);
}

}  // namespace pqc
