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

#ifndef PQC_VQE_HPP
#define PQC_VQE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pqc/circuit.hpp"
#include "pqc/optimize.hpp"
#include "pqc/pauli.hpp"

namespace pqc {

struct VqeOptions {
    NelderMeadOptions optimizer;
    /// Independent Nelder-Mead runs from uniform random starts; the best one is reported.
    size_t restarts = 5;
};

struct VqeOutcome {
    double best_energy;
    std::vector<double> best_theta;
    /// Energy evaluations summed over all restarts.
    size_t evaluations;
    double exact_energy;
    /// best_energy - exact_energy.
    double energy_error;
};

/// Maps a parameter vector to a trial state.
using Ansatz = std::function<Statevector(std::span<const double>)>;

/// Minimizes <psi(theta)|H|psi(theta)> over `n_params` angles. Restart r starts from angles drawn
/// uniformly on [0, 2pi) from substream (seed, r). `exact_energy` skips the diagonalization when
/// the caller already has it.
VqeOutcome minimize_energy(const Ansatz &ansatz, size_t n_params, const PauliHamiltonian &h, const VqeOptions &opts,
                           uint64_t seed, std::optional<double> exact_energy = std::nullopt);

/// VQE over the active rotation angles of a configuration. Throws ArgumentError if the
/// template's qubit count differs from the Hamiltonian's.
VqeOutcome vqe_minimize(const RotationConfiguration &config, const PauliHamiltonian &h, const VqeOptions &opts,
                        uint64_t seed, std::optional<double> exact_energy = std::nullopt);

}  // namespace pqc

#endif
