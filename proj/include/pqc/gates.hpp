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

#ifndef PQC_GATES_HPP
#define PQC_GATES_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "pqc/gate.hpp"

namespace pqc {

enum class Axis { X, Y, Z };

enum class StandardGate { Cnot, Iswap, Diamond };

enum class ControlledKind { Not, INot, Iswap };

/// Fixed entangling block V placed after each rotation layer.
enum class EntanglerKind {
    None,
    CnotChain,
    IswapChain,
    Diamond,
    MultiControlledNot,
    MultiControlledINot,
    MultiControlledIswap,
};

struct PlacedGate {
    GateSpec gate;
    std::vector<size_t> targets;
};

/// Row-major 2x2 entries of R_axis(theta).
std::array<Complex, 4> rotation_matrix(Axis axis, double theta);

/// R_axis(theta) = exp(-i theta sigma_axis / 2). Throws ArgumentError for non-finite theta.
GateSpec rotation(Axis axis, double theta);

/// CNOT (control first), iSWAP, or the four-qubit diamond gate acting on |C1 C2 T1 T2>.
GateSpec standard_gate(StandardGate which);

/// Gate with `n_controls` leading controls. NOT and INOT have one target, ISWAP has two.
/// INOT applies i*X when all controls are set.
GateSpec multi_controlled(ControlledKind kind, size_t n_controls);

/// The gates making up one V block on n qubits.
///
/// Chains couple consecutive pairs (0,1), (1,2), ..., with the lower index as control for
/// CNOT. Diamond gates sit on windows {0..3}, {2..5}, {4..7}, ... Multi-controlled gates put
/// their controls on the leading qubits and their target(s) on the trailing one(s).
/// Throws ArgumentError if n is incompatible with the kind.
std::vector<PlacedGate> entangler_layout(EntanglerKind kind, size_t n);

/// Throws ArgumentError if the kind cannot be laid out on n qubits.
void check_entangler_compatible(EntanglerKind kind, size_t n);

std::string_view to_string(EntanglerKind kind);
/// Accepts the names produced by to_string. Throws ArgumentError otherwise.
EntanglerKind parse_entangler(std::string_view name);
const std::vector<EntanglerKind> &all_entanglers();

char axis_char(Axis axis);

}  // namespace pqc

#endif
