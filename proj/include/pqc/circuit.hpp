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

#ifndef PQC_CIRCUIT_HPP
#define PQC_CIRCUIT_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pqc/gates.hpp"
#include "pqc/rng.hpp"
#include "pqc/statevector.hpp"

namespace pqc {

enum class Stage { FirstLayer, BulkLayer, Final };

/// Axes of the rotations in each stage, in the order they are applied to a qubit.
struct AxisScheme {
    std::array<Axis, 2> first{Axis::X, Axis::Z};
    std::array<Axis, 3> bulk{Axis::Z, Axis::X, Axis::Z};
    std::array<Axis, 2> final{Axis::Z, Axis::X};
};

struct RotationSlot {
    Stage stage;
    /// 1 for the first layer, k for bulk layer k (2 <= k <= L), L + 1 for the final stage.
    size_t layer;
    size_t qubit;
    Axis axis;
    size_t slot_id;
};

/// Layered ansatz on N qubits with L entangling blocks.
///
///   layer 1:      two rotations per qubit, then V
///   layer 2..L:   three rotations per qubit, then V
///   final:        two rotations per qubit
///
/// giving N(3L + 1) rotation slots in total.
class CircuitTemplate {
   public:
    /// Throws CapacityError for N outside [1, 12], ArgumentError for L < 1 or an entangler
    /// that cannot be laid out on N qubits.
    CircuitTemplate(size_t num_qubits, size_t layers, EntanglerKind entangler, AxisScheme axes = {});

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t layers() const {
        return layers_;
    }
    EntanglerKind entangler() const {
        return entangler_;
    }
    const AxisScheme &axes() const {
        return axes_;
    }
    size_t max_rotations() const;
    const std::vector<RotationSlot> &slots() const {
        return *slots_;
    }
    const std::vector<PlacedGate> &entangler_gates() const {
        return *layout_;
    }

   private:
    size_t num_qubits_;
    size_t layers_;
    EntanglerKind entangler_;
    AxisScheme axes_;
    std::shared_ptr<const std::vector<RotationSlot>> slots_;
    std::shared_ptr<const std::vector<PlacedGate>> layout_;
};

/// N(3L + 1).
size_t max_rotations(size_t num_qubits, size_t layers);
/// 2 * 2^N - 2, the real parameter count of an arbitrary N-qubit pure state.
size_t min_param_count(size_t num_qubits);
std::vector<RotationSlot> slot_list(const CircuitTemplate &tmpl);

/// A template with only some of its rotation slots switched on. The rest act as identity.
class RotationConfiguration {
   public:
    /// Throws ArgumentError if a slot id is out of range or repeated.
    RotationConfiguration(CircuitTemplate tmpl, std::vector<size_t> active_slots);

    const CircuitTemplate &circuit() const {
        return template_;
    }
    /// Sorted ascending. theta[i] in run_circuit drives active_slots()[i].
    const std::vector<size_t> &active_slots() const {
        return active_;
    }
    size_t num_active() const {
        return active_.size();
    }

   private:
    CircuitTemplate template_;
    std::vector<size_t> active_;
};

/// Uniformly random m-subset of the template's slots. Throws ArgumentError if m > M.
RotationConfiguration random_configuration(const CircuitTemplate &tmpl, size_t m, Rng &rng);

/// U(theta)|0...0>. Throws ArgumentError unless theta.size() == config.num_active().
Statevector run_circuit(const RotationConfiguration &config, std::span<const double> theta);

/// Line-oriented key=value record of a configuration and the seed that produced it:
///
///   N=4
///   L=1
///   entangler=cnot
///   m=6
///   seed=17
///   active_slots=0,3,4,9,12,15
std::string format_configuration(const RotationConfiguration &config, uint64_t seed);

struct ConfigurationRecord {
    RotationConfiguration config;
    uint64_t seed;
};

/// Throws ParseError on malformed lines or missing keys, FormatError if m disagrees with the slot list.
ConfigurationRecord parse_configuration(const std::string &text);

}  // namespace pqc

#endif
