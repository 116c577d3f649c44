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

#ifndef PQC_STATEVECTOR_HPP
#define PQC_STATEVECTOR_HPP

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "pqc/gate.hpp"

namespace pqc {

/// Pure state of n qubits as 2^n complex amplitudes.
///
/// Qubit 0 is the most significant bit of the basis index, so |q0 q1 ... q(n-1)> has index
/// q0*2^(n-1) + ... + q(n-1). A four-qubit gate written on |C1 C2 T1 T2> therefore applies with
/// targets {0, 1, 2, 3} without any reordering.
class Statevector {
   public:
    /// |0...0> on n qubits. Throws CapacityError unless 1 <= n <= kMaxQubits.
    static Statevector zero(size_t n);
    /// Throws ArgumentError if the size is not a power of two >= 2 or the norm is off by more than tol.
    static Statevector from_amplitudes(std::vector<Complex> amplitudes, double tol = 1e-10);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    const Complex &operator[](size_t i) const {
        return amplitudes_[i];
    }
    double norm_squared() const;

    /// Applies the gate in place. targets[r] is the qubit that the gate's r-th (most
    /// significant) local qubit acts on; for controlled gates the controls come first.
    void apply(const GateSpec &gate, std::span<const size_t> targets);
    void apply(const GateSpec &gate, std::initializer_list<size_t> targets) {
        apply(gate, std::span<const size_t>(targets.begin(), targets.size()));
    }

    /// Applies a single-qubit unitary given as row-major entries. Not checked for unitarity.
    void apply_single(const std::array<Complex, 4> &u, size_t qubit);

    /// Multiplies amplitude i by phases[i]. Used for diagonal gates that span the whole register.
    void apply_diagonal(std::span<const Complex> phases);

   private:
    Statevector(size_t num_qubits, std::vector<Complex> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    }

    size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// The 2^(n-1) amplitudes of a state whose j-th qubit is fixed to `branch`. Not normalized.
struct SubVector {
    std::vector<Complex> amplitudes;
    size_t source_qubit = 0;
    int branch = 0;
};

Statevector zero_state(size_t n);
Statevector apply_gate(Statevector state, const GateSpec &gate, std::span<const size_t> targets);
/// |<a|b>|^2.
double fidelity(const Statevector &a, const Statevector &b);
SubVector project_out(const Statevector &state, size_t qubit, int branch);
/// 1/2 sum_{i,j} |u_i v_j - u_j v_i|^2.
double generalized_distance(const SubVector &u, const SubVector &v);

}  // namespace pqc

#endif
