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

#ifndef PQC_GATE_HPP
#define PQC_GATE_HPP

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace pqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr size_t kMaxQubits = 12;

/// A unitary acting on `arity()` qubits.
///
/// Stored as `num_controls()` control qubits followed by a dense target block. The full
/// 2^arity x 2^arity matrix acts as the block when every control is |1> and as the identity
/// otherwise. A gate without controls is just its block. Keeping multi-controlled gates in this
/// form means a 10-qubit Toffoli costs a 2x2 block, not a 1024x1024 matrix.
class GateSpec {
   public:
    /// Throws ValidationError if `matrix` is not square with power-of-two size or not unitary.
    static GateSpec dense(std::string label, Matrix matrix);
    /// Throws CapacityError if the total arity exceeds kMaxQubits.
    static GateSpec controlled(std::string label, size_t num_controls, Matrix block);

    size_t arity() const {
        return num_controls_ + block_qubits_;
    }
    size_t num_controls() const {
        return num_controls_;
    }
    size_t block_qubits() const {
        return block_qubits_;
    }
    const Matrix &block() const {
        return block_;
    }
    const std::string &label() const {
        return label_;
    }

    /// Materializes the full 2^arity x 2^arity matrix.
    Matrix matrix() const;

   private:
    GateSpec(std::string label, size_t num_controls, size_t block_qubits, Matrix block)
        : label_(std::move(label)), num_controls_(num_controls), block_qubits_(block_qubits), block_(std::move(block)) {
    }

    std::string label_;
    size_t num_controls_;
    size_t block_qubits_;
    Matrix block_;
};

/// Largest absolute entry of U^dagger U - I.
double unitarity_deviation(const Matrix &u);

}  // namespace pqc

#endif
