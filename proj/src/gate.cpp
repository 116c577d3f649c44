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

#include "pqc/gate.hpp"

#include <bit>

#include "pqc/error.hpp"

namespace pqc {

double unitarity_deviation(const Matrix &u) {
    Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

namespace {

size_t qubits_of(const std::string &label, const Matrix &m) {
    if (m.rows() != m.cols() || m.rows() < 2 || !std::has_single_bit(static_cast<size_t>(m.rows()))) {
        throw ValidationError("gate '" + label + "': matrix must be square with power-of-two size >= 2");
    }
    return static_cast<size_t>(std::countr_zero(static_cast<size_t>(m.rows())));
}

void check_unitary(const std::string &label, const Matrix &m) {
    double dev = unitarity_deviation(m);
    if (!(dev <= kUnitaryTolerance)) {
        throw ValidationError("gate '" + label + "' is not unitary (max |U^dag U - I| = " + std::to_string(dev) + ")");
    }
}

}  // namespace

GateSpec GateSpec::dense(std::string label, Matrix matrix) {
    size_t k = qubits_of(label, matrix);
    if (k > kMaxQubits) {
        throw CapacityError("gate '" + label + "' acts on more than 12 qubits");
    }
    check_unitary(label, matrix);
    return GateSpec(std::move(label), 0, k, std::move(matrix));
}

GateSpec GateSpec::controlled(std::string label, size_t num_controls, Matrix block) {
    size_t k = qubits_of(label, block);
    if (num_controls + k > kMaxQubits) {
        throw CapacityError("gate '" + label + "' acts on " + std::to_string(num_controls + k) +
                            " qubits; at most 12 are supported");
    }
    check_unitary(label, block);
    return GateSpec(std::move(label), num_controls, k, std::move(block));
}

Matrix GateSpec::matrix() const {
    if (num_controls_ == 0) {
        return block_;
    }
    Eigen::Index dim = Eigen::Index{1} << arity();
    Eigen::Index b = block_.rows();
    Matrix full = Matrix::Identity(dim, dim);
    full.bottomRightCorner(b, b) = block_;
    return full;
}

}  // namespace pqc
