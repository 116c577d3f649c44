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

#ifndef PQC_PAULI_HPP
#define PQC_PAULI_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pqc/gate.hpp"
#include "pqc/statevector.hpp"

namespace pqc {

enum class Pauli : uint8_t { I, X, Y, Z };

/// Tensor product of single-qubit Paulis; character r acts on qubit r.
class PauliString {
   public:
    PauliString() = default;
    /// Throws ArgumentError on characters other than I, X, Y, Z.
    static PauliString parse(std::string_view text);

    size_t size() const {
        return ops_.size();
    }
    Pauli operator[](size_t q) const {
        return ops_[q];
    }
    std::string str() const;
    bool operator==(const PauliString &) const = default;

    /// Basis-index bits flipped by the string (X or Y positions).
    size_t flip_mask() const;
    /// Basis-index bits that contribute a sign (Y or Z positions).
    size_t sign_mask() const;
    size_t num_y() const;

   private:
    std::vector<Pauli> ops_;
};

struct PauliTerm {
    PauliString string;
    double coefficient;
};

/// Real linear combination of Pauli strings, coefficients in Hartree.
struct PauliHamiltonian {
    size_t num_qubits = 0;
    std::vector<PauliTerm> terms;
};

/// Parses one "PAULISTRING coefficient" term per line. '#' starts a comment; blank lines are
/// skipped. Repeated strings are merged by adding their coefficients.
/// Throws ParseError (with line number) on malformed lines, FormatError on inconsistent lengths.
PauliHamiltonian parse_hamiltonian(std::string_view text);
/// Throws IoError if the file cannot be read.
PauliHamiltonian load_hamiltonian(const std::filesystem::path &path);

/// <psi|H|psi>. Throws ArgumentError on a qubit-count mismatch.
double expectation(const Statevector &state, const PauliHamiltonian &h);

/// Dense 2^N x 2^N matrix of H.
Matrix dense_matrix(const PauliHamiltonian &h);

inline constexpr size_t kMaxDiagonalizationQubits = 10;

/// Smallest eigenvalue of H. Throws CapacityError above 10 qubits.
double exact_ground_energy(const PauliHamiltonian &h);

}  // namespace pqc

#endif
