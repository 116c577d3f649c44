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

#include "pqc/pauli.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "pqc/error.hpp"

namespace pqc {

PauliString PauliString::parse(std::string_view text) {
    PauliString p;
    p.ops_.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'I':
                p.ops_.push_back(Pauli::I);
                break;
            case 'X':
                p.ops_.push_back(Pauli::X);
                break;
            case 'Y':
                p.ops_.push_back(Pauli::Y);
                break;
            case 'Z':
                p.ops_.push_back(Pauli::Z);
                break;
            default:
                throw ArgumentError("invalid Pauli character '" + std::string(1, c) + "' in '" + std::string(text) + "'");
        }
    }
    if (p.ops_.empty()) {
        throw ArgumentError("empty Pauli string");
    }
    return p;
}

std::string PauliString::str() const {
    std::string s;
    for (Pauli op : ops_) {
        s.push_back("IXYZ"[static_cast<int>(op)]);
    }
    return s;
}

size_t PauliString::flip_mask() const {
    size_t mask = 0;
    const size_t n = ops_.size();
    for (size_t q = 0; q < n; ++q) {
        if (ops_[q] == Pauli::X || ops_[q] == Pauli::Y) {
            mask |= size_t{1} << (n - 1 - q);
        }
    }
    return mask;
}

size_t PauliString::sign_mask() const {
    size_t mask = 0;
    const size_t n = ops_.size();
    for (size_t q = 0; q < n; ++q) {
        if (ops_[q] == Pauli::Z || ops_[q] == Pauli::Y) {
            mask |= size_t{1} << (n - 1 - q);
        }
    }
    return mask;
}

size_t PauliString::num_y() const {
    size_t k = 0;
    for (Pauli op : ops_) {
        k += op == Pauli::Y;
    }
    return k;
}

PauliHamiltonian parse_hamiltonian(std::string_view text) {
    PauliHamiltonian h;
    std::unordered_map<std::string, size_t> index;
    size_t line_no = 0;
    size_t first_line = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string ops, coeff, extra;
        if (!(fields >> ops)) {
            continue;
        }
        if (!(fields >> coeff) || (fields >> extra)) {
            throw ParseError("expected 'PAULISTRING coefficient'", line_no);
        }
        PauliString p;
        try {
            p = PauliString::parse(ops);
        } catch (const ArgumentError &e) {
            throw ParseError(e.what(), line_no);
        }
        double value = 0;
        auto [ptr, ec] = std::from_chars(coeff.data(), coeff.data() + coeff.size(), value);
        if (ec != std::errc() || ptr != coeff.data() + coeff.size() || !std::isfinite(value)) {
            throw ParseError("invalid coefficient '" + coeff + "'", line_no);
        }
        if (h.terms.empty() && index.empty()) {
            h.num_qubits = p.size();
            first_line = line_no;
        } else if (p.size() != h.num_qubits) {
            throw FormatError("line " + std::to_string(line_no) + ": Pauli string '" + ops + "' has " +
                              std::to_string(p.size()) + " qubits but line " + std::to_string(first_line) +
                              " has " + std::to_string(h.num_qubits));
        }
        auto [it, inserted] = index.emplace(ops, h.terms.size());
        if (inserted) {
            h.terms.push_back({std::move(p), value});
        } else {
            h.terms[it->second].coefficient += value;
        }
    }
    if (h.terms.empty()) {
        throw FormatError("Hamiltonian has no terms");
    }
    if (h.num_qubits > kMaxQubits) {
        throw CapacityError("Hamiltonian on " + std::to_string(h.num_qubits) + " qubits exceeds 12");
    }
    return h;
}

PauliHamiltonian load_hamiltonian(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open Hamiltonian file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_hamiltonian(buf.str());
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    } catch (const FormatError &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

namespace {

// i^k for k mod 4.
Complex i_power(size_t k) {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k & 3];
}

}  // namespace

double expectation(const Statevector &state, const PauliHamiltonian &h) {
    if (state.num_qubits() != h.num_qubits) {
        throw ArgumentError("state has " + std::to_string(state.num_qubits()) + " qubits but Hamiltonian has " +
                            std::to_string(h.num_qubits));
    }
    const auto amps = state.amplitudes();
    Complex total = 0;
    for (const auto &term : h.terms) {
        const size_t flip = term.string.flip_mask();
        const size_t sign = term.string.sign_mask();
        // P|b> = i^nY (-1)^popcount(b & sign) |b ^ flip>
        Complex acc = 0;
        for (size_t b = 0; b < amps.size(); ++b) {
            Complex v = std::conj(amps[b ^ flip]) * amps[b];
            acc += (std::popcount(b & sign) & 1) ? -v : v;
        }
        total += term.coefficient * i_power(term.string.num_y()) * acc;
    }
    if (std::abs(total.imag()) > 1e-9) {
        throw ValidationError("expectation value has imaginary part " + std::to_string(total.imag()));
    }
    return total.real();
}

Matrix dense_matrix(const PauliHamiltonian &h) {
    if (h.num_qubits > kMaxQubits) {
        throw CapacityError("Hamiltonian on " + std::to_string(h.num_qubits) + " qubits exceeds 12");
    }
    const Eigen::Index dim = Eigen::Index{1} << h.num_qubits;
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto &term : h.terms) {
        const size_t flip = term.string.flip_mask();
        const size_t sign = term.string.sign_mask();
        const Complex phase = term.coefficient * i_power(term.string.num_y());
        for (size_t b = 0; b < static_cast<size_t>(dim); ++b) {
            Complex v = (std::popcount(b & sign) & 1) ? -phase : phase;
            m(static_cast<Eigen::Index>(b ^ flip), static_cast<Eigen::Index>(b)) += v;
        }
    }
    return m;
}

double exact_ground_energy(const PauliHamiltonian &h) {
    if (h.num_qubits > kMaxDiagonalizationQubits) {
        throw CapacityError("exact diagonalization is limited to 10 qubits, Hamiltonian has " +
                            std::to_string(h.num_qubits));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(dense_matrix(h), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver did not converge");
    }
    return solver.eigenvalues()(0);
}

}  // namespace pqc
