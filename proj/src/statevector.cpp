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

#include "pqc/statevector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>

#include "pqc/error.hpp"

namespace pqc {

Statevector Statevector::zero(size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(n) + " outside [1, 12]");
    }
    std::vector<Complex> amps(size_t{1} << n);
    amps[0] = 1.0;
    return Statevector(n, std::move(amps));
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes, double tol) {
    size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw ArgumentError("statevector length " + std::to_string(dim) + " is not a power of two >= 2");
    }
    size_t n = static_cast<size_t>(std::countr_zero(dim));
    if (n > kMaxQubits) {
        throw CapacityError("statevector on " + std::to_string(n) + " qubits exceeds 12");
    }
    double norm = 0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > tol) {
        throw ArgumentError("statevector is not normalized (norm^2 = " + std::to_string(norm) + ")");
    }
    return Statevector(n, std::move(amplitudes));
}

double Statevector::norm_squared() const {
    double s = 0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

void Statevector::apply(const GateSpec &gate, std::span<const size_t> targets) {
    const size_t n = num_qubits_;
    const size_t k = gate.arity();
    if (targets.size() != k) {
        throw ArgumentError("gate '" + gate.label() + "' has arity " + std::to_string(k) + " but got " +
                            std::to_string(targets.size()) + " targets");
    }
    size_t seen = 0;
    for (size_t t : targets) {
        if (t >= n) {
            throw ArgumentError("target qubit " + std::to_string(t) + " out of range for " + std::to_string(n) +
                                " qubits");
        }
        size_t bit = size_t{1} << (n - 1 - t);
        if (seen & bit) {
            throw ArgumentError("duplicate target qubit " + std::to_string(t));
        }
        seen |= bit;
    }

    const size_t nc = gate.num_controls();
    const size_t kb = gate.block_qubits();
    size_t ctrl_mask = 0;
    for (size_t r = 0; r < nc; ++r) {
        ctrl_mask |= size_t{1} << (n - 1 - targets[r]);
    }

    const size_t block_dim = size_t{1} << kb;
    std::vector<size_t> offsets(block_dim, 0);
    std::vector<size_t> positions;
    positions.reserve(kb);
    for (size_t r = 0; r < kb; ++r) {
        size_t pos = n - 1 - targets[nc + r];
        positions.push_back(pos);
        for (size_t l = 0; l < block_dim; ++l) {
            if ((l >> (kb - 1 - r)) & 1) {
                offsets[l] |= size_t{1} << pos;
            }
        }
    }
    std::sort(positions.begin(), positions.end());

    const Matrix &u = gate.block();
    Complex *amps = amplitudes_.data();
    const size_t outer = size_t{1} << (n - kb);

    if (kb == 1) {
        const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
        const size_t p = positions[0];
        const size_t lo_mask = (size_t{1} << p) - 1;
        const size_t stride = size_t{1} << p;
        for (size_t i = 0; i < outer; ++i) {
            size_t base = ((i >> p) << (p + 1)) | (i & lo_mask);
            if ((base & ctrl_mask) != ctrl_mask) {
                continue;
            }
            Complex a0 = amps[base];
            Complex a1 = amps[base + stride];
            amps[base] = u00 * a0 + u01 * a1;
            amps[base + stride] = u10 * a0 + u11 * a1;
        }
        return;
    }

    std::vector<Complex> in(block_dim);
    for (size_t i = 0; i < outer; ++i) {
        size_t base = i;
        for (size_t p : positions) {
            base = ((base >> p) << (p + 1)) | (base & ((size_t{1} << p) - 1));
        }
        if ((base & ctrl_mask) != ctrl_mask) {
            continue;
        }
        for (size_t l = 0; l < block_dim; ++l) {
            in[l] = amps[base | offsets[l]];
        }
        for (size_t r = 0; r < block_dim; ++r) {
            Complex acc = 0;
            for (size_t c = 0; c < block_dim; ++c) {
                acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
            }
            amps[base | offsets[r]] = acc;
        }
    }
}

void Statevector::apply_single(const std::array<Complex, 4> &u, size_t qubit) {
    if (qubit >= num_qubits_) {
        throw ArgumentError("target qubit " + std::to_string(qubit) + " out of range for " +
                            std::to_string(num_qubits_) + " qubits");
    }
    const size_t p = num_qubits_ - 1 - qubit;
    const size_t stride = size_t{1} << p;
    Complex *amps = amplitudes_.data();
    for (size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
        for (size_t i = base; i < base + stride; ++i) {
            Complex a0 = amps[i];
            Complex a1 = amps[i + stride];
            amps[i] = u[0] * a0 + u[1] * a1;
            amps[i + stride] = u[2] * a0 + u[3] * a1;
        }
    }
}

void Statevector::apply_diagonal(std::span<const Complex> phases) {
    if (phases.size() != amplitudes_.size()) {
        throw ArgumentError("diagonal gate size " + std::to_string(phases.size()) + " does not match dimension " +
                            std::to_string(amplitudes_.size()));
    }
    for (size_t i = 0; i < phases.size(); ++i) {
        amplitudes_[i] *= phases[i];
    }
}

Statevector zero_state(size_t n) {
    return Statevector::zero(n);
}

Statevector apply_gate(Statevector state, const GateSpec &gate, std::span<const size_t> targets) {
    state.apply(gate, targets);
    return state;
}

double fidelity(const Statevector &a, const Statevector &b) {
    if (a.dim() != b.dim()) {
        throw ArgumentError("fidelity of states with dimensions " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
    }
    Complex overlap = 0;
    for (size_t i = 0; i < a.dim(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

SubVector project_out(const Statevector &state, size_t qubit, int branch) {
    const size_t n = state.num_qubits();
    if (qubit >= n) {
        throw ArgumentError("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(n) + " qubits");
    }
    if (branch != 0 && branch != 1) {
        throw ArgumentError("branch must be 0 or 1");
    }
    const size_t p = n - 1 - qubit;
    const size_t lo_mask = (size_t{1} << p) - 1;
    SubVector out;
    out.source_qubit = qubit;
    out.branch = branch;
    out.amplitudes.resize(state.dim() / 2);
    for (size_t i = 0; i < out.amplitudes.size(); ++i) {
        size_t idx = ((i >> p) << (p + 1)) | (static_cast<size_t>(branch) << p) | (i & lo_mask);
        out.amplitudes[i] = state[idx];
    }
    return out;
}

double generalized_distance(const SubVector &u, const SubVector &v) {
    if (u.amplitudes.size() != v.amplitudes.size()) {
        throw ArgumentError("generalized distance of vectors with lengths " + std::to_string(u.amplitudes.size()) +
                            " and " + std::to_string(v.amplitudes.size()));
    }
    // Lagrange identity: the double sum equals |u|^2 |v|^2 - |<u|v>|^2.
    double uu = 0, vv = 0;
    Complex uv = 0;
    for (size_t i = 0; i < u.amplitudes.size(); ++i) {
        uu += std::norm(u.amplitudes[i]);
        vv += std::norm(v.amplitudes[i]);
        uv += std::conj(u.amplitudes[i]) * v.amplitudes[i];
    }
    return std::max(0.0, uu * vv - std::norm(uv));
}

}  // namespace pqc
