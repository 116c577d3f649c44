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

#include "pqc/gates.hpp"

#include <array>
#include <cctype>
#include <cmath>

#include "pqc/error.hpp"

namespace pqc {

namespace {

using namespace std::complex_literals;

Matrix pauli_x() {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
}

Matrix iswap_block() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1i;
    m(2, 1) = 1i;
    m(3, 3) = 1;
    return m;
}

// Rows of the diamond gate on |C1 C2 T1 T2>, as (column, sign) of the single nonzero entry.
constexpr std::array<std::pair<int, int>, 16> kDiamondRows{{
    {0, +1},
    {2, -1},
    {1, -1},
    {3, -1},
    {8, -1},
    {5, +1},
    {6, +1},
    {11, -1},
    {4, -1},
    {9, +1},
    {10, +1},
    {7, -1},
    {12, -1},
    {14, -1},
    {13, -1},
    {15, +1},
}};

Matrix diamond_matrix() {
    Matrix m = Matrix::Zero(16, 16);
    for (int r = 0; r < 16; ++r) {
        m(r, kDiamondRows[r].first) = kDiamondRows[r].second;
    }
    return m;
}

}  // namespace

char axis_char(Axis axis) {
    switch (axis) {
        case Axis::X:
            return 'X';
        case Axis::Y:
            return 'Y';
        case Axis::Z:
            return 'Z';
    }
    return '?';
}

std::array<Complex, 4> rotation_matrix(Axis axis, double theta) {
    if (!std::isfinite(theta)) {
        throw ArgumentError("rotation angle must be finite");
    }
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    switch (axis) {
        case Axis::X:
            return {c, -1i * s, -1i * s, c};
        case Axis::Y:
            return {c, -s, s, c};
        case Axis::Z:
            return {std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2)};
    }
    throw ArgumentError("unknown axis");
}

GateSpec rotation(Axis axis, double theta) {
    auto r = rotation_matrix(axis, theta);
    Matrix m(2, 2);
    m << r[0], r[1], r[2], r[3];
    return GateSpec::dense(std::string("R") + static_cast<char>(std::tolower(axis_char(axis))), std::move(m));
}

GateSpec standard_gate(StandardGate which) {
    switch (which) {
        case StandardGate::Cnot:
            return GateSpec::controlled("CNOT", 1, pauli_x());
        case StandardGate::Iswap:
            return GateSpec::dense("ISWAP", iswap_block());
        case StandardGate::Diamond:
            return GateSpec::dense("DIAMOND", diamond_matrix());
    }
    throw ArgumentError("unknown standard gate");
}

GateSpec multi_controlled(ControlledKind kind, size_t n_controls) {
    if (n_controls < 1) {
        throw ArgumentError("multi-controlled gate needs at least one control");
    }
    std::string c = std::to_string(n_controls);
    switch (kind) {
        case ControlledKind::Not:
            return GateSpec::controlled("C" + c + "-NOT", n_controls, pauli_x());
        case ControlledKind::INot:
            return GateSpec::controlled("C" + c + "-INOT", n_controls, Matrix(1i * pauli_x()));
        case ControlledKind::Iswap:
            return GateSpec::controlled("C" + c + "-ISWAP", n_controls, iswap_block());
    }
    throw ArgumentError("unknown controlled gate kind");
}

void check_entangler_compatible(EntanglerKind kind, size_t n) {
    auto fail = [&](const std::string &why) {
        throw ArgumentError(std::string(to_string(kind)) + " on " + std::to_string(n) + " qubits: " + why);
    };
    switch (kind) {
        case EntanglerKind::None:
            return;
        case EntanglerKind::CnotChain:
        case EntanglerKind::IswapChain:
        case EntanglerKind::MultiControlledNot:
        case EntanglerKind::MultiControlledINot:
            if (n < 2) {
                fail("needs at least 2 qubits");
            }
            return;
        case EntanglerKind::MultiControlledIswap:
            if (n < 3) {
                fail("needs at least 3 qubits");
            }
            return;
        case EntanglerKind::Diamond:
            if (n < 4 || n % 2 != 0) {
                fail("needs an even qubit count >= 4");
            }
            return;
    }
}

std::vector<PlacedGate> entangler_layout(EntanglerKind kind, size_t n) {
    check_entangler_compatible(kind, n);
    std::vector<PlacedGate> out;
    switch (kind) {
        case EntanglerKind::None:
            break;
        case EntanglerKind::CnotChain:
        case EntanglerKind::IswapChain: {
            GateSpec g = standard_gate(kind == EntanglerKind::CnotChain ? StandardGate::Cnot : StandardGate::Iswap);
            for (size_t q = 0; q + 1 < n; ++q) {
                out.push_back({g, {q, q + 1}});
            }
            break;
        }
        case EntanglerKind::Diamond: {
            GateSpec g = standard_gate(StandardGate::Diamond);
            for (size_t q = 0; q + 4 <= n; q += 2) {
                out.push_back({g, {q, q + 1, q + 2, q + 3}});
            }
            break;
        }
        case EntanglerKind::MultiControlledNot:
        case EntanglerKind::MultiControlledINot:
        case EntanglerKind::MultiControlledIswap: {
            ControlledKind ck = kind == EntanglerKind::MultiControlledNot    ? ControlledKind::Not
                                : kind == EntanglerKind::MultiControlledINot ? ControlledKind::INot
                                                                              : ControlledKind::Iswap;
            size_t n_targets = ck == ControlledKind::Iswap ? 2 : 1;
            std::vector<size_t> targets(n);
            for (size_t q = 0; q < n; ++q) {
                targets[q] = q;
            }
            out.push_back({multi_controlled(ck, n - n_targets), std::move(targets)});
            break;
        }
    }
    return out;
}

std::string_view to_string(EntanglerKind kind) {
    switch (kind) {
        case EntanglerKind::None:
            return "none";
        case EntanglerKind::CnotChain:
            return "cnot";
        case EntanglerKind::IswapChain:
            return "iswap";
        case EntanglerKind::Diamond:
            return "diamond";
        case EntanglerKind::MultiControlledNot:
            return "mc-not";
        case EntanglerKind::MultiControlledINot:
            return "mc-inot";
        case EntanglerKind::MultiControlledIswap:
            return "mc-iswap";
    }
    return "?";
}

EntanglerKind parse_entangler(std::string_view name) {
    for (EntanglerKind k : all_entanglers()) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw ArgumentError("unknown entangler '" + std::string(name) +
                        "' (expected none, cnot, iswap, diamond, mc-not, mc-inot, mc-iswap)");
}

const std::vector<EntanglerKind> &all_entanglers() {
    static const std::vector<EntanglerKind> kinds{
        EntanglerKind::None,
        EntanglerKind::CnotChain,
        EntanglerKind::IswapChain,
        EntanglerKind::Diamond,
        EntanglerKind::MultiControlledNot,
        EntanglerKind::MultiControlledINot,
        EntanglerKind::MultiControlledIswap,
    };
    return kinds;
}

}  // namespace pqc
