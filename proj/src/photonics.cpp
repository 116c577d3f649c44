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

#include "pqc/photonics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iterator>
#include <memory>
#include <numbers>

#include "pqc/error.hpp"

namespace pqc {

using namespace std::complex_literals;

QuditState QuditState::from_amplitudes(std::vector<Complex> amplitudes, double tol) {
    if (amplitudes.size() < 2) {
        throw ArgumentError("qudit needs at least two levels");
    }
    double norm = 0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > tol) {
        throw ArgumentError("qudit state is not normalized (norm^2 = " + std::to_string(norm) + ")");
    }
    return QuditState(std::move(amplitudes));
}

QuditState even_superposition(size_t d) {
    if (d < 2) {
        throw ArgumentError("even superposition needs d >= 2, got " + std::to_string(d));
    }
    return QuditState::from_amplitudes(std::vector<Complex>(d, 1.0 / std::sqrt(static_cast<double>(d))));
}

QuditState apply_ps(const QuditState &state, const PsGate &gate) {
    const size_t d = state.dim();
    if (gate.phases.size() != d) {
        throw ArgumentError("pulse shaper has " + std::to_string(gate.phases.size()) + " phases for " +
                            std::to_string(d) + " levels");
    }
    if (!gate.active.empty() && gate.active.size() != d) {
        throw ArgumentError("pulse shaper active mask has " + std::to_string(gate.active.size()) + " entries for " +
                            std::to_string(d) + " levels");
    }
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    for (size_t j = 0; j < d; ++j) {
        if (gate.active.empty() || gate.active[j]) {
            out[j] *= std::polar(1.0, gate.phases[j]);
        }
    }
    return QuditState::from_amplitudes(std::move(out), 1e-9);
}

EomGate EomGate::with_default_guard(double v0, double theta) {
    return {v0, theta, static_cast<size_t>(std::ceil(std::max(v0, 0.0))) + 1};
}

double bessel_j(int n, double x) {
    // J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x).
    const bool odd = (n % 2) != 0;
    double sign = 1.0;
    if (n < 0 && odd) {
        sign = -sign;
    }
    if (x < 0 && odd) {
        sign = -sign;
    }
    return sign * std::cyl_bessel_j(static_cast<double>(std::abs(n)), std::abs(x));
}

EomResult apply_eom(const QuditState &state, const EomGate &gate, double max_leakage) {
    if (!std::isfinite(gate.v0) || gate.v0 < 0) {
        throw ArgumentError("EOM modulation depth must be finite and non-negative");
    }
    if (!std::isfinite(gate.theta)) {
        throw ArgumentError("EOM drive phase must be finite");
    }
    const size_t min_guard = static_cast<size_t>(std::ceil(gate.v0)) + 1;
    if (gate.guard < min_guard) {
        throw ArgumentError("EOM guard " + std::to_string(gate.guard) + " below ceil(V0) + 1 = " +
                            std::to_string(min_guard));
    }
    const size_t d = state.dim();
    const long g = static_cast<long>(gate.guard);
    const Complex step = -1i * std::polar(1.0, -gate.theta);

    std::vector<Complex> coupling(2 * g + 1);
    for (long k = -g; k <= g; ++k) {
        coupling[k + g] = std::pow(step, static_cast<double>(k)) * bessel_j(static_cast<int>(k), gate.v0);
    }

    // Input occupies register bins [g, g + d); output bin m collects from n with |m - n| <= g.
    // The banded operator is not unitary, so leakage is the outside share of the output norm.
    const long reg = static_cast<long>(d) + 2 * g;
    double inside_norm = 0;
    double outside_norm = 0;
    std::vector<Complex> inside(d);
    for (long m = 0; m < reg; ++m) {
        Complex acc = 0;
        const long lo = std::max<long>(g, m - g);
        const long hi = std::min<long>(g + static_cast<long>(d) - 1, m + g);
        for (long n = lo; n <= hi; ++n) {
            acc += coupling[m - n + g] * state[static_cast<size_t>(n - g)];
        }
        if (m >= g && m < g + static_cast<long>(d)) {
            inside[static_cast<size_t>(m - g)] = acc;
            inside_norm += std::norm(acc);
        } else {
            outside_norm += std::norm(acc);
        }
    }
    const double leakage = outside_norm / (inside_norm + outside_norm);
    if (leakage > max_leakage) {
        throw TruncationError("EOM leaks " + std::to_string(leakage) + " of the probability out of the " +
                              std::to_string(d) + " computational bins (limit " + std::to_string(max_leakage) +
                              "); use more levels or a smaller modulation depth");
    }
    const double scale = 1.0 / std::sqrt(inside_norm);
    for (auto &a : inside) {
        a *= scale;
    }
    return {QuditState::from_amplitudes(std::move(inside), 1e-9), leakage};
}

Matrix dft_gate(size_t d) {
    if (d < 2) {
        throw ArgumentError("DFT gate needs d >= 2, got " + std::to_string(d));
    }
    const Eigen::Index n = static_cast<Eigen::Index>(d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix u(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            // Reduce jk mod d before scaling so large d keeps full phase accuracy.
            const double turns = static_cast<double>((j * k) % n) / static_cast<double>(n);
            u(j, k) = std::polar(norm, 2.0 * std::numbers::pi * turns);
        }
    }
    return u;
}

QuditState apply_unitary(const QuditState &state, const Matrix &u) {
    const Eigen::Index d = static_cast<Eigen::Index>(state.dim());
    if (u.rows() != d || u.cols() != d) {
        throw ArgumentError("unitary of size " + std::to_string(u.rows()) + " applied to a " + std::to_string(d) +
                            "-level qudit");
    }
    std::vector<Complex> out(state.dim());
    for (Eigen::Index r = 0; r < d; ++r) {
        Complex acc = 0;
        for (Eigen::Index c = 0; c < d; ++c) {
            acc += u(r, c) * state[static_cast<size_t>(c)];
        }
        out[static_cast<size_t>(r)] = acc;
    }
    return QuditState::from_amplitudes(std::move(out), 1e-9);
}

Statevector qudit_as_qubits(const QuditState &state) {
    if (!std::has_single_bit(state.dim())) {
        throw ArgumentError("qudit dimension " + std::to_string(state.dim()) + " is not a power of two");
    }
    return Statevector::from_amplitudes(std::vector<Complex>(state.amplitudes().begin(), state.amplitudes().end()),
                                        1e-9);
}

PhotonicCircuit full_photonic_circuit(PhotonicKind kind, size_t d) {
    if (d < 2) {
        throw ArgumentError("photonic circuit needs d >= 2, got " + std::to_string(d));
    }
    PhotonicCircuit c{kind, d, std::vector<size_t>(d)};
    for (size_t j = 0; j < d; ++j) {
        c.active_levels[j] = j;
    }
    return c;
}

PhotonicCircuit random_photonic_circuit(PhotonicKind kind, size_t d, size_t k, Rng &rng) {
    PhotonicCircuit full = full_photonic_circuit(kind, d);
    if (k > d) {
        throw ArgumentError("cannot activate " + std::to_string(k) + " of " + std::to_string(d) + " phases");
    }
    PhotonicCircuit c{kind, d, {}};
    c.active_levels.reserve(k);
    std::sample(full.active_levels.begin(), full.active_levels.end(), std::back_inserter(c.active_levels),
                static_cast<std::ptrdiff_t>(k), rng);
    return c;
}

namespace {

PsGate stage_gate(const PhotonicCircuit &circuit, std::span<const double> stage_params) {
    PsGate g{std::vector<double>(circuit.dim, 0.0), {}};
    for (size_t i = 0; i < circuit.active_levels.size(); ++i) {
        const size_t level = circuit.active_levels[i];
        if (level >= circuit.dim) {
            throw ArgumentError("active level " + std::to_string(level) + " out of range for d = " +
                                std::to_string(circuit.dim));
        }
        g.phases[level] = stage_params[i];
    }
    return g;
}

QuditState run_stages(const PhotonicCircuit &circuit, std::span<const double> params, const Matrix &dft) {
    const size_t k = circuit.active_levels.size();
    QuditState state = apply_ps(even_superposition(circuit.dim), stage_gate(circuit, params.subspan(0, k)));
    if (circuit.kind == PhotonicKind::PsDftPs) {
        state = apply_unitary(state, dft);
        state = apply_ps(state, stage_gate(circuit, params.subspan(k, k)));
    }
    return state;
}

}  // namespace

QuditState photonic_pipeline(const PhotonicCircuit &circuit, std::span<const double> params) {
    if (params.size() != circuit.num_params()) {
        throw ArgumentError("photonic circuit expects " + std::to_string(circuit.num_params()) +
                            " phases, got " + std::to_string(params.size()));
    }
    return run_stages(circuit, params,
                      circuit.kind == PhotonicKind::PsDftPs ? dft_gate(circuit.dim) : Matrix());
}

QuditState photonic_pipeline(PhotonicKind kind, size_t d, std::span<const double> params) {
    return photonic_pipeline(full_photonic_circuit(kind, d), params);
}

EomResult eom_ps_eom(const QuditState &state, const EomGate &first, const PsGate &shaper, const EomGate &second,
                     double max_leakage) {
    EomResult a = apply_eom(state, first, max_leakage);
    QuditState shaped = apply_ps(a.state, shaper);
    EomResult b = apply_eom(shaped, second, max_leakage);
    return {std::move(b.state), a.leakage + b.leakage};
}

StateSampler photonic_sampler(const PhotonicCircuit &circuit) {
    if (!std::has_single_bit(circuit.dim)) {
        throw ArgumentError("qudit dimension " + std::to_string(circuit.dim) + " is not a power of two");
    }
    // The DFT matrix is shared by every draw instead of being rebuilt per sample.
    auto dft = std::make_shared<const Matrix>(circuit.kind == PhotonicKind::PsDftPs ? dft_gate(circuit.dim) : Matrix());
    return [circuit, dft](Rng &rng) {
        std::vector<double> params(circuit.num_params());
        for (double &p : params) {
            p = uniform_angle(rng);
        }
        QuditState state = run_stages(circuit, params, *dft);
        return qudit_as_qubits(state);
    };
}

VqeOutcome photonic_vqe(const PhotonicCircuit &circuit, const PauliHamiltonian &h, const VqeOptions &opts,
                        uint64_t seed, std::optional<double> exact_energy) {
    if (circuit.dim != (size_t{1} << h.num_qubits)) {
        throw ArgumentError("qudit dimension " + std::to_string(circuit.dim) + " does not match a " +
                            std::to_string(h.num_qubits) + "-qubit Hamiltonian");
    }
    return minimize_energy(
        [&circuit](std::span<const double> p) { return qudit_as_qubits(photonic_pipeline(circuit, p)); },
        circuit.num_params(), h, opts, seed, exact_energy);
}

}  // namespace pqc
