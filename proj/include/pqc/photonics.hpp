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

#ifndef PQC_PHOTONICS_HPP
#define PQC_PHOTONICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pqc/gate.hpp"
#include "pqc/metrics.hpp"
#include "pqc/rng.hpp"
#include "pqc/statevector.hpp"
#include "pqc/vqe.hpp"

namespace pqc {

/// Single photon over d frequency bins. Level j (0-based) is the bin omega_0 + j * delta_omega.
class QuditState {
   public:
    /// Throws ArgumentError if d < 2 or the norm is off by more than tol.
    static QuditState from_amplitudes(std::vector<Complex> amplitudes, double tol = 1e-10);

    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    const Complex &operator[](size_t i) const {
        return amplitudes_[i];
    }

   private:
    explicit QuditState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    }
    std::vector<Complex> amplitudes_;
};

/// All d levels with amplitude 1/sqrt(d). Throws ArgumentError for d < 2.
QuditState even_superposition(size_t d);

/// Pulse shaper: level j picks up exp(i phases[j]). Levels outside `active` (when given) keep phase 0.
struct PsGate {
    std::vector<double> phases;
    std::vector<bool> active;
};

QuditState apply_ps(const QuditState &state, const PsGate &gate);

/// Electro-optic phase modulator driven at depth v0 (in units of V_pi / pi) and phase theta.
/// Couples bins m and n with (-i e^{-i theta})^(m-n) J_(m-n)(v0) for |m - n| <= guard.
struct EomGate {
    double v0 = 0;
    double theta = 0;
    size_t guard = 1;

    /// guard = ceil(v0) + 1, the smallest band the truncated operator may use.
    static EomGate with_default_guard(double v0, double theta);
};

struct EomResult {
    QuditState state;
    /// Share of the output norm outside the d computational bins.
    double leakage;
};

inline constexpr double kMaxEomLeakage = 0.01;

/// Embeds the d levels in the middle of d + 2 * guard bins, applies the banded operator, and
/// projects back onto the d central bins with renormalization. Throws TruncationError if the
/// leakage exceeds max_leakage, ArgumentError for a negative or non-finite v0 or a guard below
/// ceil(v0) + 1.
EomResult apply_eom(const QuditState &state, const EomGate &gate, double max_leakage = kMaxEomLeakage);

/// Bessel function of the first kind of integer order. Defined for all real x.
double bessel_j(int n, double x);

/// U[j, k] = exp(2 pi i j k / d) / sqrt(d). Throws ArgumentError for d < 2.
Matrix dft_gate(size_t d);

/// Throws ArgumentError if the matrix size differs from the state dimension.
QuditState apply_unitary(const QuditState &state, const Matrix &u);

/// Binary encoding of a d = 2^N level qudit on N qubits; level 0 maps to |0...0>, level d - 1
/// to |1...1>. Throws ArgumentError if d is not a power of two.
Statevector qudit_as_qubits(const QuditState &state);

enum class PhotonicKind { Ps, PsDftPs };

/// Pulse-shaper circuit on the even superposition: either one PS, or PS -> DFT -> PS.
/// Each PS stage varies the phases of the same `active_levels`; the others stay at phase 0.
struct PhotonicCircuit {
    PhotonicKind kind = PhotonicKind::Ps;
    size_t dim = 2;
    std::vector<size_t> active_levels;

    size_t num_stages() const {
        return kind == PhotonicKind::Ps ? 1 : 2;
    }
    size_t num_params() const {
        return num_stages() * active_levels.size();
    }
};

/// All d levels active. Throws ArgumentError for d < 2.
PhotonicCircuit full_photonic_circuit(PhotonicKind kind, size_t d);
/// k uniformly chosen active levels. Throws ArgumentError if k > d.
PhotonicCircuit random_photonic_circuit(PhotonicKind kind, size_t d, size_t k, Rng &rng);

/// Runs the circuit on even_superposition(d). params holds the active phases of the first PS,
/// then those of the second. Throws ArgumentError on a size mismatch.
QuditState photonic_pipeline(const PhotonicCircuit &circuit, std::span<const double> params);
/// All levels active: params has d entries for Ps and 2d for PsDftPs.
QuditState photonic_pipeline(PhotonicKind kind, size_t d, std::span<const double> params);

/// EOM -> PS -> EOM chain, the physical construction of a Fourier-type gate.
/// Leakage is summed over both modulators.
EomResult eom_ps_eom(const QuditState &state, const EomGate &first, const PsGate &shaper, const EomGate &second,
                     double max_leakage = kMaxEomLeakage);

/// Samples every active phase uniformly on [0, 2pi) and maps the qudit to qubits.
/// Throws ArgumentError if the circuit dimension is not a power of two.
StateSampler photonic_sampler(const PhotonicCircuit &circuit);

/// VQE over the phases of the circuit, with the qudit read as log2(d) qubits.
VqeOutcome photonic_vqe(const PhotonicCircuit &circuit, const PauliHamiltonian &h, const VqeOptions &opts,
                        uint64_t seed, std::optional<double> exact_energy = std::nullopt);

}  // namespace pqc

#endif
