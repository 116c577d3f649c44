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

#ifndef PQC_TESTS_ORACLES_HPP
#define PQC_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "pqc/gate.hpp"
#include "pqc/pauli.hpp"
#include "pqc/rng.hpp"
#include "pqc/statevector.hpp"

namespace pqc::oracle {

using CVec = std::vector<Complex>;

inline size_t bit(size_t index, size_t n, size_t q) {
    return (index >> (n - 1 - q)) & 1;
}

/// Full 2^n matrix of `g` on `targets`, entry by entry: <i|U|j> = g[local(i), local(j)] when the
/// bits outside the targets agree, 0 otherwise.
inline Matrix embed(const Matrix &g, const std::vector<size_t> &targets, size_t n) {
    const size_t dim = size_t{1} << n;
    const size_t k = targets.size();
    Matrix u = Matrix::Zero(dim, dim);
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) {
            bool rest_equal = true;
            for (size_t q = 0; q < n; ++q) {
                bool is_target = false;
                for (size_t t : targets) {
                    is_target |= t == q;
                }
                if (!is_target && bit(i, n, q) != bit(j, n, q)) {
                    rest_equal = false;
                }
            }
            if (!rest_equal) {
                continue;
            }
            size_t li = 0;
            size_t lj = 0;
            for (size_t r = 0; r < k; ++r) {
                li = (li << 1) | bit(i, n, targets[r]);
                lj = (lj << 1) | bit(j, n, targets[r]);
            }
            u(i, j) = g(li, lj);
        }
    }
    return u;
}

inline CVec mat_vec(const Matrix &u, const CVec &v) {
    CVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = 0; j < v.size(); ++j) {
            out[i] += u(i, j) * v[j];
        }
    }
    return out;
}

inline CVec amplitudes(const Statevector &s) {
    return CVec(s.amplitudes().begin(), s.amplitudes().end());
}

inline CVec random_amplitudes(size_t dim, Rng &rng) {
    std::normal_distribution<double> g;
    CVec v(dim);
    double norm = 0;
    for (auto &a : v) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return v;
}

/// 1/2 sum_{i,j} |u_i v_j - u_j v_i|^2, term by term.
inline double distance_double_sum(const CVec &u, const CVec &v) {
    double s = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        for (size_t j = 0; j < u.size(); ++j) {
            s += std::norm(u[i] * v[j] - u[j] * v[i]);
        }
    }
    return 0.5 * s;
}

/// Amplitudes with qubit j fixed to b, in ascending order of the remaining bits.
inline CVec slice(const CVec &psi, size_t n, size_t j, size_t b) {
    CVec out;
    for (size_t i = 0; i < psi.size(); ++i) {
        if (bit(i, n, j) == b) {
            out.push_back(psi[i]);
        }
    }
    return out;
}

inline double q_double_sum(const CVec &psi, size_t n) {
    double s = 0;
    for (size_t j = 0; j < n; ++j) {
        s += distance_double_sum(slice(psi, n, j, 0), slice(psi, n, j, 1));
    }
    return 4.0 * s / static_cast<double>(n);
}

/// Tr(rho_j^2) with rho_j the 2x2 reduced density matrix of qubit j.
inline double single_qubit_purity(const CVec &psi, size_t n, size_t j) {
    Complex rho[2][2] = {};
    for (size_t a = 0; a < psi.size(); ++a) {
        for (size_t b = 0; b < psi.size(); ++b) {
            if ((a ^ b) & ~(size_t{1} << (n - 1 - j))) {
                continue;
            }
            rho[bit(a, n, j)][bit(b, n, j)] += psi[a] * std::conj(psi[b]);
        }
    }
    double p = 0;
    for (auto &row : rho) {
        for (auto &x : row) {
            p += std::norm(x);
        }
    }
    return p;
}

inline double q_from_purity(const CVec &psi, size_t n) {
    double mean = 0;
    for (size_t j = 0; j < n; ++j) {
        mean += single_qubit_purity(psi, n, j);
    }
    return 2.0 * (1.0 - mean / static_cast<double>(n));
}

/// Kronecker products of the 2x2 Paulis, summed.
inline Matrix kron_hamiltonian(const PauliHamiltonian &h) {
    const Complex i1(0, 1);
    auto single = [&](Pauli p) {
        Matrix m(2, 2);
        switch (p) {
            case Pauli::I:
                m << 1, 0, 0, 1;
                break;
            case Pauli::X:
                m << 0, 1, 1, 0;
                break;
            case Pauli::Y:
                m << 0, -i1, i1, 0;
                break;
            case Pauli::Z:
                m << 1, 0, 0, -1;
                break;
        }
        return m;
    };
    const size_t dim = size_t{1} << h.num_qubits;
    Matrix total = Matrix::Zero(dim, dim);
    for (const auto &t : h.terms) {
        Matrix m = Matrix::Identity(1, 1);
        for (size_t q = 0; q < h.num_qubits; ++q) {
            Matrix s = single(t.string[q]);
            Matrix k(m.rows() * 2, m.cols() * 2);
            for (Eigen::Index r = 0; r < m.rows(); ++r) {
                for (Eigen::Index c = 0; c < m.cols(); ++c) {
                    k.block(2 * r, 2 * c, 2, 2) = m(r, c) * s;
                }
            }
            m = k;
        }
        total += t.coefficient * m;
    }
    return total;
}

/// Ascending series sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!) in long double, run until the terms
/// stop changing the sum.
inline double bessel_series(int n, double x) {
    long double half = static_cast<long double>(x) / 2;
    long double term = 1;
    for (int k = 1; k <= n; ++k) {
        term *= half / k;
    }
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= -half * half / (static_cast<long double>(k) * (k + n));
        sum += term;
        if (std::fabs(term) < 1e-30L && k > x) {
            break;
        }
    }
    return static_cast<double>(sum);
}

}  // namespace pqc::oracle

#endif
