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

#ifndef PQC_OPTIMIZE_HPP
#define PQC_OPTIMIZE_HPP

#include <functional>
#include <span>
#include <vector>

namespace pqc {

struct NelderMeadOptions {
    /// Offset of each initial simplex vertex from the start point, per coordinate.
    double initial_step = 0.5;
    /// Stop once max f - min f over the simplex falls below this.
    double f_tolerance = 1e-6;
    size_t max_evaluations = 20000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double f;
    size_t evaluations;
    bool converged;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free minimization with the Nelder-Mead simplex method, using the
/// dimension-adaptive reflection/expansion/contraction/shrink coefficients of Gao and Han, which
/// keep the simplex from collapsing in the 30-50 dimensional problems seen here.
/// A zero-dimensional problem evaluates f once.
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &opts = {});

}  // namespace pqc

#endif
