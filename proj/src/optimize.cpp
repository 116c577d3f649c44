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

#include "pqc/optimize.hpp"

#include <algorithm>
#include <numeric>

namespace pqc {

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &opts) {
    const size_t n = x0.size();
    size_t evals = 0;
    auto eval = [&](const std::vector<double> &x) {
        ++evals;
        return f(x);
    };
    if (n == 0) {
        double v = eval(x0);
        return {std::move(x0), v, evals, true};
    }

    const double dn = static_cast<double>(n);
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / dn;
    const double gamma = 0.75 - 1.0 / (2.0 * dn);
    const double delta = 1.0 - 1.0 / dn;

    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> values(n + 1);
    for (size_t i = 0; i < n; ++i) {
        simplex[i + 1][i] += opts.initial_step;
    }
    for (size_t i = 0; i <= n; ++i) {
        values[i] = eval(simplex[i]);
    }

    std::vector<size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    auto point = [&](double t, std::vector<double> &out) {
        const auto &worst = simplex[order[n]];
        for (size_t k = 0; k < n; ++k) {
            out[k] = centroid[k] + t * (centroid[k] - worst[k]);
        }
    };

    bool converged = false;
    while (true) {
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
        if (values[order[n]] - values[order[0]] < opts.f_tolerance) {
            converged = true;
            break;
        }
        if (evals >= opts.max_evaluations) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t i = 0; i < n; ++i) {
            const auto &v = simplex[order[i]];
            for (size_t k = 0; k < n; ++k) {
                centroid[k] += v[k];
            }
        }
        for (double &c : centroid) {
            c /= dn;
        }

        const double f_best = values[order[0]];
        const double f_second_worst = values[order[n - 1]];
        const double f_worst = values[order[n]];

        point(alpha, xr);
        const double fr = eval(xr);
        if (fr < f_best) {
            point(alpha * beta, xe);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[order[n]] = xe;
                values[order[n]] = fe;
            } else {
                simplex[order[n]] = xr;
                values[order[n]] = fr;
            }
            continue;
        }
        if (fr < f_second_worst) {
            simplex[order[n]] = xr;
            values[order[n]] = fr;
            continue;
        }
        if (fr < f_worst) {
            point(alpha * gamma, xc);
            const double fc = eval(xc);
            if (fc <= fr) {
                simplex[order[n]] = xc;
                values[order[n]] = fc;
                continue;
            }
        } else {
            point(-gamma, xc);
            const double fc = eval(xc);
            if (fc < f_worst) {
                simplex[order[n]] = xc;
                values[order[n]] = fc;
                continue;
            }
        }
        // Shrink toward the best vertex.
        const auto best = simplex[order[0]];
        for (size_t i = 1; i <= n; ++i) {
            auto &v = simplex[order[i]];
            for (size_t k = 0; k < n; ++k) {
                v[k] = best[k] + delta * (v[k] - best[k]);
            }
            values[order[i]] = eval(v);
        }
    }
    const size_t best = order[0];
    return {simplex[best], values[best], evals, converged};
}

}  // namespace pqc
