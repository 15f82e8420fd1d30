// Copyright 2026 The extremal-states Authors
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

#include "extremal/real_span.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

// Column-major working storage: col[j] is the j-th column of A, length m.
struct Columns {
    std::size_t m = 0;
    std::vector<std::vector<double>> col;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

}  // namespace

SpanAnalysis analyze_row_span(const std::vector<std::vector<double>>& rows,
                              std::size_t cols,
                              double rel_tol) {
    if (!(rel_tol > 0.0)) {
        throw std::invalid_argument("analyze_row_span requires rel_tol > 0");
    }
    const std::size_t m = rows.size();
    Columns a;
    a.m = m;
    a.col.assign(cols, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != cols) {
            throw DimensionError("analyze_row_span: row length mismatch");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            a.col[j][i] = rows[i][j];
        }
    }

    // v accumulates the right rotations, column-major; A*v keeps the running
    // orthogonalized columns, so null columns of A*v expose nullspace
    // directions v[:,j].
    std::vector<std::vector<double>> v(cols, std::vector<double>(cols, 0.0));
    for (std::size_t j = 0; j < cols; ++j) {
        v[j][j] = 1.0;
    }

    constexpr int kMaxSweeps = 64;
    constexpr double kOrthTol = 1e-15;
    int sweep = 0;
    for (; sweep < kMaxSweeps && cols > 1; ++sweep) {
        double scale_sq = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            scale_sq = std::max(scale_sq, dot(a.col[j], a.col[j]));
        }
        // Columns this far below the largest one are numerically zero; their
        // v columns are already nullspace directions and rotating them would
        // just churn noise.
        const double drop_sq = scale_sq * 1e-30;

        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                const double app = dot(a.col[p], a.col[p]);
                const double aqq = dot(a.col[q], a.col[q]);
                if (app <= drop_sq || aqq <= drop_sq) {
                    continue;
                }
                const double apq = dot(a.col[p], a.col[q]);
                if (std::abs(apq) <= kOrthTol * std::sqrt(app * aqq) || apq == 0.0) {
                    continue;
                }
                rotated = true;
                const double tau = (aqq - app) / (2.0 * apq);
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t i = 0; i < m; ++i) {
                    const double ap = a.col[p][i];
                    const double aq = a.col[q][i];
                    a.col[p][i] = c * ap - s * aq;
                    a.col[q][i] = s * ap + c * aq;
                }
                for (std::size_t i = 0; i < cols; ++i) {
                    const double vp = v[p][i];
                    const double vq = v[q][i];
                    v[p][i] = c * vp - s * vq;
                    v[q][i] = s * vp + c * vq;
                }
            }
        }
        if (!rotated) {
            break;
        }
    }
    if (sweep == kMaxSweeps) {
        throw Error("analyze_row_span: Jacobi sweeps failed to converge");
    }

    std::vector<double> sigma(cols);
    double sigma_max = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
        sigma[j] = std::sqrt(dot(a.col[j], a.col[j]));
        sigma_max = std::max(sigma_max, sigma[j]);
    }

    // Deterministic order: descending singular value, index as tie-break.
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    const double threshold = rel_tol * sigma_max;
    SpanAnalysis out;
    for (std::size_t j : order) {
        if (sigma_max > 0.0 && sigma[j] > threshold) {
            ++out.rank;
        } else {
            out.null_basis.push_back(v[j]);
        }
    }
    return out;
}

}  // namespace extremal
