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

#include "extremal/random.hpp"

#include <cmath>

namespace extremal {

Matrix complex_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    return m;
}

Matrix haar_unitary(std::size_t d, Rng& rng) {
    while (true) {
        Matrix g = complex_gaussian(d, d, rng);
        // Modified Gram-Schmidt on columns; retry the (measure-zero) case of
        // a numerically dependent draw.
        bool ok = true;
        for (std::size_t j = 0; j < d && ok; ++j) {
            for (std::size_t prev = 0; prev < j; ++prev) {
                Complex overlap = 0.0;
                for (std::size_t i = 0; i < d; ++i) {
                    overlap += std::conj(g(i, prev)) * g(i, j);
                }
                for (std::size_t i = 0; i < d; ++i) {
                    g(i, j) -= overlap * g(i, prev);
                }
            }
            double norm_sq = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                norm_sq += std::norm(g(i, j));
            }
            if (norm_sq < 1e-12) {
                ok = false;
                break;
            }
            const double inv_norm = 1.0 / std::sqrt(norm_sq);
            for (std::size_t i = 0; i < d; ++i) {
                g(i, j) *= inv_norm;
            }
        }
        if (ok) {
            return g;
        }
    }
}

}  // namespace extremal
