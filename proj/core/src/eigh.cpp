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

#include "extremal/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace extremal {

namespace {

// One Jacobi rotation zeroing w(p,q). w is the working copy (hermitian), v
// accumulates the product of rotations so that input = v * diag * v^dagger
// at convergence.
void rotate(Matrix& w, Matrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = w.rows();
    const Complex h = w(p, q);
    const double habs = std::abs(h);
    const Complex phase = h / habs;  // e^{i phi}

    const double tau = (w(q, q).real() - w(p, p).real()) / (2.0 * habs);
    double t;
    if (tau >= 0.0) {
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    } else {
        t = 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Unitary R = I except R(p,p)=c, R(p,q)=s*phase, R(q,p)=-s*conj(phase),
    // R(q,q)=c; update w <- R^dagger w R, v <- v R.
    const Complex s_phase = s * phase;
    const Complex s_phase_conj = std::conj(s_phase);

    const double dp = w(p, p).real() - t * habs;
    const double dq = w(q, q).real() + t * habs;

    for (std::size_t i = 0; i < n; ++i) {
        if (i == p || i == q) {
            continue;
        }
        const Complex wip = w(i, p);
        const Complex wiq = w(i, q);
        w(i, p) = c * wip - s_phase_conj * wiq;
        w(i, q) = s_phase * wip + c * wiq;
        w(p, i) = std::conj(w(i, p));
        w(q, i) = std::conj(w(i, q));
    }
    w(p, p) = dp;
    w(q, q) = dq;
    w(p, q) = 0.0;
    w(q, p) = 0.0;

    for (std::size_t i = 0; i < n; ++i) {
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = c * vip - s_phase_conj * viq;
        v(i, q) = s_phase * vip + c * viq;
    }
}

double off_diagonal_max(const Matrix& w) {
    double m = 0.0;
    for (std::size_t p = 0; p + 1 < w.rows(); ++p) {
        for (std::size_t q = p + 1; q < w.cols(); ++q) {
            m = std::max(m, std::abs(w(p, q)));
        }
    }
    return m;
}

}  // namespace

EighResult eigh(const HermitianMatrix& h) {
    const std::size_t n = h.order();
    Matrix w = h.matrix();
    Matrix v = Matrix::identity(n);

    if (n > 1) {
        const double scale = std::max(h.max_abs(), 1e-300);
        constexpr int kMaxSweeps = 64;
        int sweep = 0;
        for (; sweep < kMaxSweeps; ++sweep) {
            const double off = off_diagonal_max(w);
            if (off <= 1e-15 * scale) {
                break;
            }
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    if (std::abs(w(p, q)) > 1e-18 * scale) {
                        rotate(w, v, p, q);
                    }
                }
            }
        }
        if (sweep == kMaxSweeps) {
            throw Error("eigh: Jacobi sweeps failed to converge");
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return w(a, a).real() < w(b, b).real(); });

    EighResult out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t m = 0; m < n; ++m) {
        out.eigenvalues[m] = w(order[m], order[m]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, m) = v(i, order[m]);
        }
    }
    return out;
}

std::size_t rank_eps(const HermitianMatrix& h, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("rank_eps requires tol > 0");
    }
    const auto eig = eigh(h);
    double max_abs_lambda = 0.0;
    for (double lambda : eig.eigenvalues) {
        max_abs_lambda = std::max(max_abs_lambda, std::abs(lambda));
    }
    const double threshold = tol * std::max(1.0, max_abs_lambda);
    std::size_t r = 0;
    for (double lambda : eig.eigenvalues) {
        if (std::abs(lambda) > threshold) {
            ++r;
        }
    }
    return r;
}

bool is_psd(const HermitianMatrix& h, double tol) {
    if (tol < 0.0) {
        throw std::invalid_argument("is_psd requires tol >= 0");
    }
    const auto eig = eigh(h);
    double max_abs_lambda = 0.0;
    for (double lambda : eig.eigenvalues) {
        max_abs_lambda = std::max(max_abs_lambda, std::abs(lambda));
    }
    return eig.eigenvalues.empty() ||
           eig.eigenvalues.front() >= -tol * std::max(1.0, max_abs_lambda);
}

double spectral_norm(const HermitianMatrix& h) {
    const auto eig = eigh(h);
    double m = 0.0;
    for (double lambda : eig.eigenvalues) {
        m = std::max(m, std::abs(lambda));
    }
    return m;
}

double min_eigenvalue(const HermitianMatrix& h) {
    const auto eig = eigh(h);
    if (eig.eigenvalues.empty()) {
        throw DimensionError("min_eigenvalue of an empty matrix");
    }
    return eig.eigenvalues.front();
}

}  // namespace extremal
