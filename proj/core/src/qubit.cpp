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

#include "extremal/qubit.hpp"

#include <cmath>

#include "extremal/eigh.hpp"

namespace extremal {

namespace {

const DimensionPair kQubitDims(2, 2);

}  // namespace

MaxEntangledSpec::MaxEntangledSpec(Matrix coeffs) : u(std::move(coeffs)) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("MaxEntangledSpec: coefficient matrix must be 2 x 2");
    }
    if ((u.adjoint() * u - Matrix::identity(2)).max_abs() > 1e-10) {
        throw std::invalid_argument("MaxEntangledSpec: coefficient matrix is not unitary");
    }
}

CoupledState max_entangled(const MaxEntangledSpec& spec) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Complex amp[4];
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            amp[kQubitDims.flat(x, y)] = inv_sqrt2 * spec.u(x, y);
        }
    }
    Matrix rho(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            rho(i, j) = amp[i] * std::conj(amp[j]);
        }
    }
    return CoupledState(kQubitDims, std::move(rho));
}

bool is_max_entangled(const CoupledState& state, double tol) {
    if (state.dims != kQubitDims) {
        return false;
    }
    const HermitianMatrix h = HermitianMatrix::symmetrized(state.rho);
    if (rank_eps(h, tol) != 1) {
        return false;
    }
    const Matrix half_eye = 0.5 * Matrix::identity(2);
    return (partial_trace_over_2(state.rho, kQubitDims) - half_eye).max_abs() <= tol &&
           (partial_trace_over_1(state.rho, kQubitDims) - half_eye).max_abs() <= tol;
}

QubitRank2Params::QubitRank2Params(double a_, Complex x_, Complex y_, Complex z_, Complex t_)
    : a(a_), x(x_), y(y_), z(z_), t(t_) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw std::invalid_argument("QubitRank2Params: a must lie in [0, 1]");
    }
}

Rank2Kernel rank2_kernel(const QubitRank2Params& params, double tol) {
    HermitianMatrix k(4);
    k.set(0, 0, 0.5 * params.a);
    k.set(1, 1, 0.5 * (1.0 - params.a));
    k.set(2, 2, 0.5 * (1.0 - params.a));
    k.set(3, 3, 0.5 * params.a);
    k.set(0, 1, params.x);
    k.set(0, 2, params.y);
    k.set(0, 3, params.z);
    k.set(1, 2, params.t);
    k.set(1, 3, -params.y);
    k.set(2, 3, -params.x);
    const bool valid = is_psd(k, tol) && rank_eps(k, tol) == 2;
    return Rank2Kernel{std::move(k), valid};
}

CoupledState random_rank2_member(Rng& rng) {
    std::uniform_real_distribution<double> mix(0.1, 0.9);
    while (true) {
        const CoupledState omega1 = max_entangled(MaxEntangledSpec(haar_unitary(2, rng)));
        const CoupledState omega2 = max_entangled(MaxEntangledSpec(haar_unitary(2, rng)));
        const double lambda = mix(rng);
        Matrix rho = lambda * omega1.rho + (1.0 - lambda) * omega2.rho;
        const HermitianMatrix h = HermitianMatrix::symmetrized(rho);
        if (rank_eps(h, 1e-9) == 2) {
            return CoupledState(kQubitDims, std::move(rho));
        }
    }
}

}  // namespace extremal
