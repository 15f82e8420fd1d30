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

#ifndef EXTREMAL_TESTS_SUPPORT_HPP
#define EXTREMAL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>

#include "extremal/certifier.hpp"
#include "extremal/eigh.hpp"
#include "extremal/matrix.hpp"
#include "extremal/qubit.hpp"
#include "extremal/random.hpp"
#include "extremal/state.hpp"

namespace extremal::testing {

inline HermitianMatrix random_hermitian(std::size_t order, Rng& rng) {
    return HermitianMatrix::symmetrized(complex_gaussian(order, order, rng));
}

/// Trace-one PSD matrix of exact rank r, built as G G^dagger / Tr with G an
/// order x r complex Gaussian.
inline HermitianMatrix random_density(std::size_t order, std::size_t rank, Rng& rng) {
    const Matrix g = complex_gaussian(order, rank, rng);
    Matrix m = g * g.adjoint();
    m *= Complex(1.0 / m.trace().real(), 0.0);
    return HermitianMatrix::symmetrized(m);
}

/// Strictly positive definite trace-one matrix, comfortably conditioned.
inline HermitianMatrix random_pd_density(std::size_t order, Rng& rng) {
    const Matrix g = complex_gaussian(order, order, rng);
    Matrix m = g * g.adjoint();
    Matrix ridge = Matrix::identity(order);
    ridge *= Complex(0.2 * static_cast<double>(order), 0.0);
    m += ridge;
    m *= Complex(1.0 / m.trace().real(), 0.0);
    return HermitianMatrix::symmetrized(m);
}

/// A rank-r member of C(its own marginals): random density plus the marginal
/// pair computed from it.
struct MemberWithMarginals {
    CoupledState state;
    MarginalPair marginals;
};

inline MemberWithMarginals random_member_own_marginals(const DimensionPair& dims,
                                                       std::size_t rank,
                                                       Rng& rng) {
    const HermitianMatrix rho = random_density(dims.n(), rank, rng);
    const Matrix m = rho.matrix();
    MarginalPair marginals(HermitianMatrix::symmetrized(partial_trace_over_2(m, dims)),
                           HermitianMatrix::symmetrized(partial_trace_over_1(m, dims)));
    return MemberWithMarginals{CoupledState(dims, m), std::move(marginals)};
}

inline MarginalPair maximally_mixed_marginals(const DimensionPair& dims) {
    HermitianMatrix r1 = HermitianMatrix::identity(dims.d1);
    r1 *= 1.0 / static_cast<double>(dims.d1);
    HermitianMatrix r2 = HermitianMatrix::identity(dims.d2);
    r2 *= 1.0 / static_cast<double>(dims.d2);
    return MarginalPair(std::move(r1), std::move(r2));
}

/// Valid QubitRank2Params by alternating projections: eigenvalue truncation
/// onto the rank<=2 PSD cone, then the exact marginal correction (which is
/// form-preserving for the kernel family). Distinct in law from
/// random_rank2_member's mixture construction.
inline QubitRank2Params sample_valid_rank2_params(Rng& rng) {
    const DimensionPair dims(2, 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 0.25);
    while (true) {
        QubitRank2Params params(unit(rng), Complex(normal(rng), normal(rng)),
                                Complex(normal(rng), normal(rng)),
                                Complex(normal(rng), normal(rng)),
                                Complex(normal(rng), normal(rng)));
        Matrix work = rank2_kernel(params, 1e-9).matrix.matrix();
        bool converged = false;
        for (int round = 0; round < 400 && !converged; ++round) {
            // Project onto the rank<=2 PSD cone.
            const auto eig = eigh(HermitianMatrix::symmetrized(work));
            Matrix truncated(4, 4);
            for (std::size_t m = 2; m < 4; ++m) {
                const double lambda = eig.eigenvalues[m];
                if (lambda <= 0.0) {
                    continue;
                }
                for (std::size_t i = 0; i < 4; ++i) {
                    for (std::size_t j = 0; j < 4; ++j) {
                        truncated(i, j) += lambda * eig.eigenvectors(i, m) *
                                           std::conj(eig.eigenvectors(j, m));
                    }
                }
            }
            // Exact correction back to the marginal-affine space.
            const Matrix half_eye = 0.5 * Matrix::identity(2);
            const Matrix e1 = partial_trace_over_2(truncated, dims) - half_eye;
            const Matrix e2 = partial_trace_over_1(truncated, dims) - half_eye;
            const double tau = e1.trace().real();
            Matrix corr = 0.5 * kron(e1, Matrix::identity(2));
            corr += 0.5 * kron(Matrix::identity(2), e2);
            corr -= Complex(tau / 4.0, 0.0) * Matrix::identity(4);
            work = truncated - corr;

            const HermitianMatrix h = HermitianMatrix::symmetrized(work);
            converged = is_psd(h, 1e-11) && rank_eps(h, 1e-9) == 2;
        }
        if (!converged) {
            continue;
        }
        const HermitianMatrix h = HermitianMatrix::symmetrized(work);
        QubitRank2Params extracted(std::clamp(2.0 * h(0, 0).real(), 0.0, 1.0), h(0, 1), h(0, 2),
                                   h(0, 3), h(1, 2));
        if (rank2_kernel(extracted, 1e-9).valid) {
            return extracted;
        }
    }
}

}  // namespace extremal::testing

#endif
