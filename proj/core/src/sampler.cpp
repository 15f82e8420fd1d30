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

#include "extremal/sampler.hpp"

#include <cmath>

#include "extremal/eigh.hpp"
#include "extremal/real_span.hpp"

namespace extremal {

std::vector<HermitianMatrix> zero_marginal_basis(const DimensionPair& dims, double rank_tol) {
    const std::size_t n = dims.n();
    const auto basis = hermitian_basis(n);

    // One constraint row per real coordinate of the two marginal maps, one
    // column per hermitian basis element of the full space.
    const std::size_t eqns = dims.d1 * dims.d1 + dims.d2 * dims.d2;
    std::vector<std::vector<double>> constraint(eqns, std::vector<double>(n * n, 0.0));
    for (std::size_t m = 0; m < basis.size(); ++m) {
        const Matrix full = basis[m].matrix();
        const auto v1 = vec_hermitian(HermitianMatrix::symmetrized(partial_trace_over_2(full, dims)));
        const auto v2 = vec_hermitian(HermitianMatrix::symmetrized(partial_trace_over_1(full, dims)));
        for (std::size_t r = 0; r < v1.size(); ++r) {
            constraint[r][m] = v1[r];
        }
        for (std::size_t r = 0; r < v2.size(); ++r) {
            constraint[v1.size() + r][m] = v2[r];
        }
    }

    const SpanAnalysis span = analyze_row_span(constraint, n * n, rank_tol);
    std::vector<HermitianMatrix> out;
    out.reserve(span.null_basis.size());
    for (const auto& coords : span.null_basis) {
        out.push_back(unvec_hermitian(coords, n));
    }
    return out;
}

CoupledState sample_interior(const MarginalPair& marginals, Rng& rng, double spread) {
    if (!(spread > 0.0 && spread < 1.0)) {
        throw std::invalid_argument("sample_interior: spread must lie in (0, 1)");
    }
    const DimensionPair dims = marginals.dims();
    const double rank_tol = 1e-9;
    if (rank_eps(marginals.rho1, rank_tol) != dims.d1 ||
        rank_eps(marginals.rho2, rank_tol) != dims.d2) {
        throw std::invalid_argument(
            "sample_interior: marginals must be strictly positive definite; extremize a "
            "manually supplied member instead");
    }

    const Matrix base = kron(marginals.rho1.matrix(), marginals.rho2.matrix());
    const HermitianMatrix base_h = HermitianMatrix::symmetrized(base);
    const double lambda_min_base = min_eigenvalue(base_h);

    const auto directions = zero_marginal_basis(dims, rank_tol);
    if (directions.empty()) {
        return CoupledState(dims, base);
    }

    std::normal_distribution<double> normal(0.0, 1.0);
    HermitianMatrix delta(dims.n());
    for (const HermitianMatrix& dir : directions) {
        delta += normal(rng) * dir;
    }
    const double delta_norm = spectral_norm(delta);
    if (delta_norm == 0.0) {
        return CoupledState(dims, base);
    }
    const double scale = spread * lambda_min_base / delta_norm;
    return CoupledState(dims, base + scale * delta.matrix());
}

double max_step(const HermitianMatrix& k, const HermitianMatrix& l, double tol) {
    if (k.order() != l.order()) {
        throw DimensionError("max_step: mismatched orders");
    }
    const auto eig = eigh(k);
    if (!(eig.eigenvalues.front() > 0.0)) {
        throw std::invalid_argument("max_step: K must be strictly positive definite");
    }

    // Whitened direction -K^{-1/2} L K^{-1/2}; its top eigenvalue mu gives
    // the boundary point t* = 1/mu.
    const std::size_t order = k.order();
    Matrix root_inv = eig.eigenvectors;
    for (std::size_t j = 0; j < order; ++j) {
        const double f = 1.0 / std::sqrt(eig.eigenvalues[j]);
        for (std::size_t i = 0; i < order; ++i) {
            root_inv(i, j) *= f;
        }
    }
    root_inv = root_inv * eig.eigenvectors.adjoint();
    const HermitianMatrix whitened =
        HermitianMatrix::symmetrized(-(root_inv * (l.matrix() * root_inv)));

    const double mu = eigh(whitened).eigenvalues.back();
    if (mu <= tol * std::max(1.0, spectral_norm(whitened))) {
        throw DirectionError("max_step: direction never reaches the PSD boundary");
    }
    return 1.0 / mu;
}

namespace {

// Exact correction returning rho to the marginal-affine subspace:
// subtracting E1 (x) I/d2 + I (x) E2/d1 - (tau/n) I removes marginal errors
// E1, E2 and the trace error tau in one shot.
Matrix marginal_correction(const Matrix& e1, const Matrix& e2, const DimensionPair& dims) {
    const double tau = (e1.trace()).real();
    Matrix corr = kron(e1, Matrix::identity(dims.d2));
    corr *= Complex(1.0 / static_cast<double>(dims.d2), 0.0);
    Matrix second = kron(Matrix::identity(dims.d1), e2);
    second *= Complex(1.0 / static_cast<double>(dims.d1), 0.0);
    corr += second;
    Matrix trace_part = Matrix::identity(dims.n());
    trace_part *= Complex(tau / static_cast<double>(dims.n()), 0.0);
    corr -= trace_part;
    return corr;
}

}  // namespace

FacialWalkTrace extremize(const CoupledState& state,
                          const MarginalPair& marginals,
                          Rng& rng,
                          const CertifierOptions& opts) {
    const DimensionPair dims = state.dims;
    const std::size_t n = dims.n();
    std::normal_distribution<double> normal(0.0, 1.0);

    Matrix rho = state.rho;
    std::size_t start_rank = 0;
    std::vector<WalkStep> steps;

    for (std::size_t iter = 0; iter <= n; ++iter) {
        if (auto violation = validate_membership(CoupledState(dims, rho), marginals,
                                                 opts.membership_tol)) {
            throw MembershipError("extremize: " + violation->message);
        }
        const HermitianMatrix h = HermitianMatrix::symmetrized(rho);
        const std::size_t rank = rank_eps(h, opts.rank_tol);
        if (iter == 0) {
            start_rank = rank;
        }

        const BlockDecomposition dec = block_decompose(h, opts.rank_tol);
        const auto generators = perturbation_generators(dec, dims);
        const DSpace dspace = d_space_rank(generators, opts.rank_tol);
        if (dspace.dim_d == dec.k * dec.k) {
            return FacialWalkTrace{start_rank, std::move(steps), CoupledState(dims, std::move(rho))};
        }

        // Random unit direction in the orthogonal complement, so repeated
        // seeded walks explore different extreme points.
        HermitianMatrix direction(dec.k);
        for (const HermitianMatrix& d : dspace.dperp_basis) {
            direction += normal(rng) * d;
        }
        const double norm = direction.frobenius_norm();
        if (norm == 0.0) {
            direction = dspace.dperp_basis.front();
        } else {
            direction *= 1.0 / norm;
        }

        const double t_star = max_step(dec.K, direction, opts.rank_tol);
        rho += t_star * lift_through(dec, direction).matrix();

        // Re-project accumulated marginal drift once it is measurable.
        const Matrix e1 = partial_trace_over_2(rho, dims) - marginals.rho1.matrix();
        const Matrix e2 = partial_trace_over_1(rho, dims) - marginals.rho2.matrix();
        if (std::max(e1.max_abs(), e2.max_abs()) > 1e-10) {
            rho -= marginal_correction(e1, e2, dims);
        }

        const std::size_t rank_after = rank_eps(HermitianMatrix::symmetrized(rho), opts.rank_tol);
        steps.push_back(WalkStep{rank, t_star, rank_after});
        if (rank_after >= rank) {
            throw WalkError("extremize: rank failed to decrease at the boundary step",
                            start_rank, std::move(steps));
        }
    }
    throw WalkError("extremize: walk exceeded the rank budget", start_rank, std::move(steps));
}

}  // namespace extremal
