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

#ifndef EXTREMAL_SAMPLER_HPP
#define EXTREMAL_SAMPLER_HPP

#include <vector>

#include "extremal/certifier.hpp"
#include "extremal/matrix.hpp"
#include "extremal/random.hpp"
#include "extremal/state.hpp"

namespace extremal {

/// Orthonormal basis of the real space of hermitian n x n perturbations with
/// both marginals zero; its dimension is n^2 - d1^2 - d2^2 + 1 (the trace
/// constraint is shared between the two marginal maps).
std::vector<HermitianMatrix> zero_marginal_basis(const DimensionPair& dims,
                                                 double rank_tol = 1e-9);

/// Random full-rank member of C(rho1, rho2): the product state plus a random
/// zero-marginal perturbation scaled so the smallest eigenvalue stays above
/// (1 - spread) times that of the product state. Requires both marginals
/// strictly positive definite and spread in (0, 1).
CoupledState sample_interior(const MarginalPair& marginals, Rng& rng, double spread);

/// Largest t with K + t L still PSD: t* = 1/mu for mu the top eigenvalue of
/// -K^{-1/2} L K^{-1/2}. Requires K strictly PD; throws DirectionError when
/// the direction never hits the boundary (mu <= 0 beyond tolerance).
double max_step(const HermitianMatrix& k, const HermitianMatrix& l, double tol = 1e-9);

struct WalkStep {
    std::size_t rank_before;
    double t_star;
    std::size_t rank_after;
};

/// Record of a facial walk: ranks strictly decrease step over step and the
/// final state is extremal.
struct FacialWalkTrace {
    std::size_t start_rank = 0;
    std::vector<WalkStep> steps;
    CoupledState final_state;
};

/// The walk failed to make progress (rank did not strictly decrease);
/// carries the trace accumulated so far, without a final state.
struct WalkError : Error {
    WalkError(std::string message, std::size_t start_rank, std::vector<WalkStep> steps)
        : Error(std::move(message)), start_rank(start_rank), steps(std::move(steps)) {}
    std::size_t start_rank;
    std::vector<WalkStep> steps;
};

/// Walk a member of C(rho1, rho2) to an extreme point: while the D-space
/// test fails, move along a random unit direction of the orthogonal
/// complement, lifted through the block decomposition, all the way to the
/// PSD boundary. Each step strictly reduces the rank, so at most n steps
/// happen. Throws MembershipError if the start (or, through accumulated
/// drift, an intermediate state) leaves C.
FacialWalkTrace extremize(const CoupledState& state,
                          const MarginalPair& marginals,
                          Rng& rng,
                          const CertifierOptions& opts = {});

}  // namespace extremal

#endif
