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

#ifndef EXTREMAL_CERTIFIER_HPP
#define EXTREMAL_CERTIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "extremal/decomp.hpp"
#include "extremal/matrix.hpp"
#include "extremal/state.hpp"

namespace extremal {

/// Target marginals (rho1, rho2) defining the convex set C(rho1, rho2) of
/// bipartite states with those relative traces. Each must be PSD with unit
/// trace within tol; the constructor throws std::invalid_argument otherwise.
struct MarginalPair {
    HermitianMatrix rho1;
    HermitianMatrix rho2;

    MarginalPair(HermitianMatrix r1, HermitianMatrix r2, double tol = 1e-8);

    DimensionPair dims() const { return DimensionPair(rho1.order(), rho2.order()); }
};

struct Violation {
    enum class Kind {
        NotHermitian,
        NotPositiveSemidefinite,
        Trace,
        Marginal1,
        Marginal2,
    };
    Kind kind;
    double magnitude;
    std::string message;
};

const char* violation_kind_name(Violation::Kind kind);

/// First failed membership check among (in order): hermiticity, positive
/// semidefiniteness, unit trace, marginal over H2 equals rho1, marginal over
/// H1 equals rho2 - each within tol in max-norm. nullopt means the state is
/// in C(rho1, rho2) within tol.
std::optional<Violation> validate_membership(const CoupledState& state,
                                             const MarginalPair& marginals,
                                             double tol);

/// The d1^2 + d2^2 compressed perturbation directions
///   [I_k | A] sigma (X1 (x) I + I (x) X2) sigma^-1 [I_k ; A^dagger],
/// X1 and X2 running over hermitian_basis(d1) and hermitian_basis(d2). Their
/// real span decides extremality.
std::vector<HermitianMatrix> perturbation_generators(const BlockDecomposition& dec,
                                                     const DimensionPair& dims);

struct DSpace {
    std::size_t dim_d;
    std::vector<HermitianMatrix> dperp_basis;  // orthonormal, Frobenius inner product
};

/// Real span dimension of the generators in vec_hermitian coordinates and an
/// orthonormal basis of the orthogonal complement. dim_d + dperp size == k^2.
DSpace d_space_rank(const std::vector<HermitianMatrix>& generators, double rank_tol = 1e-9);

struct PerturbationSpaceReport {
    std::size_t k = 0;
    std::vector<HermitianMatrix> generators;
    std::size_t dim_d = 0;
    std::size_t k_squared = 0;
    std::size_t dperp_dim = 0;
};

/// Two distinct members of C averaging to the certified state: the
/// constructive disproof of extremality.
struct NonExtremalityWitness {
    HermitianMatrix L;  // hermitian k x k direction, orthogonal to the D space
    double epsilon;
    CoupledState rho_plus;
    CoupledState rho_minus;
};

struct CertifierOptions {
    double membership_tol = 1e-8;
    double rank_tol = 1e-9;
    /// Decide full-rank states by the singularity criterion instead of the
    /// D-space computation (requires d1, d2 >= 2; ignored otherwise).
    bool full_rank_shortcut = true;
    /// Compute the D-space report even when the shortcut already decided.
    bool always_analyze = false;
};

struct ExtremalityVerdict {
    enum class Tag { Extremal, NotExtremal, NotInC };
    enum class Route { DSpace, FullRankShortcut, Singleton };

    Tag tag = Tag::NotInC;
    Route route = Route::DSpace;
    std::size_t rank = 0;
    std::optional<PerturbationSpaceReport> report;    // always set on Extremal
    std::optional<NonExtremalityWitness> witness;     // set on NotExtremal
    std::optional<Violation> violation;               // set on NotInC

    bool is_extremal() const { return tag == Tag::Extremal; }
};

/// Decide whether state is an extreme point of C(rho1, rho2).
///
/// Pipeline: membership validation (NotInC on failure); singleton set
/// short-circuit when both marginals are pure; full-rank shortcut for
/// nonsingular states when both local dimensions are >= 2; otherwise block
/// decomposition, perturbation generators and the D-space span test -
/// extremal exactly when the span is all hermitian k x k matrices.
ExtremalityVerdict check_extremal(const CoupledState& state,
                                  const MarginalPair& marginals,
                                  const CertifierOptions& opts = {});

/// Build the witness pair rho +/- epsilon * lift(L) for a direction L in the
/// orthogonal complement of D, with epsilon = lambda_min(K) / (2 |L|_spec).
/// Throws DirectionError if L is zero or its lift leaks into the marginals
/// beyond tol.
NonExtremalityWitness make_witness(const CoupledState& state,
                                   const BlockDecomposition& dec,
                                   const HermitianMatrix& l,
                                   double tol = 1e-8);

/// Independent extremality oracle on an orthonormal basis S of range(rho):
/// extremal iff the only hermitian k x k L with Tr_1(S L S^dagger) = 0 and
/// Tr_2(S L S^dagger) = 0 is L = 0. Shares no code with the (K, A, sigma)
/// route above beyond the numcore primitives. Throws MembershipError if the
/// state is not in C.
bool oracle_extremal(const CoupledState& state,
                     const MarginalPair& marginals,
                     const CertifierOptions& opts = {});

/// floor(sqrt(d1^2 + d2^2 - 1)), the largest rank an extreme point of
/// C(rho1, rho2) can have.
std::size_t rank_bound(const DimensionPair& dims);

}  // namespace extremal

#endif
