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

#ifndef EXTREMAL_DECOMP_HPP
#define EXTREMAL_DECOMP_HPP

#include <vector>

#include "extremal/matrix.hpp"

namespace extremal {

/// Basis permutation, stored as new position -> old index. Conjugation is
/// pure index relabeling and therefore bit-exact:
/// (sigma M sigma^-1)(i,j) = M(map[i], map[j]).
class Permutation {
  public:
    explicit Permutation(std::vector<std::size_t> map);
    static Permutation identity(std::size_t n);

    std::size_t size() const { return map_.size(); }
    std::size_t operator[](std::size_t i) const { return map_[i]; }

    /// sigma M sigma^-1.
    Matrix conjugate(const Matrix& m) const;

    /// sigma^-1 M sigma, the inverse relabeling.
    Matrix conjugate_inverse(const Matrix& m) const;

  private:
    std::vector<std::size_t> map_;
};

/// Permuted block form of a rank-k PSD matrix:
///   sigma rho sigma^-1 = [[K, KA], [A^dagger K, A^dagger K A]]
/// with K strictly positive definite of order k and A of shape k x (n-k)
/// (empty when k == n).
struct BlockDecomposition {
    Permutation perm;
    std::size_t k;
    HermitianMatrix K;
    Matrix A;
    std::size_t n;
};

/// Greedy pivoted-Cholesky pivot order: repeatedly take the index with the
/// largest remaining Schur-complement diagonal (ties to the lowest index)
/// until the largest remaining diagonal drops to tol * (largest original
/// diagonal). Throws ConeViolationError if rho is not PSD within tol.
std::vector<std::size_t> select_pivots(const HermitianMatrix& rho, double tol);

/// Block decomposition with the select_pivots order first and the remaining
/// indices ascending. Throws ConeViolationError (not PSD) or
/// DecompositionError (leading block numerically singular).
BlockDecomposition block_decompose(const HermitianMatrix& rho, double tol);

/// Same, but with a caller-chosen pivot set; the pivots must leave a
/// nonsingular leading block. Exposed for cross-checking that results do not
/// depend on the pivot choice.
BlockDecomposition block_decompose_with_pivots(const HermitianMatrix& rho,
                                               const std::vector<std::size_t>& pivots,
                                               double tol);

/// sigma^-1 [[K, KA], [A^dagger K, A^dagger K A]] sigma.
HermitianMatrix reconstruct(const BlockDecomposition& dec);

/// Lift a hermitian k x k matrix through the decomposition:
/// sigma^-1 [I; A^dagger] L [I | A] sigma. The result is the perturbation of
/// the original matrix induced by replacing K with K + L.
HermitianMatrix lift_through(const BlockDecomposition& dec, const HermitianMatrix& l);

}  // namespace extremal

#endif
