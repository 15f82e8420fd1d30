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

#ifndef EXTREMAL_EIGH_HPP
#define EXTREMAL_EIGH_HPP

#include <vector>

#include "extremal/matrix.hpp"

namespace extremal {

struct EighResult {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // unitary; column m pairs with eigenvalues[m]
};

/// Full eigendecomposition H = V diag(lambda) V^dagger of a hermitian matrix
/// by cyclic complex Jacobi rotations. Eigenvalues come back ascending with
/// matching eigenvector columns; reconstruction is accurate to a few ulps at
/// the orders this library targets.
EighResult eigh(const HermitianMatrix& h);

/// Number of eigenvalues with |lambda| > tol * max(1, max|lambda|).
/// Requires tol > 0.
std::size_t rank_eps(const HermitianMatrix& h, double tol);

/// True iff the minimum eigenvalue is >= -tol * max(1, max|lambda|).
/// Requires tol >= 0.
bool is_psd(const HermitianMatrix& h, double tol);

/// max |lambda|, i.e. the spectral norm of a hermitian matrix.
double spectral_norm(const HermitianMatrix& h);

double min_eigenvalue(const HermitianMatrix& h);

}  // namespace extremal

#endif
