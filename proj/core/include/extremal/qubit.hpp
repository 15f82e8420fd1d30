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

#ifndef EXTREMAL_QUBIT_HPP
#define EXTREMAL_QUBIT_HPP

#include "extremal/matrix.hpp"
#include "extremal/random.hpp"
#include "extremal/state.hpp"

namespace extremal {

/// A maximally entangled two-qubit state written through the unitary
/// coefficient matrix u: |Omega> = (1/sqrt(2)) sum_{x,y} u(x,y) |x>|y>, i.e.
/// |psi_x> = sum_y u(x,y)|y> is the second-factor basis paired with |x>.
struct MaxEntangledSpec {
    Matrix u;

    /// Requires u to be 2 x 2 and unitary within 1e-10.
    explicit MaxEntangledSpec(Matrix coeffs);
};

/// |Omega><Omega| as a 4 x 4 state; rank 1 with both marginals I/2.
CoupledState max_entangled(const MaxEntangledSpec& spec);

/// True iff rho is 4 x 4, rank 1, and both marginals equal I/2 within tol.
bool is_max_entangled(const CoupledState& state, double tol);

/// Parameters of the two-qubit rank-2 kernel family: diagonal
/// (a/2, (1-a)/2, (1-a)/2, a/2) with the antisymmetric off-diagonal pattern
/// (x, y, z, t, -y, -x). Any hermitian 4 x 4 matrix with both marginals I/2
/// is of this form.
struct QubitRank2Params {
    double a;  // in [0, 1]
    Complex x, y, z, t;

    QubitRank2Params(double a_, Complex x_, Complex y_, Complex z_, Complex t_);
};

struct Rank2Kernel {
    HermitianMatrix matrix;
    bool valid;  // PSD within tol and rank exactly 2
};

/// Build the kernel matrix; both marginals equal I/2 identically in the
/// parameters. valid reports whether the result is a PSD rank-2 state.
Rank2Kernel rank2_kernel(const QubitRank2Params& params, double tol = 1e-9);

/// lambda |Omega1><Omega1| + (1-lambda) |Omega2><Omega2| for two independent
/// Haar-random maximally entangled states and lambda uniform in (0.1, 0.9);
/// redraws in the measure-zero event of rank < 2. Always a member of
/// C(I/2, I/2).
CoupledState random_rank2_member(Rng& rng);

}  // namespace extremal

#endif
