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

#ifndef EXTREMAL_STATE_HPP
#define EXTREMAL_STATE_HPP

#include "extremal/matrix.hpp"

namespace extremal {

/// A (claimed) density matrix on H1 (x) H2 together with its dimension pair.
/// Carries raw entries; whether it really is hermitian, PSD, trace one and
/// has the right marginals is decided by validate_membership, not here.
struct CoupledState {
    DimensionPair dims;
    Matrix rho;

    CoupledState(DimensionPair d, Matrix r) : dims(d), rho(std::move(r)) {
        if (rho.rows() != dims.n() || rho.cols() != dims.n()) {
            throw DimensionError("CoupledState: matrix is not n x n for n = d1*d2");
        }
    }
};

}  // namespace extremal

#endif
