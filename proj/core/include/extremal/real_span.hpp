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

#ifndef EXTREMAL_REAL_SPAN_HPP
#define EXTREMAL_REAL_SPAN_HPP

#include <cstddef>
#include <vector>

namespace extremal {

/// Rank and orthonormal nullspace of a real matrix given by rows. rank is the
/// number of singular values above rel_tol * sigma_max; null_basis spans
/// {x : Ax = 0}, equivalently the orthogonal complement of the row span, and
/// its columns are orthonormal and deterministically ordered.
struct SpanAnalysis {
    std::size_t rank = 0;
    std::vector<std::vector<double>> null_basis;
};

/// One-sided (Hestenes) Jacobi analysis of the rows x cols matrix whose rows
/// are given. Every row must have length cols. rel_tol is relative to the
/// largest singular value; an all-zero matrix has rank 0 and the full
/// standard basis as nullspace.
SpanAnalysis analyze_row_span(const std::vector<std::vector<double>>& rows,
                              std::size_t cols,
                              double rel_tol);

}  // namespace extremal

#endif
