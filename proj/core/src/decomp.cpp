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

#include "extremal/decomp.hpp"

#include <algorithm>
#include <cmath>

#include "extremal/eigh.hpp"

namespace extremal {

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t idx : map_) {
        if (idx >= map_.size() || seen[idx]) {
            throw std::invalid_argument("Permutation map is not a bijection on 0..n-1");
        }
        seen[idx] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) {
        map[i] = i;
    }
    return Permutation(std::move(map));
}

Matrix Permutation::conjugate(const Matrix& m) const {
    const std::size_t n = map_.size();
    if (m.rows() != n || m.cols() != n) {
        throw DimensionError("Permutation conjugation shape mismatch");
    }
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = m(map_[i], map_[j]);
        }
    }
    return out;
}

Matrix Permutation::conjugate_inverse(const Matrix& m) const {
    const std::size_t n = map_.size();
    if (m.rows() != n || m.cols() != n) {
        throw DimensionError("Permutation conjugation shape mismatch");
    }
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(map_[i], map_[j]) = m(i, j);
        }
    }
    return out;
}

std::vector<std::size_t> select_pivots(const HermitianMatrix& rho, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("select_pivots requires tol > 0");
    }
    if (!is_psd(rho, tol)) {
        throw ConeViolationError("select_pivots: input is not PSD within tolerance");
    }
    const std::size_t n = rho.order();

    std::vector<double> diag(n);
    double max_orig = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = rho(i, i).real();
        max_orig = std::max(max_orig, diag[i]);
    }
    const double stop = tol * max_orig;

    // Running Cholesky columns in the original index space; diag holds the
    // Schur-complement diagonal of the not-yet-pivoted indices.
    std::vector<std::vector<Complex>> cols;
    std::vector<bool> used(n, false);
    std::vector<std::size_t> pivots;

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        double best = stop;
        for (std::size_t i = 0; i < n; ++i) {
            if (!used[i] && diag[i] > best) {
                best = diag[i];
                p = i;
            }
        }
        if (p == n) {
            break;
        }
        const double root = std::sqrt(diag[p]);
        std::vector<Complex> col(n, Complex{});
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) {
                continue;
            }
            Complex s = rho(i, p);
            for (std::size_t t = 0; t < cols.size(); ++t) {
                s -= cols[t][i] * std::conj(cols[t][p]);
            }
            col[i] = s / root;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!used[i] && i != p) {
                diag[i] -= std::norm(col[i]);
            }
        }
        used[p] = true;
        pivots.push_back(p);
        cols.push_back(std::move(col));
    }
    return pivots;
}

BlockDecomposition block_decompose_with_pivots(const HermitianMatrix& rho,
                                               const std::vector<std::size_t>& pivots,
                                               double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("block_decompose requires tol > 0");
    }
    const std::size_t n = rho.order();
    const std::size_t k = pivots.size();

    std::vector<std::size_t> map(pivots);
    std::vector<bool> in_pivots(n, false);
    for (std::size_t p : pivots) {
        if (p >= n || in_pivots[p]) {
            throw std::invalid_argument("pivot indices must be distinct and in range");
        }
        in_pivots[p] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_pivots[i]) {
            map.push_back(i);
        }
    }
    Permutation perm(std::move(map));

    HermitianMatrix k_block(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            k_block.set(i, j, rho(perm[i], perm[j]));
        }
    }

    Matrix a(k, n - k);
    if (k > 0) {
        const auto eig = eigh(k_block);
        const double lambda_min = eig.eigenvalues.front();
        const double lambda_max = eig.eigenvalues.back();
        if (!(lambda_min > tol * lambda_max) || lambda_max <= 0.0) {
            throw DecompositionError(
                "block_decompose: leading block is numerically singular after pivoting");
        }
        if (n > k) {
            // A = K^-1 B with B the permuted top-right block, solved through
            // the eigendecomposition of K.
            Matrix b(k, n - k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < n - k; ++j) {
                    b(i, j) = rho(perm[i], perm[k + j]);
                }
            }
            const Matrix vdag_b = eig.eigenvectors.adjoint() * b;
            Matrix scaled = vdag_b;
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < n - k; ++j) {
                    scaled(i, j) /= eig.eigenvalues[i];
                }
            }
            a = eig.eigenvectors * scaled;
        }
    }
    return BlockDecomposition{std::move(perm), k, std::move(k_block), std::move(a), n};
}

BlockDecomposition block_decompose(const HermitianMatrix& rho, double tol) {
    return block_decompose_with_pivots(rho, select_pivots(rho, tol), tol);
}

namespace {

// sigma^-1 [[M, MA], [A^dagger M, A^dagger M A]] sigma for hermitian M of
// order k; shared by reconstruct (M = K) and lift_through (M = L).
HermitianMatrix assemble(const BlockDecomposition& dec, const HermitianMatrix& m) {
    const std::size_t k = dec.k;
    const std::size_t n = dec.n;
    const Matrix mm = m.matrix();
    const Matrix ma = mm * dec.A;                 // k x (n-k)
    const Matrix adag_ma = dec.A.adjoint() * ma;  // (n-k) x (n-k)

    Matrix blocks(n, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            blocks(i, j) = mm(i, j);
        }
        for (std::size_t j = 0; j < n - k; ++j) {
            blocks(i, k + j) = ma(i, j);
            blocks(k + j, i) = std::conj(ma(i, j));
        }
    }
    for (std::size_t i = 0; i < n - k; ++i) {
        for (std::size_t j = 0; j < n - k; ++j) {
            blocks(k + i, k + j) = adag_ma(i, j);
        }
    }
    return HermitianMatrix::symmetrized(dec.perm.conjugate_inverse(blocks));
}

}  // namespace

HermitianMatrix reconstruct(const BlockDecomposition& dec) {
    return assemble(dec, dec.K);
}

HermitianMatrix lift_through(const BlockDecomposition& dec, const HermitianMatrix& l) {
    if (l.order() != dec.k) {
        throw DimensionError("lift_through: perturbation order != decomposition rank");
    }
    return assemble(dec, l);
}

}  // namespace extremal
