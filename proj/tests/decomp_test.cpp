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

#include <cmath>

#include <doctest.h>

#include "extremal/decomp.hpp"
#include "extremal/eigh.hpp"
#include "support.hpp"

using namespace extremal;
using extremal::testing::random_density;

namespace {

HermitianMatrix two_corner_diag() {
    // diag(1/2, 0, 0, 1/2)
    HermitianMatrix h(4);
    h.set(0, 0, 0.5);
    h.set(3, 3, 0.5);
    return h;
}

HermitianMatrix bell_projector() {
    HermitianMatrix rho(4);
    rho.set(0, 0, 0.5);
    rho.set(3, 3, 0.5);
    rho.set(0, 3, 0.5);
    return rho;
}

}  // namespace

TEST_CASE("select_pivots: diagonal inspection cases") {
    const auto p1 = select_pivots(two_corner_diag(), 1e-9);
    CHECK(p1 == std::vector<std::size_t>{0, 3});

    HermitianMatrix half_eye(4);
    for (std::size_t i = 0; i < 4; ++i) {
        half_eye.set(i, i, 0.5);
    }
    CHECK(select_pivots(half_eye, 1e-9) == std::vector<std::size_t>{0, 1, 2, 3});

    CHECK(select_pivots(bell_projector(), 1e-9) == std::vector<std::size_t>{0});

    HermitianMatrix indefinite(2);
    indefinite.set(0, 0, 1.0);
    indefinite.set(1, 1, -1.0);
    CHECK_THROWS_AS(select_pivots(indefinite, 1e-9), ConeViolationError);
}

TEST_CASE("block_decompose: frozen small cases") {
    SUBCASE("diag(1/2, 0, 0, 1/2)") {
        const BlockDecomposition dec = block_decompose(two_corner_diag(), 1e-9);
        CHECK(dec.k == 2);
        CHECK(dec.perm[0] == 0);
        CHECK(dec.perm[1] == 3);
        CHECK(dec.perm[2] == 1);
        CHECK(dec.perm[3] == 2);
        CHECK((dec.K.matrix() - 0.5 * Matrix::identity(2)).max_abs() < 1e-15);
        CHECK(dec.A.rows() == 2);
        CHECK(dec.A.cols() == 2);
        CHECK(dec.A.max_abs() < 1e-15);
    }
    SUBCASE("Bell projector: k=1, K=[1/2], A=[0,0,1]") {
        const BlockDecomposition dec = block_decompose(bell_projector(), 1e-9);
        CHECK(dec.k == 1);
        CHECK(dec.K(0, 0) == Complex(0.5, 0.0));
        REQUIRE(dec.A.rows() == 1);
        REQUIRE(dec.A.cols() == 3);
        CHECK(std::abs(dec.A(0, 0)) < 1e-15);
        CHECK(std::abs(dec.A(0, 1)) < 1e-15);
        CHECK(std::abs(dec.A(0, 2) - Complex(1.0, 0.0)) < 1e-15);
    }
    SUBCASE("strictly PD input: k = n, A empty") {
        Rng rng(2u);
        const HermitianMatrix rho = extremal::testing::random_pd_density(5, rng);
        const BlockDecomposition dec = block_decompose(rho, 1e-9);
        CHECK(dec.k == 5);
        CHECK(dec.A.cols() == 0);
    }
    SUBCASE("order 1") {
        HermitianMatrix one(1);
        one.set(0, 0, 1.0);
        const BlockDecomposition dec = block_decompose(one, 1e-9);
        CHECK(dec.k == 1);
        CHECK(dec.A.cols() == 0);
        CHECK(reconstruct(dec)(0, 0) == Complex(1.0, 0.0));
    }
}

TEST_CASE("reconstruct: frozen outer-product cases") {
    SUBCASE("K=[1], empty A") {
        HermitianMatrix k(1);
        k.set(0, 0, 1.0);
        const BlockDecomposition dec{Permutation::identity(1), 1, k, Matrix(1, 0), 1};
        const HermitianMatrix r = reconstruct(dec);
        CHECK(r.order() == 1);
        CHECK(r(0, 0) == Complex(1.0, 0.0));
    }
    SUBCASE("K=[1/2], A=[0,0,1] reproduces the Bell projector") {
        HermitianMatrix k(1);
        k.set(0, 0, 0.5);
        Matrix a(1, 3);
        a(0, 2) = 1.0;
        const BlockDecomposition dec{Permutation::identity(4), 1, k, a, 4};
        const HermitianMatrix r = reconstruct(dec);
        CHECK((r.matrix() - bell_projector().matrix()).max_abs() < 1e-15);
    }
}

TEST_CASE("block_decompose: round trip, rank, strict positivity, column space") {
    Rng rng(31u);
    for (std::size_t order : {4u, 6u, 9u}) {
        for (std::size_t rank = 1; rank <= order; rank += 2) {
            for (int draw = 0; draw < 4; ++draw) {
                const HermitianMatrix rho = random_density(order, rank, rng);
                const BlockDecomposition dec = block_decompose(rho, 1e-9);
                CHECK(dec.k == rank);
                CHECK(dec.k == rank_eps(rho, 1e-9));

                const HermitianMatrix rebuilt = reconstruct(dec);
                const double scale = std::max(1.0, rho.max_abs());
                CHECK((rebuilt.matrix() - rho.matrix()).max_abs() <= 1e-8 * scale);
                CHECK(rank_eps(rebuilt, 1e-9) == dec.k);

                const auto keig = eigh(dec.K);
                CHECK(keig.eigenvalues.front() > 1e-9 * keig.eigenvalues.back());

                // sigma^-1 [I; A^dagger] spans range(rho): compare orthogonal
                // projectors built from each side.
                const std::size_t n = order;
                const std::size_t k = dec.k;
                Matrix s(n, k);
                for (std::size_t col = 0; col < k; ++col) {
                    s(dec.perm[col], col) = 1.0;
                }
                const Matrix a_dag = dec.A.adjoint();
                for (std::size_t row = 0; row < n - k; ++row) {
                    for (std::size_t col = 0; col < k; ++col) {
                        s(dec.perm[k + row], col) = a_dag(row, col);
                    }
                }
                const auto gram = eigh(HermitianMatrix::symmetrized(s.adjoint() * s));
                Matrix ginv = gram.eigenvectors;
                for (std::size_t j = 0; j < k; ++j) {
                    for (std::size_t i = 0; i < k; ++i) {
                        ginv(i, j) /= gram.eigenvalues[j];
                    }
                }
                const Matrix p_columns = s * (ginv * gram.eigenvectors.adjoint()) * s.adjoint();

                const auto reig = eigh(rho);
                Matrix p_range(n, n);
                for (std::size_t m = 0; m < n; ++m) {
                    if (reig.eigenvalues[m] <= 1e-9 * reig.eigenvalues.back()) {
                        continue;
                    }
                    for (std::size_t i = 0; i < n; ++i) {
                        for (std::size_t j = 0; j < n; ++j) {
                            p_range(i, j) += reig.eigenvectors(i, m) *
                                             std::conj(reig.eigenvectors(j, m));
                        }
                    }
                }
                CHECK((p_columns - p_range).max_abs() < 1e-8);
            }
        }
    }
}

TEST_CASE("block_decompose_with_pivots: alternate pivot sets reconstruct too") {
    Rng rng(41u);
    const HermitianMatrix rho = random_density(6, 4, rng);
    const auto greedy = select_pivots(rho, 1e-9);
    REQUIRE(greedy.size() == 4);

    std::vector<std::size_t> reversed(greedy.rbegin(), greedy.rend());
    const BlockDecomposition dec = block_decompose_with_pivots(rho, reversed, 1e-9);
    CHECK((reconstruct(dec).matrix() - rho.matrix()).max_abs() < 1e-8);
}

TEST_CASE("block_decompose_with_pivots: singular leading block is an error") {
    CHECK_THROWS_AS(block_decompose_with_pivots(bell_projector(), {1}, 1e-9),
                    DecompositionError);
}

TEST_CASE("Permutation: conjugation rules are exact index relabelings") {
    const Permutation sigma({2, 0, 1});
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            m(i, j) = Complex(static_cast<double>(i), static_cast<double>(j));
        }
    }
    const Matrix conj = sigma.conjugate(m);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(conj(i, j) == m(sigma[i], sigma[j]));
        }
    }
    CHECK(sigma.conjugate_inverse(conj) == m);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}
