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

#ifndef EXTREMAL_MATRIX_HPP
#define EXTREMAL_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major, double precision. All operations are
/// value-semantic; nothing here is optimized beyond what desk-scale orders
/// (a few hundred at most) require.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Row-major nested initializer, e.g. Matrix{{1, 0}, {0, 1}}.
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const { return data_; }

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conj() const;

    Complex trace() const;

    /// Largest entry magnitude (the max-norm used for all entrywise bounds).
    double max_abs() const;
    double frobenius_norm() const;

    bool is_hermitian(double tol) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(Complex scalar);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, Complex scalar) { return lhs *= scalar; }
    friend Matrix operator*(Complex scalar, Matrix rhs) { return rhs *= scalar; }
    friend Matrix operator-(Matrix m) { return m *= Complex(-1.0, 0.0); }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Complex> data_;
};

/// Hermitian matrix with the symmetry held exactly in storage: every write
/// keeps entry(j,i) == conj(entry(i,j)) bit-for-bit and the diagonal real.
class HermitianMatrix {
  public:
    HermitianMatrix() : order_(0) {}
    explicit HermitianMatrix(std::size_t order) : order_(order), data_(order * order) {}

    /// (M + M^dagger)/2 of a square matrix; throws DimensionError otherwise.
    static HermitianMatrix symmetrized(const Matrix& m);

    /// Hermitian matrix with the given real diagonal.
    static HermitianMatrix diagonal(std::span<const double> diag);

    static HermitianMatrix identity(std::size_t n);

    std::size_t order() const { return order_; }

    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

    /// Writes (i,j) and mirrors conj(v) into (j,i); a diagonal write keeps
    /// only the real part.
    void set(std::size_t i, std::size_t j, Complex v);

    Matrix matrix() const;

    double trace() const;
    double max_abs() const;
    double frobenius_norm() const;

    HermitianMatrix& operator+=(const HermitianMatrix& rhs);
    HermitianMatrix& operator-=(const HermitianMatrix& rhs);
    HermitianMatrix& operator*=(double scalar);

    friend HermitianMatrix operator+(HermitianMatrix lhs, const HermitianMatrix& rhs) { return lhs += rhs; }
    friend HermitianMatrix operator-(HermitianMatrix lhs, const HermitianMatrix& rhs) { return lhs -= rhs; }
    friend HermitianMatrix operator*(HermitianMatrix lhs, double scalar) { return lhs *= scalar; }
    friend HermitianMatrix operator*(double scalar, HermitianMatrix rhs) { return rhs *= scalar; }

    friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) = default;

  private:
    std::size_t order_;
    std::vector<Complex> data_;
};

/// Dimensions (d1, d2) of a bipartite space H1 (x) H2 with the lexicographic
/// product-basis convention: basis vector g_ij of H sits at flat index
/// i*d2 + j for i in 0..d1-1, j in 0..d2-1.
struct DimensionPair {
    std::size_t d1;
    std::size_t d2;

    DimensionPair(std::size_t dim1, std::size_t dim2);

    std::size_t n() const { return d1 * d2; }
    std::size_t flat(std::size_t i, std::size_t j) const { return i * d2 + j; }

    friend bool operator==(const DimensionPair& a, const DimensionPair& b) = default;
};

/// Kronecker product in the lexicographic convention of DimensionPair:
/// (A (x) B)(i*rB+k, j*cB+l) = A(i,j) * B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Relative trace over the second factor: (Tr_2 X)(i,i') = sum_j X(g_ij, g_i'j).
/// Preserves the total trace. Throws DimensionError if X is not n x n.
Matrix partial_trace_over_2(const Matrix& x, const DimensionPair& dims);

/// Relative trace over the first factor: (Tr_1 X)(j,j') = sum_i X(g_ij, g_ij').
Matrix partial_trace_over_1(const Matrix& x, const DimensionPair& dims);

/// Orthonormal basis of the real space of hermitian d x d matrices under
/// <X,Y> = Tr XY: the d diagonal units E_ii first, then for each i<j (row
/// major) the pair (E_ij + E_ji)/sqrt(2), i(E_ij - E_ji)/sqrt(2).
std::vector<HermitianMatrix> hermitian_basis(std::size_t d);

/// Real coordinates of a hermitian matrix in the hermitian_basis order:
/// the d diagonal entries, then for each i<j the pair
/// (sqrt(2) Re M_ij, sqrt(2) Im M_ij). An isometry for the Frobenius inner
/// product, so vec_hermitian(basis[m]) is the m-th unit vector.
std::vector<double> vec_hermitian(const HermitianMatrix& m);

/// Inverse of vec_hermitian. Throws DimensionError unless coords.size() == order^2.
HermitianMatrix unvec_hermitian(std::span<const double> coords, std::size_t order);

}  // namespace extremal

#endif
