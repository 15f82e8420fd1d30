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

#include "extremal/matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace extremal {

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("Matrix initializer rows have unequal lengths");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

Matrix Matrix::conj() const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = std::conj(data_[k]);
    }
    return out;
}

Complex Matrix::trace() const {
    if (!is_square()) {
        throw DimensionError("trace of a non-square matrix");
    }
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const Complex& v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : data_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

bool Matrix::is_hermitian(double tol) const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionError("matrix addition shape mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionError("matrix subtraction shape mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= rhs.data_[k];
    }
    return *this;
}

Matrix& Matrix::operator*=(Complex scalar) {
    for (Complex& v : data_) {
        v *= scalar;
    }
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) {
        throw DimensionError("matrix product shape mismatch");
    }
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

HermitianMatrix HermitianMatrix::symmetrized(const Matrix& m) {
    if (!m.is_square()) {
        throw DimensionError("hermitian symmetrization needs a square matrix");
    }
    HermitianMatrix h(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            h.set(i, j, 0.5 * (m(i, j) + std::conj(m(j, i))));
        }
    }
    return h;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> diag) {
    HermitianMatrix h(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        h.set(i, i, diag[i]);
    }
    return h;
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
    HermitianMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.set(i, i, 1.0);
    }
    return h;
}

void HermitianMatrix::set(std::size_t i, std::size_t j, Complex v) {
    if (i == j) {
        data_[i * order_ + i] = Complex(v.real(), 0.0);
    } else {
        data_[i * order_ + j] = v;
        data_[j * order_ + i] = std::conj(v);
    }
}

Matrix HermitianMatrix::matrix() const {
    Matrix m(order_, order_);
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = 0; j < order_; ++j) {
            m(i, j) = (*this)(i, j);
        }
    }
    return m;
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < order_; ++i) {
        t += (*this)(i, i).real();
    }
    return t;
}

double HermitianMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : data_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& rhs) {
    if (order_ != rhs.order_) {
        throw DimensionError("hermitian addition order mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& rhs) {
    if (order_ != rhs.order_) {
        throw DimensionError("hermitian subtraction order mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= rhs.data_[k];
    }
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double scalar) {
    for (Complex& v : data_) {
        v *= scalar;
    }
    return *this;
}

DimensionPair::DimensionPair(std::size_t dim1, std::size_t dim2) : d1(dim1), d2(dim2) {
    if (d1 < 1 || d2 < 1) {
        throw std::invalid_argument("DimensionPair dimensions must be >= 1");
    }
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

Matrix partial_trace_over_2(const Matrix& x, const DimensionPair& dims) {
    const std::size_t n = dims.n();
    if (x.rows() != n || x.cols() != n) {
        throw DimensionError("partial trace: operator is not n x n for n = d1*d2");
    }
    Matrix out(dims.d1, dims.d1);
    for (std::size_t i = 0; i < dims.d1; ++i) {
        for (std::size_t ip = 0; ip < dims.d1; ++ip) {
            Complex s = 0.0;
            for (std::size_t j = 0; j < dims.d2; ++j) {
                s += x(dims.flat(i, j), dims.flat(ip, j));
            }
            out(i, ip) = s;
        }
    }
    return out;
}

Matrix partial_trace_over_1(const Matrix& x, const DimensionPair& dims) {
    const std::size_t n = dims.n();
    if (x.rows() != n || x.cols() != n) {
        throw DimensionError("partial trace: operator is not n x n for n = d1*d2");
    }
    Matrix out(dims.d2, dims.d2);
    for (std::size_t j = 0; j < dims.d2; ++j) {
        for (std::size_t jp = 0; jp < dims.d2; ++jp) {
            Complex s = 0.0;
            for (std::size_t i = 0; i < dims.d1; ++i) {
                s += x(dims.flat(i, j), dims.flat(i, jp));
            }
            out(j, jp) = s;
        }
    }
    return out;
}

std::vector<HermitianMatrix> hermitian_basis(std::size_t d) {
    if (d < 1) {
        throw std::invalid_argument("hermitian_basis needs d >= 1");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<HermitianMatrix> basis;
    basis.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        HermitianMatrix e(d);
        e.set(i, i, 1.0);
        basis.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            HermitianMatrix sym(d);
            sym.set(i, j, inv_sqrt2);
            basis.push_back(std::move(sym));
            HermitianMatrix asym(d);
            asym.set(i, j, Complex(0.0, inv_sqrt2));
            basis.push_back(std::move(asym));
        }
    }
    return basis;
}

std::vector<double> vec_hermitian(const HermitianMatrix& m) {
    const std::size_t d = m.order();
    const double sqrt2 = std::sqrt(2.0);
    std::vector<double> coords;
    coords.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        coords.push_back(m(i, i).real());
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            coords.push_back(sqrt2 * m(i, j).real());
            coords.push_back(sqrt2 * m(i, j).imag());
        }
    }
    return coords;
}

HermitianMatrix unvec_hermitian(std::span<const double> coords, std::size_t order) {
    if (coords.size() != order * order) {
        throw DimensionError("unvec_hermitian: coordinate count is not order^2");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    HermitianMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
        m.set(i, i, coords[i]);
    }
    std::size_t pos = order;
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = i + 1; j < order; ++j) {
            m.set(i, j, Complex(coords[pos] * inv_sqrt2, coords[pos + 1] * inv_sqrt2));
            pos += 2;
        }
    }
    return m;
}

}  // namespace extremal
