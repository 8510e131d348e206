// Copyright 2026 The hfphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "hfphase/tolerances.hpp"

namespace hfphase {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Small sizes only (4x4 throughout,
/// up to 16x16 for the eigensolver).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  /// Row-major entries; the list length must be dim*dim.
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const noexcept { return data_; }

  std::vector<Complex> column(std::size_t col) const;
  void set_column(std::size_t col, std::span<const Complex> values);

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;

  bool is_finite() const;
  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// <u|v>, conjugating u.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
/// <v|M|v>
Complex expectation(const ComplexMatrix& m, std::span<const Complex> v);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Eigenvalues ascending; column k of `eigenvectors` pairs with eigenvalue k.
/// In each column the entry of largest modulus is real and non-negative
/// (lowest row index wins ties).
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Throws NonHermitianInput, ConvergenceFailure, or
/// DimensionMismatch (dim 0 or above tol.max_eig_dim).
SpectralDecomposition hermitian_eig(const ComplexMatrix& m,
                                    const Tolerances& tol = default_tolerances());

/// Makes the largest-modulus entry of every column real and non-negative.
void fix_gauge(ComplexMatrix& vectors);

using ScalarFunction = std::function<Complex(double)>;

/// V diag(f(lambda)) V^H. Throws NonFiniteFunctionValue if f returns a
/// non-finite value at any eigenvalue.
ComplexMatrix spectral_function(const SpectralDecomposition& decomposition, const ScalarFunction& f);
ComplexMatrix spectral_function(const ComplexMatrix& m, const ScalarFunction& f,
                                const Tolerances& tol = default_tolerances());

}  // namespace hfphase
