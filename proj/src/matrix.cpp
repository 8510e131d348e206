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

#include "hfphase/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hfphase/errors.hpp"

namespace hfphase {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

double offdiag_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (r != c) sum += std::norm(m(r, c));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries)
    : dim_(dim), data_(entries) {
  if (data_.size() != dim * dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(dim * dim) + " entries, got " +
                    std::to_string(data_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t col) const {
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, col);
  return out;
}

void ComplexMatrix::set_column(std::size_t col, std::span<const Complex> values) {
  if (values.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "column length " + std::to_string(values.size()));
  }
  for (std::size_t r = 0; r < dim_; ++r) (*this)(r, col) = values[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

bool ComplexMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_finite()) return false;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_finite()) return false;
  return max_abs_diff(adjoint() * (*this), identity(dim_)) <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()));
  }
  std::vector<Complex> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Complex sum = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) sum += m(r, c) * v[c];
    out[r] = sum;
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "inner product");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += std::conj(u[i]) * v[i];
  return sum;
}

Complex expectation(const ComplexMatrix& m, std::span<const Complex> v) {
  const auto mv = m * v;
  return inner(v, mv);
}

namespace pauli {
ComplexMatrix x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix y() { return ComplexMatrix(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
ComplexMatrix z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }
}  // namespace pauli

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return spectral_function(*this, [](double x) { return Complex(x); });
}

void fix_gauge(ComplexMatrix& vectors) {
  const std::size_t n = vectors.dim();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = 0;
    double best = -1.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double a = std::abs(vectors(r, c));
      if (a > best) {
        best = a;
        pivot = r;
      }
    }
    if (best <= 0.0) continue;
    const Complex phase = std::conj(vectors(pivot, c)) / best;
    for (std::size_t r = 0; r < n; ++r) vectors(r, c) *= phase;
    vectors(pivot, c) = best;
  }
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m, const Tolerances& tol) {
  const std::size_t n = m.dim();
  if (n == 0 || n > tol.max_eig_dim) {
    throw Error(ErrorCode::DimensionMismatch, "hermitian_eig supports 1.." +
                                                  std::to_string(tol.max_eig_dim) + ", got " +
                                                  std::to_string(n));
  }
  if (!m.is_hermitian(tol.hermitian)) {
    throw Error(ErrorCode::NonHermitianInput, "max |M - M^H| exceeds " + std::to_string(tol.hermitian));
  }

  // Work on the exactly Hermitian part.
  ComplexMatrix a = (m + m.adjoint()) * Complex(0.5);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = tol.jacobi_offdiag * std::max(1.0, m.frobenius_norm());

  bool converged = false;
  for (int sweep = 0; sweep <= tol.jacobi_max_sweeps; ++sweep) {
    if (offdiag_norm(a) < threshold) {
      converged = true;
      break;
    }
    if (sweep == tol.jacobi_max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mod = std::abs(apq);
        if (mod == 0.0) continue;
        const Complex phase = apq / mod;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Real rotation on diag(1, conj(phase)) * A * diag(1, phase), which
        // has a real (p, q) entry equal to |apq|.
        const double theta = (aqq - app) / (2.0 * mod);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // G = diag(1, conj(phase)) * R with R = [[c, s], [-s, c]].
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (std::size_t r = 0; r < n; ++r) {
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = arp * gpp + arq * gqp;
          a(r, q) = arp * gpq + arq * gqq;
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = vrp * gpp + vrq * gqp;
          v(r, q) = vrp * gpq + vrq * gqq;
        }
        for (std::size_t col = 0; col < n; ++col) {
          const Complex apc = a(p, col);
          const Complex aqc = a(q, col);
          a(p, col) = std::conj(gpp) * apc + std::conj(gqp) * aqc;
          a(q, col) = std::conj(gpq) * apc + std::conj(gqq) * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::ConvergenceFailure,
                "off-diagonal norm " + std::to_string(offdiag_norm(a)) + " after " +
                    std::to_string(tol.jacobi_max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  fix_gauge(out.eigenvectors);
  return out;
}

ComplexMatrix spectral_function(const SpectralDecomposition& decomposition, const ScalarFunction& f) {
  const auto& vecs = decomposition.eigenvectors;
  const std::size_t n = vecs.dim();
  std::vector<Complex> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = f(decomposition.eigenvalues[k]);
    if (!std::isfinite(values[k].real()) || !std::isfinite(values[k].imag())) {
      throw Error(ErrorCode::NonFiniteFunctionValue,
                  "f(" + std::to_string(decomposition.eigenvalues[k]) + ") is not finite");
    }
  }
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += vecs(r, k) * values[k] * std::conj(vecs(c, k));
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix spectral_function(const ComplexMatrix& m, const ScalarFunction& f, const Tolerances& tol) {
  return spectral_function(hermitian_eig(m, tol), f);
}

}  // namespace hfphase
