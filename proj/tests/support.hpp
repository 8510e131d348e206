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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hfphase/matrix.hpp"

// Generators and brute-force reference computations shared by the suites.
// Nothing here calls the eigensolver.

namespace hftest {

using hfphase::Complex;
using hfphase::ComplexMatrix;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>()(engine_); }
  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
};

inline ComplexMatrix random_matrix(Rng& rng, std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.complex_normal();
  return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  const ComplexMatrix g = random_matrix(rng, n);
  return (g + g.adjoint()) * Complex(0.5);
}

// Gram-Schmidt on the columns of a Gaussian matrix.
inline ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix g = random_matrix(rng, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Complex> v = g.column(c);
    for (std::size_t p = 0; p < c; ++p) {
      const auto q = g.column(p);
      const Complex proj = hfphase::inner(q, v);
      for (std::size_t r = 0; r < n; ++r) v[r] -= proj * q[r];
    }
    double norm = 0.0;
    for (const auto& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    g.set_column(c, v);
  }
  return g;
}

// G G^H / tr, full rank with probability one.
inline ComplexMatrix random_density(Rng& rng, std::size_t n = 4) {
  const ComplexMatrix g = random_matrix(rng, n);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return rho;
}

inline ComplexMatrix local_unitary(Rng& rng) { return hfphase::kron(random_unitary(rng, 2), random_unitary(rng, 2)); }

// Laplace expansion; fine for n <= 5.
inline Complex determinant(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m(0, 0);
  Complex det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    ComplexMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    det += (c % 2 == 0 ? 1.0 : -1.0) * m(0, c) * determinant(minor);
  }
  return det;
}

// Truncated power series, no scaling. Accurate for ||M|| up to a few units.
inline ComplexMatrix series_exp(const ComplexMatrix& m) {
  ComplexMatrix result = ComplexMatrix::identity(m.dim());
  ComplexMatrix term = ComplexMatrix::identity(m.dim());
  for (int k = 1; k < 80; ++k) {
    term = term * m;
    term *= Complex(1.0 / k);
    result += term;
  }
  return result;
}

// Concurrence of an X state (zero except the diagonal and the 1-4 and 2-3
// anti-diagonal pairs).
inline double x_state_concurrence(const ComplexMatrix& rho) {
  const double a = std::abs(rho(1, 2)) - std::sqrt(rho(0, 0).real() * rho(3, 3).real());
  const double b = std::abs(rho(0, 3)) - std::sqrt(rho(1, 1).real() * rho(2, 2).real());
  return std::max(0.0, 2.0 * std::max(a, b));
}

inline bool is_x_state(const ComplexMatrix& rho, double tol) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool allowed = r == c || r + c == 3;
      if (!allowed && std::abs(rho(r, c)) > tol) return false;
    }
  return true;
}

}  // namespace hftest
