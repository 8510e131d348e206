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


#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "hfphase/errors.hpp"
#include "hfphase/hamiltonian.hpp"
#include "hfphase/matrix.hpp"
#include "support.hpp"

using namespace hfphase;

namespace {

double max_gauge_violation(const ComplexMatrix& v) {
  double worst = 0.0;
  for (std::size_t c = 0; c < v.dim(); ++c) {
    std::size_t best = 0;
    for (std::size_t r = 1; r < v.dim(); ++r)
      if (std::abs(v(r, c)) > std::abs(v(best, c)) * (1.0 + 1e-12)) best = r;
    worst = std::max(worst, std::abs(v(best, c).imag()));
    if (v(best, c).real() < 0.0) worst = std::max(worst, -v(best, c).real());
  }
  return worst;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("basic algebra") {
  const ComplexMatrix a(2, {1.0, Complex(0, 2), 3.0, 4.0});
  CHECK(a.adjoint()(0, 1) == 3.0);
  CHECK(a.adjoint()(1, 0) == Complex(0, -2));
  CHECK(a.trace() == Complex(5.0));
  CHECK(kron(ComplexMatrix::identity(2), a).dim() == 4);
  CHECK(kron(pauli::z(), pauli::z())(3, 3) == 1.0);
  CHECK(max_abs_diff(commutator(pauli::x(), pauli::y()), pauli::z() * Complex(0, 2)) == 0.0);
  CHECK_THROWS_AS(ComplexMatrix(2, {1.0, 2.0, 3.0}), Error);
  CHECK_THROWS_AS(ComplexMatrix(2) + ComplexMatrix(3), Error);
}

TEST_CASE("identity decomposes to itself") {
  const auto eig = hermitian_eig(ComplexMatrix::identity(4));
  for (double v : eig.eigenvalues) CHECK(v == 1.0);
  CHECK(eig.eigenvectors == ComplexMatrix::identity(4));
}

TEST_CASE("sigma_y eigenpairs") {
  const auto eig = hermitian_eig(pauli::y());
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));
  // Gauge: first entry real and positive; (1, -i)/sqrt2 and (1, i)/sqrt2.
  const double s = 1.0 / std::numbers::sqrt2;
  const ComplexMatrix expected(2, {s, s, Complex(0, -s), Complex(0, s)});
  CHECK(max_abs_diff(eig.eigenvectors, expected) < 1e-14);
}

TEST_CASE("hyperfine Hamiltonian at J=C=1") {
  const auto eig = hermitian_eig(build_full({1.0, 1.0, 0.0, 0.0}, false));
  const double r = 2.0 * std::sqrt(2.0);
  const double expected[4] = {(-1.0 - r) / 4.0, -0.25, (-1.0 + r) / 4.0, 0.75};
  for (int k = 0; k < 4; ++k) CHECK(eig.eigenvalues[k] == doctest::Approx(expected[k]).epsilon(1e-14));
  // Each eigenvalue is a root of the characteristic polynomial (Laplace expansion).
  const ComplexMatrix h = build_full({1.0, 1.0, 0.0, 0.0}, false);
  for (double e : eig.eigenvalues) {
    CHECK(std::abs(hftest::determinant(h - ComplexMatrix::identity(4) * Complex(e))) < 1e-13);
  }
}

TEST_CASE("random Hermitian decompositions") {
  hftest::Rng rng(11);
  for (std::size_t n : {1u, 2u, 3u, 4u, 8u, 16u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = hftest::random_hermitian(rng, n);
      const auto eig = hermitian_eig(m);
      CHECK(max_abs_diff(eig.reconstruct(), m) < 1e-12 * std::max(1.0, m.frobenius_norm()));
      CHECK(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors, ComplexMatrix::identity(n)) < 1e-12);
      CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
      CHECK(max_gauge_violation(eig.eigenvectors) < 1e-14);
    }
  }
}

TEST_CASE("eigenvalues are basis independent") {
  hftest::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = hftest::random_hermitian(rng, 4);
    const auto w = hftest::random_unitary(rng, 4);
    const auto a = hermitian_eig(m).eigenvalues;
    const auto b = hermitian_eig(w * m * w.adjoint()).eigenvalues;
    for (int k = 0; k < 4; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-10);
  }
}

TEST_CASE("degenerate and diagonal inputs") {
  const double d[4] = {2.0, -1.0, 2.0, -1.0};
  const auto eig = hermitian_eig(ComplexMatrix::diagonal(std::span<const double>(d)));
  CHECK(eig.eigenvalues == std::vector<double>{-1.0, -1.0, 2.0, 2.0});
  // Stable ordering inside ties: basis vectors keep their original order.
  CHECK(eig.eigenvectors(1, 0) == 1.0);
  CHECK(eig.eigenvectors(3, 1) == 1.0);
  CHECK(eig.eigenvectors(0, 2) == 1.0);
  CHECK(eig.eigenvectors(2, 3) == 1.0);

  const auto zero = hermitian_eig(ComplexMatrix(3));
  for (double v : zero.eigenvalues) CHECK(v == 0.0);
}

TEST_CASE("decomposition is bit-for-bit deterministic") {
  hftest::Rng rng(13);
  const auto m = hftest::random_hermitian(rng, 4);
  const auto a = hermitian_eig(m);
  const auto b = hermitian_eig(m);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("fix_gauge") {
  ComplexMatrix v(2, {Complex(0, 0.6), 0.0, Complex(0, -0.8), 1.0});
  fix_gauge(v);
  CHECK(std::abs(v(1, 0) - 0.8) < 1e-15);
  CHECK(std::abs(v(0, 0) - Complex(-0.6, 0)) < 1e-15);
  // Ties go to the lowest row.
  ComplexMatrix tie(2, {Complex(0, -1), 0.0, -1.0, 1.0});
  fix_gauge(tie);
  CHECK(std::abs(tie(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(tie(1, 0) - Complex(0, -1)) < 1e-15);
}

TEST_CASE("spectral functions") {
  hftest::Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = hftest::random_hermitian(rng, 4) * Complex(0.5);
    CHECK(max_abs_diff(spectral_function(m, [](double x) { return Complex(x); }), m) < 1e-12);
    // exp(-i m) against an independent power series.
    const auto u = spectral_function(m, [](double x) { return std::polar(1.0, -x); });
    CHECK(max_abs_diff(u, hftest::series_exp(m * Complex(0, -1))) < 1e-11);
    const auto u_inv = spectral_function(m, [](double x) { return std::polar(1.0, x); });
    CHECK(max_abs_diff(u * u_inv, ComplexMatrix::identity(4)) < 1e-12);
  }
  // tr exp(-H) at J=C=1 from the exact spectrum.
  const double r = 2.0 * std::sqrt(2.0);
  const double expected = std::exp((1.0 + r) / 4.0) + std::exp(0.25) + std::exp((1.0 - r) / 4.0) + std::exp(-0.75);
  const auto h = build_full({1.0, 1.0, 0.0, 0.0}, false);
  CHECK(spectral_function(h, [](double x) { return Complex(std::exp(-x)); }).trace().real() ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("error paths") {
  ComplexMatrix bad(2, {1.0, 1.0, 0.0, 1.0});
  CHECK_THROWS_WITH_AS(hermitian_eig(bad), doctest::Contains("NonHermitianInput"), Error);

  Tolerances tight = default_tolerances();
  tight.jacobi_max_sweeps = 0;
  CHECK_THROWS_WITH_AS(hermitian_eig(pauli::x(), tight), doctest::Contains("ConvergenceFailure"), Error);

  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(17)), Error);
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix()), Error);

  const double d[2] = {0.0, 1.0};
  CHECK_THROWS_WITH_AS(spectral_function(ComplexMatrix::diagonal(std::span<const double>(d)),
                                         [](double x) { return Complex(1.0 / x); }),
                       doctest::Contains("NonFiniteFunctionValue"), Error);
  ComplexMatrix nan(1);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(hermitian_eig(nan), Error);
}

}  // TEST_SUITE
