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


#include <cmath>
#include <limits>

#include "doctest.h"
#include "hfphase/errors.hpp"
#include "hfphase/hamiltonian.hpp"
#include "support.hpp"

using namespace hfphase;

TEST_SUITE("hamiltonian") {

TEST_CASE("exchange term") {
  CHECK(build_h0(0.0) == ComplexMatrix(4));
  // J/4 (sx sx + sy sy + sz sz) expanded by hand.
  const ComplexMatrix expected(4, {0.25, 0, 0, 0,  //
                                   0, -0.25, 0.5, 0,  //
                                   0, 0.5, -0.25, 0,  //
                                   0, 0, 0, 0.25});
  CHECK(max_abs_diff(build_h0(1.0), expected) < 1e-15);
  CHECK(std::abs(build_h0(1.0).trace()) < 1e-15);
  const auto eig = hermitian_eig(build_h0(1.0));
  CHECK(eig.eigenvalues[0] == doctest::Approx(-0.75).epsilon(1e-14));
  for (int k = 1; k < 4; ++k) CHECK(eig.eigenvalues[k] == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("Zeeman term") {
  const auto hi = build_hi(1.0, 0.0);
  const double d1[4] = {0.5, 0.5, -0.5, -0.5};
  CHECK(max_abs_diff(hi, ComplexMatrix::diagonal(std::span<const double>(d1))) == 0.0);
  const double d2[4] = {1.0, 0.0, 0.0, -1.0};
  CHECK(max_abs_diff(build_hi(1.0, 1.0), ComplexMatrix::diagonal(std::span<const double>(d2))) == 0.0);
  const double d3[4] = {0.75, 0.25, -0.25, -0.75};
  CHECK(max_abs_diff(build_hi(1.0, 0.5), ComplexMatrix::diagonal(std::span<const double>(d3))) == 0.0);
}

TEST_CASE("full and quenched Hamiltonians") {
  const auto h = build_full({1.0, 1.0, 0.0, 0.0}, false);
  const auto hq = build_full({1.0, 1.0, 0.0, 0.5}, true);
  CHECK(max_abs_diff(h, build_h0(1.0) + build_hi(1.0, 0.0)) == 0.0);
  CHECK(max_abs_diff(hq, build_h0(1.0) + build_hi(1.5, 0.0)) < 1e-15);
  // epsilon = -1 switches the Zeeman term off.
  CHECK(max_abs_diff(build_full({1.0, 1.0, 0.0, -1.0}, true), build_h0(1.0)) == 0.0);
  CHECK(max_abs_diff(build_full({1.0, 1.0, 0.0, 0.7}, false), h) == 0.0);
  CHECK(h.is_hermitian(0.0));
}

TEST_CASE("non-finite parameters are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_WITH_AS(build_h0(nan), doctest::Contains("NonFiniteParameter"), Error);
  CHECK_THROWS_AS(build_hi(1.0, INFINITY), Error);
  CHECK_THROWS_AS(build_full({1.0, 1.0, 0.0, nan}, true), Error);
}

TEST_CASE("analytic spectrum") {
  auto near = [](const std::array<double, 4>& a, std::array<double, 4> b) {
    for (int k = 0; k < 4; ++k)
      if (std::abs(a[k] - b[k]) > 1e-15) return false;
    return true;
  };
  CHECK(near(analytic_spectrum(1.0, 0.0), {-0.75, 0.25, 0.25, 0.25}));
  const double r = 2.0 * std::sqrt(2.0);
  CHECK(near(analytic_spectrum(1.0, 1.0), {(-1.0 - r) / 4.0, -0.25, (-1.0 + r) / 4.0, 0.75}));
  CHECK(near(analytic_spectrum(0.0, 1.0), {-0.5, -0.5, 0.5, 0.5}));
  CHECK(near(analytic_spectrum(0.0, 0.0), {0.0, 0.0, 0.0, 0.0}));
}

TEST_CASE("half-strength closed form differs from the eigenvalues") {
  const auto quoted = half_block_spectrum(1.0, 1.0);
  CHECK(quoted[0] == doctest::Approx(-0.6035533905932737).epsilon(1e-14));
  CHECK(quoted[1] == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(quoted[2] == doctest::Approx(0.10355339059327376).epsilon(1e-14));
  CHECK(quoted[3] == doctest::Approx(0.75).epsilon(1e-14));
  const auto quoted0 = half_block_spectrum(0.0, 1.0);
  CHECK(quoted0 == std::array<double, 4>{-0.5, -0.25, 0.25, 0.5});

  const auto eig = hermitian_eig(build_full({1.0, 1.0, 0.0, 0.0}, false));
  CHECK(std::abs(eig.eigenvalues[0] - quoted[0]) > 0.3);
  // The forms agree only when the mixing block vanishes.
  const auto agree = half_block_spectrum(0.0, 0.0);
  CHECK(agree == analytic_spectrum(0.0, 0.0));
}

TEST_CASE("eigenvalues match the analytic spectrum on random couplings") {
  hftest::Rng rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const double J = rng.uniform(-5, 5);
    const double C = rng.uniform(-5, 5);
    const auto eig = hermitian_eig(build_full({J, C, 0.0, 0.0}, false));
    const auto exact = analytic_spectrum(J, C);
    for (int k = 0; k < 4; ++k) REQUIRE(std::abs(eig.eigenvalues[k] - exact[k]) < 1e-12);
  }
  // Independent of the eigensolver: every analytic eigenvalue is a root of
  // det(H - E).
  for (int trial = 0; trial < 100; ++trial) {
    const double J = rng.uniform(-5, 5);
    const double C = rng.uniform(-5, 5);
    const auto h = build_full({J, C, 0.0, 0.0}, false);
    for (double e : analytic_spectrum(J, C)) {
      const double scale = std::pow(std::max(1.0, h.frobenius_norm()), 4);
      CHECK(std::abs(hftest::determinant(h - ComplexMatrix::identity(4) * Complex(e))) < 1e-12 * scale);
    }
  }
}

TEST_CASE("structure on random couplings") {
  hftest::Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const double J = rng.uniform(-5, 5), C = rng.uniform(-5, 5), D = rng.uniform(-5, 5);
    const double e = rng.uniform(-2, 2);
    CHECK(std::abs(build_full({J, C, D, e}, true).trace()) < 1e-14);
    CHECK(max_abs_diff(build_h0(2.0 * J), build_h0(J) * Complex(2.0)) < 1e-14);
    CHECK(max_abs_diff(build_hi(2.0 * C, 2.0 * D), build_hi(C, D) * Complex(2.0)) < 1e-14);
    // Equal couplings conserve the total z spin.
    CHECK(max_abs_diff(commutator(build_h0(J), build_hi(C, C)), ComplexMatrix(4)) < 1e-14);
    CHECK(commutator(build_h0(J), build_hi(C, D)).frobenius_norm() > 1e-3 * std::abs(J * (C - D)));
  }
  CHECK(commutator(build_h0(0.0), build_hi(1.0, -2.0)).frobenius_norm() == 0.0);
}

TEST_CASE("hydrogen field conversion") {
  const auto zero = field_to_couplings(0.0);
  CHECK(zero.C == 0.0);
  CHECK(zero.D == 0.0);
  const auto c = field_to_couplings(1.0);
  CHECK(c.C > 0.0);
  CHECK(c.D < 0.0);
  // g m_p / (2 * 2.793 m_e) with g = 2 and I = 1/2.
  CHECK(std::abs(c.C / c.D) == doctest::Approx(1836.15267343 / 2.793).epsilon(1e-12));
  const auto scaled = field_to_couplings(0.5, 4.0);
  CHECK(scaled.C == doctest::Approx(2.0 * c.C));
}

}  // TEST_SUITE
