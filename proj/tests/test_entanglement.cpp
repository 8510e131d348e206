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

#include "doctest.h"
#include "hfphase/dynamics.hpp"
#include "hfphase/entanglement.hpp"
#include "hfphase/errors.hpp"
#include "hfphase/hamiltonian.hpp"
#include "hfphase/thermal.hpp"
#include "support.hpp"

using namespace hfphase;

namespace {

ComplexMatrix projector(const std::vector<Complex>& v) {
  ComplexMatrix p(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) p(r, c) = v[r] * std::conj(v[c]);
  return p;
}

double heisenberg_concurrence(double J, double beta) {
  const double x = std::exp(beta * J);
  return std::max(0.0, (x - 3.0) / (x + 3.0));
}

ComplexMatrix quench_state(double beta, double t) {
  const auto h = build_full({1, 1, 0, 0}, false);
  const auto hprime = build_full({1, 1, 0, 0.5}, true);
  return evolve_under(gibbs_state(h, beta, hprime), hprime, t).rho_t;
}

}  // namespace

TEST_SUITE("entanglement") {

TEST_CASE("fixtures") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto bell = concurrence(projector({s, 0, 0, s}));
  CHECK(bell.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bell.lambdas[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 1; k < 4; ++k) CHECK(bell.lambdas[k] < 1e-7);

  CHECK(concurrence(projector({s, 0, 0, -s})).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence(projector({0, s, -s, 0})).value == doctest::Approx(1.0).epsilon(1e-12));

  const auto product = concurrence(projector({1, 0, 0, 0}));
  CHECK(product.value < 1e-12);

  const auto mixed = concurrence(ComplexMatrix::identity(4) * Complex(0.25));
  CHECK(mixed.value == 0.0);
  for (double l : mixed.lambdas) CHECK(l == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("spin flip") {
  CHECK(max_abs_diff(spin_flip(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) < 1e-15);
  const auto up = projector({1, 0, 0, 0});
  CHECK(max_abs_diff(spin_flip(up), projector({0, 0, 0, 1})) < 1e-15);
}

TEST_CASE("Werner-type thermal Heisenberg states") {
  for (double beta = 0.0; beta <= 10.0; beta += 0.1) {
    const auto state = gibbs_state(build_h0(1.0), beta);
    CHECK(std::abs(concurrence(state.rho).value - heisenberg_concurrence(1.0, beta)) < 1e-10);
  }
  // Antiferromagnetic sign only: J < 0 has a triplet ground state and no entanglement.
  CHECK(concurrence(gibbs_state(build_h0(-1.0), 5.0).rho).value == 0.0);
}

TEST_CASE("critical temperature") {
  double lo = 0.1, hi = 5.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double c = concurrence(gibbs_state(build_h0(1.0), 1.0 / mid).rho).value;
    (c > 0.0 ? lo : hi) = mid;
  }
  CHECK(std::abs(0.5 * (lo + hi) - 1.0 / std::log(3.0)) < 1e-6);
}

TEST_CASE("concurrence does not grow with temperature") {
  const auto h = build_full({1, 0, 0, 0}, false);
  double previous = 1.0;
  for (double T = 0.1; T <= 2.0; T += 0.02) {
    const double c = concurrence(gibbs_state(h, 1.0 / T).rho).value;
    CHECK(c <= previous + 1e-12);
    previous = c;
  }
}

TEST_CASE("evolved quench states against the X-state formula") {
  for (double beta : {0.5, 1.0, 3.0, 8.0}) {
    for (double t : {0.0, 0.7, 5.0, 43.0}) {
      const auto rho = quench_state(beta, t);
      REQUIRE(hftest::is_x_state(rho, 1e-14));
      CHECK(std::abs(concurrence(rho).value - hftest::x_state_concurrence(rho)) < 1e-10);
    }
  }
}

TEST_CASE("time dependence after the quench") {
  // At beta = 1 the populations of the aligned pair dominate the coherence
  // at every t, so the state stays separable.
  for (double t = 40.0; t <= 50.0; t += 0.25) CHECK(concurrence(quench_state(1.0, t)).value < 1e-12);
  // At beta = 3 the concurrence is nonzero and oscillates.
  double lo = 1.0, hi = 0.0;
  for (double t = 40.0; t <= 50.0; t += 0.25) {
    const double c = concurrence(quench_state(3.0, t)).value;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  CHECK(hi > 0.0);
  CHECK(hi - lo > 1e-6);
}

TEST_CASE("spectrum of rho times its spin flip") {
  // sum_i lambda_i^(2k) = tr((rho rho~)^k), without the square-root similarity.
  hftest::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = hftest::random_density(rng);
    const auto result = concurrence(rho);
    const auto r = rho * spin_flip(rho);
    ComplexMatrix power = ComplexMatrix::identity(4);
    for (int k = 1; k <= 4; ++k) {
      power = power * r;
      double sum = 0.0;
      for (double l : result.lambdas) sum += std::pow(l, 2 * k);
      CHECK(std::abs(sum - power.trace().real()) < 1e-12);
      CHECK(std::abs(power.trace().imag()) < 1e-12);
    }
  }
}

TEST_CASE("local-unitary invariance") {
  hftest::Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = hftest::random_density(rng);
    const auto u = hftest::local_unitary(rng);
    const auto rotated = u * rho * u.adjoint();
    CHECK(std::abs(concurrence(rho).value - concurrence(rotated).value) < 1e-10);
    CHECK(concurrence(rho).value <= 1.0);
  }
}

TEST_CASE("invalid density matrices") {
  auto with = [](auto edit) {
    ComplexMatrix m = ComplexMatrix::identity(4) * Complex(0.25);
    edit(m);
    return m;
  };
  CHECK_THROWS_WITH_AS(concurrence(ComplexMatrix::identity(4) * Complex(0.5)),
                       doctest::Contains("InvalidDensityMatrix"), Error);
  CHECK_THROWS_AS(concurrence(with([](ComplexMatrix& m) { m(0, 1) = 0.1; })), Error);
  CHECK_THROWS_AS(concurrence(with([](ComplexMatrix& m) {
                    m(0, 0) = -0.1;
                    m(1, 1) = 0.6;
                  })),
                  Error);
  CHECK_THROWS_AS(concurrence(ComplexMatrix::identity(2) * Complex(0.5)), Error);
}

}  // TEST_SUITE
