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

#include "hfphase/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hfphase/errors.hpp"

namespace hfphase {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::NonFiniteParameter, std::string(name) + " = " + describe_value(value));
  }
}

std::array<double, 4> sorted(std::array<double, 4> values) {
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

ComplexMatrix build_h0(double J) {
  require_finite(J, "J");
  // J/4 (sx sx + sy sy + sz sz)
  ComplexMatrix h = kron(pauli::x(), pauli::x()) + kron(pauli::y(), pauli::y()) +
                    kron(pauli::z(), pauli::z());
  return h * Complex(0.25 * J);
}

ComplexMatrix build_hi(double C, double D) {
  require_finite(C, "C");
  require_finite(D, "D");
  const std::array<double, 4> diag{0.5 * C + 0.5 * D, 0.5 * C - 0.5 * D, -0.5 * C + 0.5 * D,
                                   -0.5 * C - 0.5 * D};
  return ComplexMatrix::diagonal(std::span<const double>(diag));
}

ComplexMatrix build_full(const SpinParams& params, bool quenched) {
  require_finite(params.epsilon, "epsilon");
  const double scale = quenched ? 1.0 + params.epsilon : 1.0;
  return build_h0(params.J) + build_hi(params.C, params.D) * Complex(scale);
}

std::array<double, 4> analytic_spectrum(double J, double C) {
  const double root = std::hypot(C, J);
  return sorted({(J + 2.0 * C) / 4.0, (J - 2.0 * C) / 4.0, (-J + 2.0 * root) / 4.0,
                 (-J - 2.0 * root) / 4.0});
}

std::array<double, 4> half_block_spectrum(double J, double C) {
  const double root = std::hypot(C, J);
  return sorted({(J + 2.0 * C) / 4.0, (J - 2.0 * C) / 4.0, (-J + root) / 4.0, (-J - root) / 4.0});
}

ZeemanCouplings field_to_couplings(double mu_b_field, double energy_scale) {
  require_finite(mu_b_field, "B");
  require_finite(energy_scale, "energy_scale");
  using K = HydrogenConstants;
  const double nuclear_magneton = 1.0 / K::proton_electron_mass_ratio;  // mu_N / mu_B
  const double field = mu_b_field * energy_scale;
  return {K::g_factor * field, -(K::mu_ratio * nuclear_magneton / K::nuclear_spin) * field};
}

}  // namespace hfphase
