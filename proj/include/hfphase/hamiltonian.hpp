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

#include <array>

#include "hfphase/matrix.hpp"

// Hyperfine two-spin Hamiltonian H = J I.S + C S_z + D I_z for an electron
// spin S and a nuclear spin I, both spin-1/2. Product basis, electron as the
// left Kronecker factor:
//   0: |e+ n+>   1: |e+ n->   2: |e- n+>   3: |e- n->
// Natural units (hbar = k_B = 1); J, C, D share one energy unit.

namespace hfphase {

struct SpinParams {
  double J = 1.0;
  double C = 1.0;
  double D = 0.0;
  double epsilon = 0.0;  // quench: H_I -> (1 + epsilon) H_I
};

struct HydrogenConstants {
  static constexpr double g_factor = 2.0;
  static constexpr double mu_ratio = 2.793;  // nuclear moment in units of mu_N
  static constexpr double nuclear_spin = 0.5;
  static constexpr double cd_ratio_scale = 2000.0;  // rough m_p / m_e
  static constexpr double proton_electron_mass_ratio = 1836.15267343;  // CODATA 2018
  static constexpr double hyperfine_frequency_mhz = 1420.0;
};

ComplexMatrix build_h0(double J);
ComplexMatrix build_hi(double C, double D);
/// H0 + H_I, or H0 + (1 + epsilon) H_I when `quenched`.
ComplexMatrix build_full(const SpinParams& params, bool quenched);

/// Exact spectrum of build_full(J, C, D = 0), ascending:
/// (J +- 2C)/4 and (-J +- 2 sqrt(C^2 + J^2))/4.
std::array<double, 4> analytic_spectrum(double J, double C);

/// The closed form {(J +- 2C)/4, (-J +- sqrt(C^2 + J^2))/4}, ascending. This is
/// the spectrum of the singlet/triplet-zero mixing block taken at half
/// strength; it does not coincide with the eigenvalues of build_full and is
/// kept only so the discrepancy can be measured.
std::array<double, 4> half_block_spectrum(double J, double C);

struct ZeemanCouplings {
  double C = 0.0;
  double D = 0.0;
};

/// C = g mu_B B and D = -(mu / I) B for hydrogen. `mu_b_field` is mu_B * B in
/// the caller's energy unit, further multiplied by `energy_scale`.
ZeemanCouplings field_to_couplings(double mu_b_field, double energy_scale = 1.0);

}  // namespace hfphase
