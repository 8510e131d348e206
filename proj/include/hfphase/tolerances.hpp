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

#include <cstddef>
#include <string_view>

namespace hfphase {

// Every numerical threshold used by the library lives here. Functions take a
// `const Tolerances&` defaulting to `default_tolerances()`; sweep configs may
// override individual entries with `tol.<name> = value` lines.
struct Tolerances {
  // hermitian_eig / spectral_function precondition, max |M - M^H|.
  double hermitian = 1e-10;
  // Jacobi stops when the off-diagonal Frobenius norm drops below
  // jacobi_offdiag * max(1, ||M||_F).
  double jacobi_offdiag = 1e-14;
  int jacobi_max_sweeps = 64;
  std::size_t max_eig_dim = 16;

  // evolve() rejects propagators with max |U^H U - 1| above this.
  double unitary = 1e-8;

  double max_beta = 1e4;
  // Populations closer than this (absolute) are treated as one degenerate
  // subspace and re-diagonalized against the reference Hamiltonian.
  double population_degeneracy = 1e-5;

  // PhaseResult::well_defined threshold on |sum|.
  double phase_magnitude = 1e-9;
  int min_oracle_steps = 100;

  // concurrence() input validation.
  double density_hermitian = 1e-8;
  double density_trace = 1e-8;
  double density_negative = 1e-8;
  // Negative spin-flip eigenvalues above -slack are clamped to zero.
  double spinflip_slack = 1e-10;
};

const Tolerances& default_tolerances();

// Sets a field by name. Returns false when the name is unknown.
bool set_tolerance(Tolerances& tol, std::string_view name, double value);

}  // namespace hfphase
