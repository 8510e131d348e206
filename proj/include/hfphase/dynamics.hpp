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

#include "hfphase/matrix.hpp"
#include "hfphase/thermal.hpp"

namespace hfphase {

struct EvolutionResult {
  double t = 0.0;
  ComplexMatrix rho_t;
  ComplexMatrix propagator;
};

/// exp(-i H t), evaluated spectrally.
ComplexMatrix propagator(const ComplexMatrix& hamiltonian, double t,
                         const Tolerances& tol = default_tolerances());
ComplexMatrix propagator(const SpectralDecomposition& hamiltonian, double t);

/// U rho U^H. Throws NonUnitaryPropagator if U fails is_unitary(tol.unitary).
ComplexMatrix evolve(const ComplexMatrix& rho, const ComplexMatrix& U,
                     const Tolerances& tol = default_tolerances());

/// Evolves the Gibbs state with propagator U; `t` is recorded in the result.
EvolutionResult evolve(const ThermalState& state, const ComplexMatrix& U, double t,
                       const Tolerances& tol = default_tolerances());

/// Shorthand for evolve(state, propagator(hamiltonian, t), t).
EvolutionResult evolve_under(const ThermalState& state, const ComplexMatrix& hamiltonian, double t,
                             const Tolerances& tol = default_tolerances());

}  // namespace hfphase
