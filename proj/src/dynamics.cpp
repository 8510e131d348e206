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

#include "hfphase/dynamics.hpp"

#include <cmath>
#include <string>

#include "hfphase/errors.hpp"

namespace hfphase {

ComplexMatrix propagator(const SpectralDecomposition& hamiltonian, double t) {
  if (!std::isfinite(t)) throw Error(ErrorCode::NonFiniteParameter, "t = " + describe_value(t));
  return spectral_function(hamiltonian, [t](double e) { return std::polar(1.0, -e * t); });
}

ComplexMatrix propagator(const ComplexMatrix& hamiltonian, double t, const Tolerances& tol) {
  return propagator(hermitian_eig(hamiltonian, tol), t);
}

ComplexMatrix evolve(const ComplexMatrix& rho, const ComplexMatrix& U, const Tolerances& tol) {
  if (rho.dim() != U.dim()) throw Error(ErrorCode::DimensionMismatch, "evolve");
  if (!U.is_unitary(tol.unitary)) {
    throw Error(ErrorCode::NonUnitaryPropagator, "max |U^H U - 1| exceeds " + describe_value(tol.unitary));
  }
  ComplexMatrix out = U * rho * U.adjoint();
  // Restore exact Hermiticity lost to rounding.
  return (out + out.adjoint()) * Complex(0.5);
}

EvolutionResult evolve(const ThermalState& state, const ComplexMatrix& U, double t, const Tolerances& tol) {
  return EvolutionResult{t, evolve(state.rho, U, tol), U};
}

EvolutionResult evolve_under(const ThermalState& state, const ComplexMatrix& hamiltonian, double t,
                             const Tolerances& tol) {
  return evolve(state, propagator(hamiltonian, t, tol), t, tol);
}

}  // namespace hfphase
