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

// Mixed-state geometric phase of a thermal state evolving unitarily under a
// time-independent Hamiltonian H':
//
//   gamma = arg sum_k lambda_k <k|U(t)|k> exp(i <k|H'|k> t),  U = exp(-i H' t)
//
// where lambda_k, |k> are the populations and eigenvectors of the initial
// state. The integrated variant evaluates the general parallel-transport
// expression along the path U(t')|k> without using <k|H'|k>.

namespace hfphase {

struct PhaseResult {
  double gamma = 0.0;      // principal value in (-pi, pi]; NaN when !well_defined
  double magnitude = 0.0;  // |sum|
  bool well_defined = false;
  Complex sum{};
};

/// Maps any angle into (-pi, pi].
double wrap_phase(double angle);

PhaseResult phase_of(Complex sum, const Tolerances& tol = default_tolerances());

PhaseResult geometric_phase_closed(const ThermalState& state, const ComplexMatrix& hprime, double t,
                                   const Tolerances& tol = default_tolerances());

/// Same as above with the dynamical factor exp(i <k|dynamical_h|k> t) taken
/// from a different Hamiltonian than the one generating U.
PhaseResult geometric_phase_closed(const ThermalState& state, const ComplexMatrix& hprime, double t,
                                   const ComplexMatrix& dynamical_h,
                                   const Tolerances& tol = default_tolerances());

/// Closed form with a precomputed U = exp(-i H' t).
PhaseResult geometric_phase_from_propagator(const ThermalState& state, const ComplexMatrix& U,
                                            const ComplexMatrix& dynamical_h, double t,
                                            const Tolerances& tol = default_tolerances());

/// Discrete parallel transport: the connection phase of each path
/// |k(t_j)> = U(t_j)|k> is the accumulated argument of the overlaps
/// <k(t_j)|k(t_j+1)>, evaluated on uniform grids of `steps` and 2*`steps`
/// intervals and Richardson-extrapolated (the per-interval error is odd in
/// the step size, so the leading term is quadratic). Throws
/// StepCountTooSmall when steps < tol.min_oracle_steps.
PhaseResult geometric_phase_integrated(const ThermalState& state, const ComplexMatrix& hprime, double t,
                                       int steps, const Tolerances& tol = default_tolerances());

/// exp(-i H dt) by scaled Taylor series and repeated squaring.
ComplexMatrix taylor_propagator(const ComplexMatrix& hamiltonian, double dt);

}  // namespace hfphase
