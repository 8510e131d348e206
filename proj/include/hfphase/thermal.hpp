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
#include <vector>

#include "hfphase/matrix.hpp"

namespace hfphase {

/// Gibbs state rho = exp(-beta H) / Z together with its eigenbasis.
/// populations[k] pairs with column k of `basis` and populations are sorted
/// descending. Z itself may overflow a double at large beta, so only log Z is
/// stored.
struct ThermalState {
  double beta = 0.0;
  ComplexMatrix rho;
  std::vector<double> populations;
  ComplexMatrix basis;
  double log_partition_function = 0.0;

  double partition_function() const { return std::exp(log_partition_function); }
};

/// Throws BetaOutOfRange for beta outside [0, tol.max_beta] and
/// NonHermitianInput for a non-Hermitian H. The eigenbasis inside degenerate
/// population subspaces is left in Jacobi order.
ThermalState gibbs_state(const ComplexMatrix& hamiltonian, double beta,
                         const Tolerances& tol = default_tolerances());

/// As above, but inside every population cluster (neighbours closer than
/// tol.population_degeneracy) the basis is replaced by the eigenbasis of
/// `reference` restricted to that cluster.
ThermalState gibbs_state(const ComplexMatrix& hamiltonian, double beta, const ComplexMatrix& reference,
                         const Tolerances& tol = default_tolerances());

double purity(const ComplexMatrix& rho);

}  // namespace hfphase
