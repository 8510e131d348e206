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

namespace hfphase {

struct ConcurrenceResult {
  double value = 0.0;
  std::array<double, 4> lambdas{};  // descending, >= 0
};

/// (sy x sy) rho* (sy x sy), conjugating in the product basis.
ComplexMatrix spin_flip(const ComplexMatrix& rho);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_i^2 are the
/// eigenvalues of rho * spin_flip(rho). They are obtained from the Hermitian
/// similar matrix sqrt(rho) spin_flip(rho) sqrt(rho). Throws
/// InvalidDensityMatrix unless rho is a 4x4 Hermitian, unit-trace,
/// positive-semidefinite matrix within the density_* tolerances.
ConcurrenceResult concurrence(const ComplexMatrix& rho, const Tolerances& tol = default_tolerances());

}  // namespace hfphase
