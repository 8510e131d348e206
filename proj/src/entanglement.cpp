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

#include "hfphase/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "hfphase/errors.hpp"

namespace hfphase {

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorCode::DimensionMismatch, "spin_flip needs a 4x4 matrix");
  static const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  return yy * rho.conjugate() * yy;
}

ConcurrenceResult concurrence(const ComplexMatrix& rho, const Tolerances& tol) {
  if (rho.dim() != 4) {
    throw Error(ErrorCode::InvalidDensityMatrix, "dimension " + std::to_string(rho.dim()) + ", expected 4");
  }
  if (!rho.is_hermitian(tol.density_hermitian)) {
    throw Error(ErrorCode::InvalidDensityMatrix, "not Hermitian");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > tol.density_trace) {
    throw Error(ErrorCode::InvalidDensityMatrix, "trace " + describe_value(tr.real()));
  }
  const auto eig = hermitian_eig(rho, tol);
  if (eig.eigenvalues.front() < -tol.density_negative) {
    throw Error(ErrorCode::InvalidDensityMatrix,
                "negative eigenvalue " + std::to_string(eig.eigenvalues.front()));
  }

  const auto root = spectral_function(eig, [](double x) { return Complex(std::sqrt(std::max(x, 0.0))); });
  ComplexMatrix r = root * spin_flip(rho) * root;
  r = (r + r.adjoint()) * Complex(0.5);
  const auto spectrum = hermitian_eig(r, tol).eigenvalues;

  ConcurrenceResult out;
  for (std::size_t i = 0; i < 4; ++i) {
    double v = spectrum[i];
    if (v < 0.0) {
      if (v < -tol.spinflip_slack) {
        throw Error(ErrorCode::InvalidDensityMatrix,
                    "spin-flip eigenvalue " + describe_value(v) + " below slack");
      }
      v = 0.0;
    }
    out.lambdas[i] = std::sqrt(v);
  }
  std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<>());
  const auto& l = out.lambdas;
  out.value = std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
  return out;
}

}  // namespace hfphase
