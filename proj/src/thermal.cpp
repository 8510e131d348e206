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

#include "hfphase/thermal.hpp"

#include <string>

#include "hfphase/errors.hpp"

namespace hfphase {

namespace {

ThermalState prepare(const ComplexMatrix& hamiltonian, double beta, const Tolerances& tol) {
  if (!(beta >= 0.0 && beta <= tol.max_beta)) {
    throw Error(ErrorCode::BetaOutOfRange,
                "beta = " + describe_value(beta) + " outside [0, " + describe_value(tol.max_beta) + "]");
  }
  const auto eig = hermitian_eig(hamiltonian, tol);
  const std::size_t n = eig.eigenvalues.size();

  // Energies ascend, so populations descend. Exponents are shifted by the
  // ground energy so that nothing overflows.
  const double e_min = eig.eigenvalues.front();
  std::vector<double> weights(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    weights[k] = std::exp(-beta * (eig.eigenvalues[k] - e_min));
    sum += weights[k];
  }

  ThermalState state;
  state.beta = beta;
  state.populations.resize(n);
  for (std::size_t k = 0; k < n; ++k) state.populations[k] = weights[k] / sum;
  state.log_partition_function = -beta * e_min + std::log(sum);
  state.basis = eig.eigenvectors;

  if (beta == 0.0) {
    state.rho = ComplexMatrix::identity(n) * Complex(1.0 / static_cast<double>(n));
  } else {
    state.rho = spectral_function(SpectralDecomposition{state.populations, state.basis},
                                  [](double p) { return Complex(p); });
  }
  return state;
}

// Re-diagonalizes `reference` inside each cluster of near-equal populations.
void align_degenerate(ThermalState& state, const ComplexMatrix& reference, const Tolerances& tol) {
  const std::size_t n = state.populations.size();
  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin + 1;
    while (end < n && state.populations[end - 1] - state.populations[end] <= tol.population_degeneracy) {
      ++end;
    }
    const std::size_t m = end - begin;
    if (m > 1) {
      std::vector<std::vector<Complex>> cols;
      for (std::size_t k = begin; k < end; ++k) cols.push_back(state.basis.column(k));
      ComplexMatrix restricted(m);
      for (std::size_t i = 0; i < m; ++i) {
        const auto hi = reference * std::span<const Complex>(cols[i]);
        for (std::size_t j = 0; j < m; ++j) restricted(j, i) = inner(cols[j], hi);
      }
      const auto local = hermitian_eig((restricted + restricted.adjoint()) * Complex(0.5), tol);
      for (std::size_t a = 0; a < m; ++a) {
        std::vector<Complex> v(n, Complex{});
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t r = 0; r < n; ++r) v[r] += cols[i][r] * local.eigenvectors(i, a);
        }
        state.basis.set_column(begin + a, v);
      }
    }
    begin = end;
  }
  fix_gauge(state.basis);
}

}  // namespace

ThermalState gibbs_state(const ComplexMatrix& hamiltonian, double beta, const Tolerances& tol) {
  return prepare(hamiltonian, beta, tol);
}

ThermalState gibbs_state(const ComplexMatrix& hamiltonian, double beta, const ComplexMatrix& reference,
                         const Tolerances& tol) {
  if (reference.dim() != hamiltonian.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "reference Hamiltonian");
  }
  if (!reference.is_hermitian(tol.hermitian)) {
    throw Error(ErrorCode::NonHermitianInput, "reference Hamiltonian");
  }
  auto state = prepare(hamiltonian, beta, tol);
  align_degenerate(state, reference, tol);
  return state;
}

double purity(const ComplexMatrix& rho) { return (rho * rho).trace().real(); }

}  // namespace hfphase
