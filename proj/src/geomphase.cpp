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

#include "hfphase/geomphase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hfphase/dynamics.hpp"
#include "hfphase/errors.hpp"

namespace hfphase {

namespace {

void check_inputs(const ThermalState& state, const ComplexMatrix& hprime, const Tolerances& tol) {
  if (state.basis.dim() != hprime.dim() || state.populations.size() != hprime.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state dimension " + std::to_string(state.basis.dim()) +
                                                  " vs Hamiltonian " + std::to_string(hprime.dim()));
  }
  if (!hprime.is_hermitian(tol.hermitian)) throw Error(ErrorCode::NonHermitianInput, "H'");
}

double one_norm(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t c = 0; c < m.dim(); ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r) sum += std::abs(m(r, c));
    best = std::max(best, sum);
  }
  return best;
}

void apply(const ComplexMatrix& m, std::span<const Complex> in, std::span<Complex> out) {
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r) {
    Complex sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) sum += m(r, c) * in[c];
    out[r] = sum;
  }
}

}  // namespace

double wrap_phase(double angle) {
  constexpr double pi = std::numbers::pi;
  double wrapped = std::remainder(angle, 2.0 * pi);
  if (wrapped <= -pi) wrapped += 2.0 * pi;
  return wrapped;
}

PhaseResult phase_of(Complex sum, const Tolerances& tol) {
  PhaseResult out;
  out.sum = sum;
  out.magnitude = std::abs(sum);
  out.well_defined = out.magnitude >= tol.phase_magnitude;
  out.gamma = out.well_defined ? wrap_phase(std::arg(sum)) : std::numeric_limits<double>::quiet_NaN();
  return out;
}

PhaseResult geometric_phase_from_propagator(const ThermalState& state, const ComplexMatrix& U,
                                            const ComplexMatrix& dynamical_h, double t,
                                            const Tolerances& tol) {
  check_inputs(state, dynamical_h, tol);
  if (U.dim() != dynamical_h.dim()) throw Error(ErrorCode::DimensionMismatch, "propagator");
  Complex sum = 0.0;
  for (std::size_t k = 0; k < state.populations.size(); ++k) {
    const auto ket = state.basis.column(k);
    const Complex amplitude = expectation(U, ket);
    const double energy = expectation(dynamical_h, ket).real();
    sum += state.populations[k] * amplitude * std::polar(1.0, energy * t);
  }
  return phase_of(sum, tol);
}

PhaseResult geometric_phase_closed(const ThermalState& state, const ComplexMatrix& hprime, double t,
                                   const ComplexMatrix& dynamical_h, const Tolerances& tol) {
  check_inputs(state, hprime, tol);
  return geometric_phase_from_propagator(state, propagator(hprime, t, tol), dynamical_h, t, tol);
}

PhaseResult geometric_phase_closed(const ThermalState& state, const ComplexMatrix& hprime, double t,
                                   const Tolerances& tol) {
  return geometric_phase_closed(state, hprime, t, hprime, tol);
}

ComplexMatrix taylor_propagator(const ComplexMatrix& hamiltonian, double dt) {
  const std::size_t n = hamiltonian.dim();
  const ComplexMatrix generator = hamiltonian * Complex(0.0, -dt);
  const double norm = one_norm(generator);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix scaled = generator * Complex(std::ldexp(1.0, -squarings));

  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int order = 1; order <= 40; ++order) {
    term = term * scaled;
    term *= Complex(1.0 / order);
    result += term;
    if (term.frobenius_norm() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

PhaseResult geometric_phase_integrated(const ThermalState& state, const ComplexMatrix& hprime, double t,
                                       int steps, const Tolerances& tol) {
  check_inputs(state, hprime, tol);
  if (steps < tol.min_oracle_steps) {
    throw Error(ErrorCode::StepCountTooSmall,
                std::to_string(steps) + " < " + std::to_string(tol.min_oracle_steps));
  }
  if (!std::isfinite(t)) throw Error(ErrorCode::NonFiniteParameter, "t");

  const std::size_t fine_steps = 2 * static_cast<std::size_t>(steps);
  const ComplexMatrix step = taylor_propagator(hprime, t / static_cast<double>(fine_steps));

  Complex sum = 0.0;
  for (std::size_t k = 0; k < state.populations.size(); ++k) {
    const double weight = state.populations[k];
    if (weight == 0.0) continue;
    const auto start = state.basis.column(k);

    // Accumulated overlap arguments on the fine grid and on the coarse grid
    // made of every second fine point.
    double fine_phase = 0.0;
    double coarse_phase = 0.0;
    std::vector<Complex> previous = start;
    std::vector<Complex> coarse_anchor = start;
    std::vector<Complex> current(start.size());
    for (std::size_t j = 1; j <= fine_steps; ++j) {
      apply(step, previous, current);
      fine_phase += std::arg(inner(previous, current));
      if (j % 2 == 0) {
        coarse_phase += std::arg(inner(coarse_anchor, current));
        coarse_anchor = current;
      }
      previous.swap(current);
    }
    const double connection = (4.0 * fine_phase - coarse_phase) / 3.0;
    const Complex amplitude = inner(start, previous);
    sum += weight * amplitude * std::polar(1.0, -connection);
  }
  return phase_of(sum, tol);
}

}  // namespace hfphase
