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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hfphase/config.hpp"
#include "hfphase/hamiltonian.hpp"

namespace hfphase {

struct SweepRow {
  double J = 0.0;
  double C = 0.0;
  double D = 0.0;
  double epsilon = 0.0;
  double beta = 0.0;
  double t = 0.0;
  std::optional<double> gamma_g;            // empty when ill-defined or not requested
  std::optional<double> gamma_g_unwrapped;
  std::optional<double> magnitude;
  std::optional<double> concurrence;
  std::optional<double> oracle_delta;       // closed - integrated, wrapped to (-pi, pi]
  std::optional<std::array<double, 4>> populations;
};

/// Evaluates every requested output over one t grid at fixed (J, C, D,
/// epsilon, beta). The Gibbs state is prepared under H with its degenerate
/// subspaces aligned to H'; evolution runs under H'. The unwrapped column is
/// filled along `times`.
std::vector<SweepRow> evaluate_series(const SpinParams& params, double beta, std::span<const double> times,
                                      const SweepConfig& config);

SweepRow evaluate_point(const SpinParams& params, double beta, double t, const SweepConfig& config);

/// Runs the full grid in row-major order (J outermost, t innermost), calling
/// `sink` once per row in that order. Series are computed on
/// `config.threads` workers; output order does not depend on the thread
/// count. Numeric errors are rethrown naming the offending grid point.
void run_sweep(const SweepConfig& config, const std::function<void(const SweepRow&)>& sink);

std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Adds multiples of 2 pi so that consecutive defined values differ by less
/// than pi. Empty entries are passed through and skipped when comparing; the
/// first defined value is unchanged. Throws NonMonotonicTimeGrid unless
/// `times` is strictly increasing, DimensionMismatch on a length mismatch.
std::vector<std::optional<double>> unwrap_phase(std::span<const double> times,
                                                std::span<const std::optional<double>> phases);

}  // namespace hfphase
