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

#include "hfphase/tolerances.hpp"

#include "hfphase/errors.hpp"

#include <cstdio>

namespace hfphase {

std::string describe_value(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

const Tolerances& default_tolerances() {
  static const Tolerances defaults{};
  return defaults;
}

bool set_tolerance(Tolerances& tol, std::string_view name, double value) {
  if (name == "hermitian") tol.hermitian = value;
  else if (name == "jacobi_offdiag") tol.jacobi_offdiag = value;
  else if (name == "jacobi_max_sweeps") tol.jacobi_max_sweeps = static_cast<int>(value);
  else if (name == "max_eig_dim") tol.max_eig_dim = static_cast<std::size_t>(value);
  else if (name == "unitary") tol.unitary = value;
  else if (name == "max_beta") tol.max_beta = value;
  else if (name == "population_degeneracy") tol.population_degeneracy = value;
  else if (name == "phase_magnitude") tol.phase_magnitude = value;
  else if (name == "min_oracle_steps") tol.min_oracle_steps = static_cast<int>(value);
  else if (name == "density_hermitian") tol.density_hermitian = value;
  else if (name == "density_trace") tol.density_trace = value;
  else if (name == "density_negative") tol.density_negative = value;
  else if (name == "spinflip_slack") tol.spinflip_slack = value;
  else return false;
  return true;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NonFiniteFunctionValue: return "NonFiniteFunctionValue";
    case ErrorCode::NonFiniteParameter: return "NonFiniteParameter";
    case ErrorCode::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorCode::NonUnitaryPropagator: return "NonUnitaryPropagator";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::StepCountTooSmall: return "StepCountTooSmall";
    case ErrorCode::InvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorCode::ConfigParseError: return "ConfigParseError";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::NonMonotonicTimeGrid: return "NonMonotonicTimeGrid";
  }
  return "UnknownError";
}

bool is_config_error(ErrorCode code) {
  return code == ErrorCode::ConfigParseError || code == ErrorCode::GridTooLarge ||
         code == ErrorCode::NonMonotonicTimeGrid;
}

}  // namespace hfphase
