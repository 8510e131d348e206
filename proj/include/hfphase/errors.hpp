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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfphase {

enum class ErrorCode {
  NonHermitianInput,
  ConvergenceFailure,
  NonFiniteFunctionValue,
  NonFiniteParameter,
  BetaOutOfRange,
  NonUnitaryPropagator,
  DimensionMismatch,
  StepCountTooSmall,
  InvalidDensityMatrix,
  ConfigParseError,
  GridTooLarge,
  NonMonotonicTimeGrid,
};

std::string_view to_string(ErrorCode code);

// Configuration problems (exit code 1 in the CLI) versus numeric failures
// (exit code 2).
bool is_config_error(ErrorCode code);

// Short %g rendering of a double for error messages.
std::string describe_value(double value);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace hfphase
