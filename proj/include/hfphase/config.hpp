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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hfphase/tolerances.hpp"

// Sweep configuration. The text format is one `key = value` per line with `#`
// comments. Grid values are either comma-separated lists (`0.1, 0.5, 1`) or
// inclusive ranges `start:stop:count`. Recognized keys:
//
//   scenario, J, C, D, epsilon, beta, T, t, outputs, oracle, steps,
//   dynamical_h, threads, max_rows, tol.<name>
//
// `T` is a temperature grid; it is stored as beta = 1/T (T = 0 is rejected).

namespace hfphase {

enum class DynamicalHamiltonian {
  Post,  // <k|H'|k>, the Hamiltonian generating the evolution
  Pre,   // <k|H|k>, the Hamiltonian of the initial Gibbs state
};

struct OutputSelection {
  bool gamma_g = true;
  bool gamma_g_unwrapped = true;
  bool magnitude = true;
  bool concurrence = true;
  bool populations = false;  // appends p1..p4 columns after oracle_delta
};

struct SweepConfig {
  std::string scenario = "custom";
  std::vector<double> J{1.0};
  std::vector<double> C{1.0};
  std::vector<double> D{0.0};
  std::vector<double> epsilon{0.0};
  std::vector<double> beta{1.0};
  std::vector<double> t{0.0};
  OutputSelection outputs;
  bool oracle_check = false;
  int steps = 10000;
  DynamicalHamiltonian dynamical_h = DynamicalHamiltonian::Post;
  unsigned threads = 1;
  std::size_t max_rows = 10'000'000;
  Tolerances tolerances;

  /// Product of grid sizes, saturating at SIZE_MAX.
  std::size_t row_count() const;
  /// Number of rows sharing one t grid.
  std::size_t series_count() const;

  /// Throws ConfigParseError (empty grids, non-finite values, bad steps or
  /// threads), GridTooLarge, or NonMonotonicTimeGrid (unwrapping requested
  /// over a t grid that is not strictly increasing).
  void validate() const;
};

/// Parses a grid expression.
std::vector<double> parse_grid(std::string_view text);

/// Applies a single `key = value` assignment. Throws ConfigParseError.
void apply_setting(SweepConfig& config, std::string_view key, std::string_view value);

/// Applies every assignment in `text` on top of `base`.
SweepConfig parse_config(std::string_view text, SweepConfig base = {});

SweepConfig load_config_file(const std::string& path, SweepConfig base = {});

}  // namespace hfphase
