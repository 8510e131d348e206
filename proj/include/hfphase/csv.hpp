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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hfphase/sweep.hpp"

namespace hfphase {

inline constexpr std::string_view kCsvHeader =
    "J,C,D,epsilon,beta,t,gamma_g,gamma_g_unwrapped,magnitude,concurrence,oracle_delta";
inline constexpr std::string_view kPopulationColumns = ",p1,p2,p3,p4";

/// 17 significant digits, general notation.
std::string format_number(double value);

/// Writes rows as LF-terminated CSV. The header is written by the
/// constructor; population columns are appended only when requested.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, bool with_populations = false);

  void write(const SweepRow& row);

 private:
  std::ostream& out_;
  bool with_populations_;
};

/// Parses a file produced by CsvWriter. Throws ConfigParseError on a
/// malformed header or row.
std::vector<SweepRow> read_csv(std::istream& in);

}  // namespace hfphase
