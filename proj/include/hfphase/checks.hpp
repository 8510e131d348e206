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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

// The invariant suite behind `hfphase check` and the acceptance test binary.
// Each check is self-contained, seeded, and pins its own tolerance.

namespace hfphase {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckInfo {
  int id;
  const char* name;
};

std::span<const CheckInfo> check_catalog();

CheckResult run_check(int id, unsigned threads = 1);

/// Runs the checks listed in `ids`, or every check when `ids` is empty.
std::vector<CheckResult> run_checks(std::span<const int> ids = {}, unsigned threads = 1);

}  // namespace hfphase
