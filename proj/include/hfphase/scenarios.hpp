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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfphase/config.hpp"

namespace hfphase {

/// Names of the built-in scenarios (scenarios/*.conf), sorted.
std::vector<std::string> scenario_names();

/// Raw text of a built-in scenario. Throws ConfigParseError for unknown names.
std::string_view scenario_text(std::string_view name);

SweepConfig load_scenario(std::string_view name);

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& scenario_table();
}  // namespace detail

}  // namespace hfphase
