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

#include "hfphase/scenarios.hpp"

#include "hfphase/errors.hpp"

namespace hfphase {

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::scenario_table()) names.emplace_back(name);
  return names;
}

std::string_view scenario_text(std::string_view name) {
  for (const auto& [key, text] : detail::scenario_table()) {
    if (key == name) return text;
  }
  throw Error(ErrorCode::ConfigParseError, "unknown scenario '" + std::string(name) + "'");
}

SweepConfig load_scenario(std::string_view name) {
  SweepConfig config = parse_config(scenario_text(name));
  config.scenario = std::string(name);
  return config;
}

}  // namespace hfphase
