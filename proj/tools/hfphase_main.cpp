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

// hfphase: parameter sweeps of the thermal geometric phase and concurrence
// of the hyperfine two-spin model, written as CSV.
//
//   hfphase sweep run.conf --beta 0.5:5:10 --out run.csv
//   hfphase scenario fig3
//   hfphase point --J 1 --C 1 --epsilon 0.5 --beta 1 --t 1
//   hfphase check
//
// Exit codes: 0 success, 1 configuration error, 2 numeric failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "hfphase/checks.hpp"
#include "hfphase/config.hpp"
#include "hfphase/csv.hpp"
#include "hfphase/errors.hpp"
#include "hfphase/scenarios.hpp"
#include "hfphase/sweep.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

// Grid flags shared by sweep, scenario and point. Values use the config-file
// grid syntax and are applied after the file, in command-line order.
void add_grid_flags(CLI::App* cmd, std::vector<std::pair<std::string, std::string>>& slots) {
  static const char* const kKeys[] = {"J", "C", "D", "epsilon", "beta", "T", "t"};
  for (const char* key : kKeys) {
    cmd->add_option_function<std::string>(
        std::string("--") + key, [&slots, key](const std::string& v) { slots.emplace_back(key, v); },
        std::string("grid for ") + key + " (list 'a, b' or range 'start:stop:count')");
  }
}

void write_rows(const hfphase::SweepConfig& config, const std::string& out_path) {
  std::unique_ptr<std::ofstream> file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file = std::make_unique<std::ofstream>(out_path, std::ios::binary);
    if (!*file) throw hfphase::Error(hfphase::ErrorCode::ConfigParseError, "cannot open '" + out_path + "'");
    out = file.get();
  }
  hfphase::CsvWriter writer(*out, config.outputs.populations);
  hfphase::run_sweep(config, [&](const hfphase::SweepRow& row) { writer.write(row); });
  out->flush();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal-state geometric phase and concurrence of the hyperfine two-spin model"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  int steps = 0;
  bool oracle = false;
  std::string dynamical_h;
  unsigned threads = 0;
  app.add_option("--out", out_path, "CSV output path (default stdout)");
  app.add_option("--steps", steps, "time steps for the integrated-phase oracle")->check(CLI::PositiveNumber);
  app.add_flag("--oracle", oracle, "also evaluate the integrated phase and emit oracle_delta");
  app.add_option("--dynamical-h", dynamical_h, "Hamiltonian in the dynamical-phase factor")
      ->check(CLI::IsMember({"post", "pre"}));
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  std::vector<std::pair<std::string, std::string>> flag_settings;
  std::vector<std::string> raw_settings;
  std::string outputs;
  std::size_t max_rows = 0;
  auto add_common = [&](CLI::App* cmd) {
    add_grid_flags(cmd, flag_settings);
    cmd->add_option("--outputs", outputs, "comma-separated subset of gamma_g, gamma_g_unwrapped, magnitude, "
                                          "concurrence, populations");
    cmd->add_option("--max-rows", max_rows, "grid size cap")->check(CLI::PositiveNumber);
    cmd->add_option("--set", raw_settings, "extra key=value setting (repeatable)");
  };

  auto* sweep = app.add_subcommand("sweep", "run a sweep from a config file");
  std::string config_path;
  sweep->add_option("config", config_path, "key = value config file")->required();
  add_common(sweep);

  auto* scenario = app.add_subcommand("scenario", "run a built-in figure scenario");
  std::string scenario_name;
  bool list_scenarios = false;
  bool print_scenario = false;
  scenario->add_option("name", scenario_name, "scenario name (fig1 ... fig7)");
  scenario->add_flag("--list", list_scenarios, "list the built-in scenarios");
  scenario->add_flag("--print", print_scenario, "print the scenario file instead of running it");
  add_common(scenario);

  auto* point = app.add_subcommand("point", "evaluate a single parameter point");
  add_common(point);

  auto* check = app.add_subcommand("check", "run the invariant suite");
  std::vector<int> only;
  check->add_option("--only", only, "check ids to run (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (check->parsed()) {
      const auto results = hfphase::run_checks(only, threads == 0 ? 1 : threads);
      bool all = true;
      for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
        all &= r.passed;
      }
      return all ? 0 : kExitNumeric;
    }

    hfphase::SweepConfig config;
    if (sweep->parsed()) {
      config = hfphase::load_config_file(config_path);
    } else if (scenario->parsed()) {
      if (list_scenarios) {
        for (const auto& name : hfphase::scenario_names()) std::cout << name << '\n';
        return 0;
      }
      if (scenario_name.empty()) {
        std::cerr << "scenario: a name is required (see --list)\n";
        return kExitConfig;
      }
      if (print_scenario) {
        std::cout << hfphase::scenario_text(scenario_name);
        return 0;
      }
      config = hfphase::load_scenario(scenario_name);
    } else {
      config.scenario = "point";
    }

    for (const auto& [key, value] : flag_settings) hfphase::apply_setting(config, key, value);
    for (const auto& entry : raw_settings) {
      const auto eq = entry.find('=');
      if (eq == std::string::npos) {
        throw hfphase::Error(hfphase::ErrorCode::ConfigParseError, "--set expects key=value, got '" + entry + "'");
      }
      hfphase::apply_setting(config, entry.substr(0, eq), entry.substr(eq + 1));
    }
    if (!outputs.empty()) hfphase::apply_setting(config, "outputs", outputs);
    if (max_rows != 0) config.max_rows = max_rows;
    if (steps != 0) config.steps = steps;
    if (oracle) config.oracle_check = true;
    if (!dynamical_h.empty()) hfphase::apply_setting(config, "dynamical_h", dynamical_h);
    if (threads != 0) config.threads = threads;

    if (point->parsed() && config.row_count() != 1) {
      throw hfphase::Error(hfphase::ErrorCode::ConfigParseError, "point needs a single value for every parameter");
    }
    config.validate();
    write_rows(config, out_path);
  } catch (const hfphase::Error& e) {
    std::cerr << "hfphase: " << e.what() << '\n';
    return hfphase::is_config_error(e.code()) ? kExitConfig : kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "hfphase: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
