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

#include "hfphase/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "hfphase/errors.hpp"

namespace hfphase {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorCode::ConfigParseError, message); }

double parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    parse_error("not a number: '" + std::string(s) + "'");
  }
  if (!std::isfinite(value)) parse_error("non-finite value: '" + std::string(s) + "'");
  return value;
}

long long parse_integer(std::string_view s) {
  s = trim(s);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    parse_error("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

bool parse_bool(std::string_view s) {
  s = trim(s);
  if (s == "true" || s == "on" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "off" || s == "no" || s == "0") return false;
  parse_error("not a boolean: '" + std::string(s) + "'");
}

OutputSelection parse_outputs(std::string_view s) {
  OutputSelection out{false, false, false, false, false};
  for (auto name : split(s, ',')) {
    if (name == "gamma_g") out.gamma_g = true;
    else if (name == "gamma_g_unwrapped") out.gamma_g_unwrapped = true;
    else if (name == "magnitude") out.magnitude = true;
    else if (name == "concurrence") out.concurrence = true;
    else if (name == "populations") out.populations = true;
    else parse_error("unknown output '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  if (text.empty()) parse_error("empty grid");
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) parse_error("range must be start:stop:count, got '" + std::string(text) + "'");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const long long count = parse_integer(parts[2]);
    if (count < 1) parse_error("range count must be >= 1 in '" + std::string(text) + "'");
    if (count == 1 && start != stop) parse_error("count 1 needs start == stop in '" + std::string(text) + "'");
    std::vector<double> values(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
      const double frac = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      values[static_cast<std::size_t>(i)] = std::lerp(start, stop, frac);
    }
    return values;
  }
  std::vector<double> values;
  for (auto item : split(text, ',')) values.push_back(parse_double(item));
  return values;
}

void apply_setting(SweepConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "scenario") config.scenario = std::string(value);
  else if (key == "J") config.J = parse_grid(value);
  else if (key == "C") config.C = parse_grid(value);
  else if (key == "D") config.D = parse_grid(value);
  else if (key == "epsilon") config.epsilon = parse_grid(value);
  else if (key == "beta") config.beta = parse_grid(value);
  else if (key == "T") {
    config.beta.clear();
    for (double temperature : parse_grid(value)) {
      if (temperature <= 0.0) parse_error("temperatures must be positive");
      config.beta.push_back(1.0 / temperature);
    }
  } else if (key == "t") config.t = parse_grid(value);
  else if (key == "outputs") config.outputs = parse_outputs(value);
  else if (key == "oracle") config.oracle_check = parse_bool(value);
  else if (key == "steps") config.steps = static_cast<int>(parse_integer(value));
  else if (key == "dynamical_h") {
    if (value == "post") config.dynamical_h = DynamicalHamiltonian::Post;
    else if (value == "pre") config.dynamical_h = DynamicalHamiltonian::Pre;
    else parse_error("dynamical_h must be 'post' or 'pre'");
  } else if (key == "threads") {
    const auto n = parse_integer(value);
    if (n < 1) parse_error("threads must be >= 1");
    config.threads = static_cast<unsigned>(n);
  } else if (key == "max_rows") {
    const auto n = parse_integer(value);
    if (n < 1) parse_error("max_rows must be >= 1");
    config.max_rows = static_cast<std::size_t>(n);
  } else if (key.starts_with("tol.")) {
    if (!set_tolerance(config.tolerances, key.substr(4), parse_double(value))) {
      parse_error("unknown tolerance '" + std::string(key) + "'");
    }
  } else {
    parse_error("unknown key '" + std::string(key) + "'");
  }
}

SweepConfig parse_config(std::string_view text, SweepConfig base) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) parse_error("line " + std::to_string(line_no) + ": expected key = value");
      try {
        apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.message());
      }
    }
    start = end + 1;
  }
  return base;
}

SweepConfig load_config_file(const std::string& path, SweepConfig base) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), std::move(base));
}

std::size_t SweepConfig::row_count() const {
  std::size_t total = 1;
  for (std::size_t n : {J.size(), C.size(), D.size(), epsilon.size(), beta.size(), t.size()}) {
    if (n != 0 && total > std::numeric_limits<std::size_t>::max() / n) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= n;
  }
  return total;
}

std::size_t SweepConfig::series_count() const { return t.empty() ? 0 : row_count() / t.size(); }

void SweepConfig::validate() const {
  const std::pair<const char*, const std::vector<double>*> grids[] = {
      {"J", &J}, {"C", &C}, {"D", &D}, {"epsilon", &epsilon}, {"beta", &beta}, {"t", &t}};
  for (const auto& [name, grid] : grids) {
    if (grid->empty()) parse_error(std::string("grid '") + name + "' is empty");
    for (double v : *grid) {
      if (!std::isfinite(v)) parse_error(std::string("grid '") + name + "' has a non-finite value");
    }
  }
  if (steps < 1) parse_error("steps must be positive");
  if (threads < 1) parse_error("threads must be >= 1");
  if (row_count() > max_rows) {
    throw Error(ErrorCode::GridTooLarge,
                std::to_string(row_count()) + " rows exceed the cap of " + std::to_string(max_rows));
  }
  if (outputs.gamma_g_unwrapped) {
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!(t[i] > t[i - 1])) {
        throw Error(ErrorCode::NonMonotonicTimeGrid, "t grid must be strictly increasing for unwrapping");
      }
    }
  }
}

}  // namespace hfphase
