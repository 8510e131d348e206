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

#include "hfphase/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "hfphase/errors.hpp"

namespace hfphase {

namespace {

void write_optional(std::ostream& out, const std::optional<double>& value) {
  out << ',';
  if (value) out << format_number(*value);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

double to_double(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::ConfigParseError,
                "csv line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

std::optional<double> to_optional(std::string_view field, std::size_t line_no) {
  if (field.empty()) return std::nullopt;
  return to_double(field, line_no);
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  return std::string(buffer, ptr);
}

CsvWriter::CsvWriter(std::ostream& out, bool with_populations) : out_(out), with_populations_(with_populations) {
  out_ << kCsvHeader;
  if (with_populations_) out_ << kPopulationColumns;
  out_ << '\n';
}

void CsvWriter::write(const SweepRow& row) {
  out_ << format_number(row.J) << ',' << format_number(row.C) << ',' << format_number(row.D) << ','
       << format_number(row.epsilon) << ',' << format_number(row.beta) << ',' << format_number(row.t);
  write_optional(out_, row.gamma_g);
  write_optional(out_, row.gamma_g_unwrapped);
  write_optional(out_, row.magnitude);
  write_optional(out_, row.concurrence);
  write_optional(out_, row.oracle_delta);
  if (with_populations_) {
    for (std::size_t i = 0; i < 4; ++i) {
      out_ << ',';
      if (row.populations) out_ << format_number((*row.populations)[i]);
    }
  }
  out_ << '\n';
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ConfigParseError, "csv: missing header");
  bool with_populations = false;
  if (line == kCsvHeader) {
    with_populations = false;
  } else if (line == std::string(kCsvHeader) + std::string(kPopulationColumns)) {
    with_populations = true;
  } else {
    throw Error(ErrorCode::ConfigParseError, "csv: unexpected header '" + line + "'");
  }
  const std::size_t expected = with_populations ? 15 : 11;

  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != expected) {
      throw Error(ErrorCode::ConfigParseError, "csv line " + std::to_string(line_no) + ": expected " +
                                                   std::to_string(expected) + " fields");
    }
    SweepRow row;
    row.J = to_double(f[0], line_no);
    row.C = to_double(f[1], line_no);
    row.D = to_double(f[2], line_no);
    row.epsilon = to_double(f[3], line_no);
    row.beta = to_double(f[4], line_no);
    row.t = to_double(f[5], line_no);
    row.gamma_g = to_optional(f[6], line_no);
    row.gamma_g_unwrapped = to_optional(f[7], line_no);
    row.magnitude = to_optional(f[8], line_no);
    row.concurrence = to_optional(f[9], line_no);
    row.oracle_delta = to_optional(f[10], line_no);
    if (with_populations && !f[11].empty()) {
      row.populations = std::array<double, 4>{to_double(f[11], line_no), to_double(f[12], line_no),
                                              to_double(f[13], line_no), to_double(f[14], line_no)};
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hfphase
