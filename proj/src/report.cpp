// Copyright 2026 The Revolve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revolve/report.hpp"

#include <charconv>
#include <system_error>

namespace revolve {

using nlohmann::json;

std::string format_number(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

json to_json(const VolumeReport& report) {
  return {{"method", to_string(report.method)},
          {"value", report.value},
          {"error_estimate", report.error_estimate},
          {"evaluations", report.evaluations},
          {"wall_time_s", report.wall_time.count()}};
}

json to_json(const MethodOutcome& outcome) {
  if (outcome.report) return to_json(*outcome.report);
  return {{"method", to_string(outcome.method)},
          {"error", {{"kind", outcome.error_kind},
                     {"message", outcome.error_message}}}};
}

json to_json(const Comparison& comparison) {
  json reports = json::array();
  for (const MethodOutcome& outcome : comparison.outcomes) {
    reports.push_back(to_json(outcome));
  }
  return {{"verdict", to_string(comparison.verdict)}, {"reports", reports}};
}

json to_json(const CentroidReport& report) {
  return {{"area", report.area},
          {"centroid", {{"x", report.centroid.x()}, {"y", report.centroid.y()}}}};
}

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void append_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += quote(row[i]);
  }
  out += "\r\n";
}

}  // namespace

std::string CsvTable::str() const {
  std::string out;
  append_row(out, header);
  for (const auto& row : rows) append_row(out, row);
  return out;
}

CsvTable to_csv(const VolumeReport& report) {
  return {{"method", "value", "error_estimate", "evaluations", "wall_time_s"},
          {{std::string(to_string(report.method)), format_number(report.value),
            format_number(report.error_estimate),
            std::to_string(report.evaluations),
            format_number(report.wall_time.count())}}};
}

CsvTable to_csv(const Comparison& comparison) {
  CsvTable table;
  table.header.push_back("verdict");
  std::vector<std::string> row{std::string(to_string(comparison.verdict))};
  for (const MethodOutcome& outcome : comparison.outcomes) {
    table.header.emplace_back(to_string(outcome.method));
    row.push_back(outcome.report ? format_number(outcome.report->value) : "");
  }
  table.rows.push_back(std::move(row));
  return table;
}

CsvTable to_csv(const CentroidReport& report) {
  return {{"area", "x_c", "y_c"},
          {{format_number(report.area), format_number(report.centroid.x()),
            format_number(report.centroid.y())}}};
}

}  // namespace revolve
