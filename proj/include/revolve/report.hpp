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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "revolve/methods.hpp"

namespace revolve {

/// 17 significant digits (printf "%.17g" style) with '.' as the decimal
/// separator regardless of locale.
std::string format_number(double value);

nlohmann::json to_json(const VolumeReport& report);
nlohmann::json to_json(const MethodOutcome& outcome);
nlohmann::json to_json(const Comparison& comparison);
nlohmann::json to_json(const CentroidReport& report);

/// RFC 4180 style table: header row, then data rows, CRLF line ends.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
};

CsvTable to_csv(const VolumeReport& report);
/// One row: verdict followed by one value column per method (empty when the
/// method did not run).
CsvTable to_csv(const Comparison& comparison);
CsvTable to_csv(const CentroidReport& report);

}  // namespace revolve
