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

#include <filesystem>
#include <optional>

#include "json.hpp"

#include "revolve/geometry.hpp"
#include "revolve/methods.hpp"
#include "revolve/quadrature.hpp"
#include "revolve/region.hpp"

namespace revolve {

enum class OutputFormat { Json, Csv };

/// A method name or "all".
struct MethodSelection {
  bool all = false;
  Method method = Method::DoubleIntegral;

  friend bool operator==(const MethodSelection&, const MethodSelection&) = default;
};

/// Everything one CLI run needs, validated.
///
/// Document schema:
///
///     {
///       "region": {"type": "normal_x", "x_min": 0, "x_max": 1,
///                  "lower": "0", "upper": "1-x"},
///       "axis": "OY",
///       "method": "double_integral",
///       "tolerance": {"rel": 1e-10, "abs": 1e-12, "max_depth": 50},
///       "monte_carlo": {"samples": 1000000, "seed": 0},
///       "format": "json"
///     }
///
/// Region types: normal_x (x_min, x_max, lower, upper in x), normal_y
/// (y_min, y_max, left, right in y), polar (theta_min, theta_max, rho_min,
/// rho_max in theta), polygon (vertices: [[x, y], ...]) and union
/// (parts: [region, ...]). Scalar fields take numbers or variable-free
/// expressions ("-pi/3"). The axis is {"a", "b", "c"}, {"vertical_at": x0},
/// {"horizontal_at": y0}, {"through": [[x1, y1], [x2, y2]]}, "OX" or "OY".
/// Only "region" is required.
struct JobConfig {
  Region region;
  std::optional<Axis> axis;
  MethodSelection method;
  Tolerance tolerance;
  McConfig monte_carlo;
  OutputFormat format = OutputFormat::Json;
};

/// Validates the whole document and throws one ConfigError listing every
/// problem with its field path (e.g. "region.parts[1].upper: ...").
JobConfig parse_job(const nlohmann::json& document);

/// Reads and parses a config file. Unreadable files and JSON syntax errors
/// are reported as ConfigError as well.
JobConfig load_job(const std::filesystem::path& path);

/// Canonical form: scalars as numbers, the axis as normalized coefficients,
/// every optional section spelled out. parse_job(to_json(job)) reproduces
/// the job.
nlohmann::json to_json(const JobConfig& job);
nlohmann::json to_json(const Region& region);
nlohmann::json to_json(const Axis& axis);

std::optional<OutputFormat> parse_format(std::string_view name);

}  // namespace revolve
