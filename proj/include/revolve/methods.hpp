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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revolve/geometry.hpp"
#include "revolve/quadrature.hpp"
#include "revolve/region.hpp"

namespace revolve {

enum class Method { DoubleIntegral, Disk, Shell, Polar, Pappus, MonteCarlo };

inline constexpr Method kAllMethods[] = {
    Method::DoubleIntegral, Method::Disk,   Method::Shell,
    Method::Polar,          Method::Pappus, Method::MonteCarlo};

/// "double_integral", "disk", "shell", "polar", "pappus", "monte_carlo".
std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

struct VolumeReport {
  Method method;
  double value = 0.0;
  /// Absolute; the standard error for Monte Carlo.
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
  std::chrono::duration<double> wall_time{};
};

struct CentroidReport {
  Point centroid;
  double area;
};

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when samples < 100.
  void validate() const;
};

/// Zeroth and first moments of a region, with absolute error estimates.
struct Moments {
  double area = 0.0;
  double x = 0.0;  ///< integral of x dA
  double y = 0.0;  ///< integral of y dA
  double area_error = 0.0;
  double x_error = 0.0;
  double y_error = 0.0;
  std::int64_t evaluations = 0;
};

/// Exact shoelace moments for polygons, quadrature otherwise.
Moments moments(const Region& region, const Tolerance& tol = {});

double area(const Region& region, const Tolerance& tol = {});
CentroidReport centroid(const Region& region, const Tolerance& tol = {});

/// Integral over the region of 2*pi times the distance to the axis.
/// Throws AxisIntersectsRegion when the axis crosses the region.
VolumeReport volume_double_integral(const Region& region, const Axis& axis,
                                    const Tolerance& tol = {});

/// Shells: integral of 2*pi*|t - t0| * (upper(t) - lower(t)) dt. Needs a
/// vertical axis with normal-x parts (or polygons), or a horizontal axis with
/// normal-y parts; otherwise UnsupportedMethod.
VolumeReport volume_shell(const Region& region, const Axis& axis,
                          const Tolerance& tol = {});

/// Washers: integral of pi * ((outer - t0)^2 - (inner - t0)^2) along the
/// axis. Needs a vertical axis with normal-y parts (or polygons), or a
/// horizontal axis with normal-x parts; otherwise UnsupportedMethod.
VolumeReport volume_disk(const Region& region, const Axis& axis,
                         const Tolerance& tol = {});

/// The double integral evaluated in polar coordinates (Jacobian rho). Needs a
/// polar sector or a union of them; any axis orientation.
VolumeReport volume_polar(const Region& region, const Axis& axis,
                          const Tolerance& tol = {});

/// 2*pi * |signed_distance(axis, centroid)| * area.
VolumeReport volume_pappus(const Region& region, const Axis& axis,
                           const Tolerance& tol = {});

/// Uniform sampling of the bounding box. Deterministic for a fixed seed and
/// independent of the number of worker threads.
VolumeReport volume_monte_carlo(const Region& region, const Axis& axis,
                                const McConfig& cfg = {});

/// Dispatches on `method`; `cfg` is only used by Monte Carlo.
VolumeReport compute_volume(Method method, const Region& region,
                            const Axis& axis, const Tolerance& tol,
                            const McConfig& cfg);

enum class Verdict { Agree, Disagree, NoData };

std::string_view to_string(Verdict verdict);

struct MethodOutcome {
  Method method;
  std::optional<VolumeReport> report;
  /// Error kind and message when the method did not produce a report.
  std::string error_kind;
  std::string error_message;
};

struct Comparison {
  std::vector<MethodOutcome> outcomes;
  Verdict verdict = Verdict::NoData;
};

/// Pairwise agreement: two quadrature-style reports agree when
/// |difference| <= 10 * (sum of their error estimates); a pair involving
/// Monte Carlo allows 4 standard errors plus 10x the other estimate.
/// No reports gives NoData; a single report agrees with itself.
Verdict assess_agreement(const std::vector<VolumeReport>& reports);

/// Runs every method, recording per-method errors instead of throwing.
Comparison compare_methods(const Region& region, const Axis& axis,
                           const Tolerance& tol = {}, const McConfig& cfg = {});

}  // namespace revolve
