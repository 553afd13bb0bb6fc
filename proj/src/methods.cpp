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

#include "revolve/methods.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "revolve/errors.hpp"
#include "revolve/polygon.hpp"
#include "revolve/random.hpp"

namespace revolve {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kMonteCarloChunks = 64;

template <typename Body>
VolumeReport timed(Method method, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  const QuadratureResult result = body();
  const auto stop = std::chrono::steady_clock::now();
  return {method, std::max(0.0, result.value), result.error_estimate,
          result.evaluations, stop - start};
}

std::string method_needs(Method method, const std::string& detail) {
  return std::string(to_string(method)) + " method " + detail;
}

// Sweep direction and axis coordinate for the classical methods. The shell
// method sweeps across the axis, the disk method along it.
struct ClassicalSetup {
  Sweep sweep;
  double t0;
};

ClassicalSetup classical_setup(Method method, const Axis& axis) {
  const bool shell = (method == Method::Shell);
  if (axis.is_vertical()) {
    return {shell ? Sweep::AlongX : Sweep::AlongY, axis.x0()};
  }
  if (axis.is_horizontal()) {
    return {shell ? Sweep::AlongY : Sweep::AlongX, axis.y0()};
  }
  throw UnsupportedMethod(
      method_needs(method, "requires a vertical or horizontal axis"));
}

std::vector<Slab> classical_slabs(Method method, const Region& region,
                                  Sweep sweep) {
  auto pieces = slabs(region, sweep);
  if (!pieces) {
    const char* kind = (sweep == Sweep::AlongX) ? "normal_x" : "normal_y";
    throw UnsupportedMethod(method_needs(
        method, std::string("requires ") + kind +
                    " parts (or polygons) for this axis orientation"));
  }
  return std::move(*pieces);
}

bool all_polar(const Region& region) {
  if (region.get_if<PolarSector>()) return true;
  if (const auto* u = region.get_if<Union>()) {
    return std::all_of(u->parts.begin(), u->parts.end(), all_polar);
  }
  return false;
}

struct RunningStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }

  void merge(const RunningStats& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double n_a = static_cast<double>(count);
    const double n_b = static_cast<double>(other.count);
    const double n = n_a + n_b;
    const double delta = other.mean - mean;
    mean += delta * n_b / n;
    m2 += other.m2 + delta * delta * n_a * n_b / n;
    count += other.count;
  }
};

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::DoubleIntegral: return "double_integral";
    case Method::Disk: return "disk";
    case Method::Shell: return "shell";
    case Method::Polar: return "polar";
    case Method::Pappus: return "pappus";
    case Method::MonteCarlo: return "monte_carlo";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Agree: return "agree";
    case Verdict::Disagree: return "disagree";
    case Verdict::NoData: return "no data";
  }
  return "unknown";
}

void McConfig::validate() const {
  if (samples < 100) {
    throw std::invalid_argument("Monte Carlo needs at least 100 samples");
  }
}

Moments moments(const Region& region, const Tolerance& tol) {
  Moments m;
  if (const auto* polygon = region.get_if<Polygon>()) {
    const std::span<const Point> vertices(polygon->vertices);
    m.area = polygon_signed_area(vertices);
    const Point c = polygon_centroid(vertices);
    m.x = c.x() * m.area;
    m.y = c.y() * m.area;
    m.evaluations = static_cast<std::int64_t>(vertices.size());
    return m;
  }
  if (const auto* u = region.get_if<Union>()) {
    for (const Region& part : u->parts) {
      const Moments p = moments(part, tol);
      m.area += p.area;
      m.x += p.x;
      m.y += p.y;
      m.area_error += p.area_error;
      m.x_error += p.x_error;
      m.y_error += p.y_error;
      m.evaluations += p.evaluations;
    }
    return m;
  }
  const auto a = integrate_region(region, [](const Point&) { return 1.0; }, tol);
  const auto x = integrate_region(region, [](const Point& p) { return p.x(); }, tol);
  const auto y = integrate_region(region, [](const Point& p) { return p.y(); }, tol);
  return {a.value,          x.value,          y.value,
          a.error_estimate, x.error_estimate, y.error_estimate,
          a.evaluations + x.evaluations + y.evaluations};
}

double area(const Region& region, const Tolerance& tol) {
  return moments(region, tol).area;
}

CentroidReport centroid(const Region& region, const Tolerance& tol) {
  const Moments m = moments(region, tol);
  if (!(m.area > 0.0)) {
    throw InvalidRegion("centroid of a region with zero area is undefined");
  }
  return {Point(m.x / m.area, m.y / m.area), m.area};
}

VolumeReport volume_double_integral(const Region& region, const Axis& axis,
                                    const Tolerance& tol) {
  return timed(Method::DoubleIntegral, [&] {
    const double side = axis_side_check(region, axis);
    return integrate_region(
        region,
        [&](const Point& p) { return kTwoPi * side * signed_distance(axis, p); },
        tol);
  });
}

VolumeReport volume_shell(const Region& region, const Axis& axis,
                          const Tolerance& tol) {
  return timed(Method::Shell, [&] {
    const double side = axis_side_check(region, axis);
    const ClassicalSetup setup = classical_setup(Method::Shell, axis);
    QuadratureResult total;
    for (const Slab& slab : classical_slabs(Method::Shell, region, setup.sweep)) {
      if (!(slab.lo < slab.hi)) continue;
      total += integrate_1d(
          [&](double t) {
            return kTwoPi * side * (t - setup.t0) *
                   (slab.upper(t) - slab.lower(t));
          },
          slab.lo, slab.hi, tol);
    }
    return total;
  });
}

VolumeReport volume_disk(const Region& region, const Axis& axis,
                         const Tolerance& tol) {
  return timed(Method::Disk, [&] {
    const double side = axis_side_check(region, axis);
    const ClassicalSetup setup = classical_setup(Method::Disk, axis);
    QuadratureResult total;
    for (const Slab& slab : classical_slabs(Method::Disk, region, setup.sweep)) {
      if (!(slab.lo < slab.hi)) continue;
      total += integrate_1d(
          [&](double t) {
            const double outer = slab.upper(t) - setup.t0;
            const double inner = slab.lower(t) - setup.t0;
            return std::numbers::pi * side * (outer * outer - inner * inner);
          },
          slab.lo, slab.hi, tol);
    }
    return total;
  });
}

VolumeReport volume_polar(const Region& region, const Axis& axis,
                          const Tolerance& tol) {
  return timed(Method::Polar, [&] {
    const double side = axis_side_check(region, axis);
    if (!all_polar(region)) {
      throw UnsupportedMethod(
          method_needs(Method::Polar, "requires a polar sector region"));
    }
    return integrate_region(
        region,
        [&](const Point& p) { return kTwoPi * side * signed_distance(axis, p); },
        tol);
  });
}

VolumeReport volume_pappus(const Region& region, const Axis& axis,
                           const Tolerance& tol) {
  return timed(Method::Pappus, [&] {
    axis_side_check(region, axis);
    const Moments m = moments(region, tol);
    QuadratureResult result;
    result.evaluations = m.evaluations;
    if (m.area > 0.0) {
      const Point c(m.x / m.area, m.y / m.area);
      result.value = kTwoPi * std::abs(signed_distance(axis, c)) * m.area;
    }
    result.error_estimate =
        kTwoPi * (std::abs(axis.a()) * m.x_error +
                  std::abs(axis.b()) * m.y_error +
                  std::abs(axis.c()) * m.area_error);
    return result;
  });
}

VolumeReport volume_monte_carlo(const Region& region, const Axis& axis,
                                const McConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  axis_side_check(region, axis);

  const Box box = bounding_box(region);
  const Point lo = box.min();
  const Point size = box.isEmpty() ? Point::Zero() : Point(box.sizes());
  const double box_area = size.x() * size.y();
  const CounterRng rng(cfg.seed);

  std::vector<RunningStats> chunks(kMonteCarloChunks);
  auto run_chunk = [&](std::uint64_t k) {
    const std::uint64_t first = k * cfg.samples / kMonteCarloChunks;
    const std::uint64_t last = (k + 1) * cfg.samples / kMonteCarloChunks;
    RunningStats stats;
    for (std::uint64_t i = first; i < last; ++i) {
      const Point p = lo + Point(rng.uniform(2 * i) * size.x(),
                                 rng.uniform(2 * i + 1) * size.y());
      stats.add(contains(region, p)
                    ? kTwoPi * std::abs(signed_distance(axis, p))
                    : 0.0);
    }
    chunks[k] = stats;
  };

  const std::uint64_t workers = std::clamp<std::uint64_t>(
      std::thread::hardware_concurrency(), 1, kMonteCarloChunks);
  if (workers == 1) {
    for (std::uint64_t k = 0; k < kMonteCarloChunks; ++k) run_chunk(k);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t k = w; k < kMonteCarloChunks; k += workers) {
          run_chunk(k);
        }
      });
    }
  }

  RunningStats total;
  for (const RunningStats& chunk : chunks) total.merge(chunk);
  const double n = static_cast<double>(total.count);
  const double variance = total.count > 1 ? total.m2 / (n - 1.0) : 0.0;

  VolumeReport report{Method::MonteCarlo};
  report.value = box_area * total.mean;
  report.error_estimate = box_area * std::sqrt(variance / n);
  report.evaluations = static_cast<std::int64_t>(total.count);
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

VolumeReport compute_volume(Method method, const Region& region,
                            const Axis& axis, const Tolerance& tol,
                            const McConfig& cfg) {
  switch (method) {
    case Method::DoubleIntegral: return volume_double_integral(region, axis, tol);
    case Method::Disk: return volume_disk(region, axis, tol);
    case Method::Shell: return volume_shell(region, axis, tol);
    case Method::Polar: return volume_polar(region, axis, tol);
    case Method::Pappus: return volume_pappus(region, axis, tol);
    case Method::MonteCarlo: return volume_monte_carlo(region, axis, cfg);
  }
  throw std::logic_error("unhandled method");
}

Verdict assess_agreement(const std::vector<VolumeReport>& reports) {
  if (reports.empty()) return Verdict::NoData;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (std::size_t j = i + 1; j < reports.size(); ++j) {
      const VolumeReport& a = reports[i];
      const VolumeReport& b = reports[j];
      double allowed = 0.0;
      if (a.method == Method::MonteCarlo) {
        allowed = 4.0 * a.error_estimate + 10.0 * b.error_estimate;
      } else if (b.method == Method::MonteCarlo) {
        allowed = 4.0 * b.error_estimate + 10.0 * a.error_estimate;
      } else {
        allowed = 10.0 * (a.error_estimate + b.error_estimate);
      }
      if (std::abs(a.value - b.value) > allowed) return Verdict::Disagree;
    }
  }
  return Verdict::Agree;
}

Comparison compare_methods(const Region& region, const Axis& axis,
                           const Tolerance& tol, const McConfig& cfg) {
  Comparison comparison;
  std::vector<VolumeReport> reports;
  for (Method method : kAllMethods) {
    MethodOutcome outcome{method, std::nullopt, {}, {}};
    try {
      outcome.report = compute_volume(method, region, axis, tol, cfg);
      reports.push_back(*outcome.report);
    } catch (const Error& e) {
      outcome.error_kind = e.kind();
      outcome.error_message = e.what();
    }
    comparison.outcomes.push_back(std::move(outcome));
  }
  comparison.verdict = assess_agreement(reports);
  return comparison;
}

}  // namespace revolve
