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

#include "revolve/region.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "revolve/errors.hpp"
#include "revolve/polygon.hpp"

namespace revolve {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kBoxProbes = 1025;
constexpr double kBoxPad = 1e-9;
constexpr double kSideTolerance = 1e-9;
constexpr int kSideGrid = 64;

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

std::string describe(const char* what, double t) {
  std::ostringstream out;
  out.precision(17);
  out << what << " at " << t;
  return out.str();
}

// Parameter values used to validate a curve-bounded region: both endpoints
// and `interior` evenly spaced points between them.
std::vector<double> probe_points(double lo, double hi, int interior) {
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(interior) + 2);
  points.push_back(lo);
  for (int k = 1; k <= interior; ++k) {
    points.push_back(lo + (hi - lo) * k / (interior + 1));
  }
  points.push_back(hi);
  return points;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> points(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    points[static_cast<std::size_t>(k)] =
        (k == count - 1) ? hi : lo + (hi - lo) * k / (count - 1);
  }
  return points;
}

double ordering_slack(double a, double b) {
  return 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Shared validation for the two normal-domain variants.
void validate_between(double lo, double hi, const Curve& below,
                      const Curve& above, const char* below_name,
                      const char* above_name, const ProbeOptions& probes) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw InvalidRegion("normal domain needs finite bounds with min < max");
  }
  for (double t : probe_points(lo, hi, probes.interior_points)) {
    double b = 0.0;
    double a = 0.0;
    try {
      b = evaluate_nudged(below, t, lo, hi);
    } catch (const DomainError& e) {
      throw InvalidRegion(describe(below_name, t) + ": " + e.what());
    }
    try {
      a = evaluate_nudged(above, t, lo, hi);
    } catch (const DomainError& e) {
      throw InvalidRegion(describe(above_name, t) + ": " + e.what());
    }
    if (b > a + ordering_slack(a, b)) {
      throw InvalidRegion(describe(below_name, t) + " exceeds " + above_name);
    }
  }
}

double normalize_angle(double theta, double theta_min) {
  double offset = std::fmod(theta - theta_min, kTwoPi);
  if (offset < 0.0) offset += kTwoPi;
  return theta_min + offset;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  const Point ab = b - a;
  const Point ap = p - a;
  const double scale = std::max({1.0, ab.cwiseAbs().maxCoeff(),
                                 ap.cwiseAbs().maxCoeff()});
  const double cross = ab.x() * ap.y() - ab.y() * ap.x();
  if (std::abs(cross) > 1e-12 * scale * scale) return false;
  const double dot = ab.dot(ap);
  return dot >= 0.0 && dot <= ab.squaredNorm();
}

bool polygon_contains(const std::vector<Point>& vertices, const Point& p) {
  const std::size_t n = vertices.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = vertices[i];
    const Point& b = vertices[j];
    if (on_segment(p, a, b)) return true;
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x_cross =
          a.x() + (p.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (p.x() < x_cross) inside = !inside;
    }
  }
  return inside;
}

bool segments_cross(const Point& p1, const Point& p2, const Point& q1,
                    const Point& q2) {
  auto orient = [](const Point& a, const Point& b, const Point& c) {
    const double v = (b.x() - a.x()) * (c.y() - a.y()) -
                     (b.y() - a.y()) * (c.x() - a.x());
    return (v > 0.0) - (v < 0.0);
  };
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(q1, p1, p2)) return true;
  if (o2 == 0 && on_segment(q2, p1, p2)) return true;
  if (o3 == 0 && on_segment(p1, q1, q2)) return true;
  if (o4 == 0 && on_segment(p2, q1, q2)) return true;
  return false;
}

void extend(Box& box, double s, double t, bool swapped) {
  box.extend(swapped ? Point(t, s) : Point(s, t));
}

// Box of a normal domain, probing the bounding curves. `swapped` means the
// sweep parameter is y.
Box normal_box(double lo, double hi, const Curve& below, const Curve& above,
               bool swapped) {
  Box box;
  for (double t : linspace(lo, hi, kBoxProbes)) {
    try {
      extend(box, t, evaluate_nudged(below, t, lo, hi), swapped);
    } catch (const DomainError&) {
    }
    try {
      extend(box, t, evaluate_nudged(above, t, lo, hi), swapped);
    } catch (const DomainError&) {
    }
  }
  return box;
}

Box polar_box(const PolarSector& s) {
  std::vector<double> angles =
      linspace(s.theta_min, s.theta_max, kBoxProbes);
  // Cardinal directions are where the coordinate extremes of an arc sit.
  const double first = std::ceil(s.theta_min / (std::numbers::pi / 2));
  for (double k = first; k * std::numbers::pi / 2 <= s.theta_max; k += 1.0) {
    angles.push_back(k * std::numbers::pi / 2);
  }
  Box box;
  for (double t : angles) {
    const Point dir(std::cos(t), std::sin(t));
    for (const Curve* curve : {&s.rho_min, &s.rho_max}) {
      try {
        box.extend(evaluate_nudged(*curve, t, s.theta_min, s.theta_max) * dir);
      } catch (const DomainError&) {
      }
    }
  }
  return box;
}

Box padded(Box box) {
  if (box.isEmpty()) return box;
  const double scale =
      std::max({1.0, box.min().cwiseAbs().maxCoeff(),
                box.max().cwiseAbs().maxCoeff()});
  const Point pad = Point::Constant(kBoxPad * scale);
  return Box(box.min() - pad, box.max() + pad);
}

void append_boundary(const Region& region, int count, std::vector<Point>& out);

void append_normal_boundary(double lo, double hi, const Curve& below,
                            const Curve& above, bool swapped, int count,
                            std::vector<Point>& out) {
  const int per_side = std::max(2, count / 4);
  auto emit = [&](double t, double s) {
    out.push_back(swapped ? Point(s, t) : Point(t, s));
  };
  auto safe = [&](const Curve& c, double t) -> std::optional<double> {
    try {
      return evaluate_nudged(c, t, lo, hi);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  for (double t : linspace(lo, hi, per_side)) {
    if (auto s = safe(below, t)) emit(t, *s);
    if (auto s = safe(above, t)) emit(t, *s);
  }
  for (double t : {lo, hi}) {
    auto b = safe(below, t);
    auto a = safe(above, t);
    if (!b || !a) continue;
    for (double s : linspace(*b, *a, per_side)) emit(t, s);
  }
}

void append_boundary(const Region& region, int count, std::vector<Point>& out) {
  std::visit(
      Overloaded{
          [&](const NormalX& r) {
            append_normal_boundary(r.x_min, r.x_max, r.lower, r.upper, false,
                                   count, out);
          },
          [&](const NormalY& r) {
            append_normal_boundary(r.y_min, r.y_max, r.left, r.right, true,
                                   count, out);
          },
          [&](const PolarSector& r) {
            const int per_side = std::max(2, count / 4);
            auto safe = [&](const Curve& c, double t) -> std::optional<double> {
              try {
                return evaluate_nudged(c, t, r.theta_min, r.theta_max);
              } catch (const DomainError&) {
                return std::nullopt;
              }
            };
            for (double t : linspace(r.theta_min, r.theta_max, per_side)) {
              const Point dir(std::cos(t), std::sin(t));
              if (auto rho = safe(r.rho_min, t)) out.push_back(*rho * dir);
              if (auto rho = safe(r.rho_max, t)) out.push_back(*rho * dir);
            }
            for (double t : {r.theta_min, r.theta_max}) {
              const Point dir(std::cos(t), std::sin(t));
              auto inner = safe(r.rho_min, t);
              auto outer = safe(r.rho_max, t);
              if (!inner || !outer) continue;
              for (double rho : linspace(*inner, *outer, per_side)) {
                out.push_back(rho * dir);
              }
            }
          },
          [&](const Polygon& r) {
            const std::size_t n = r.vertices.size();
            const int per_edge =
                std::max(1, count / static_cast<int>(n));
            for (std::size_t i = 0; i < n; ++i) {
              const Point& a = r.vertices[i];
              const Point& b = r.vertices[(i + 1) % n];
              for (int k = 0; k < per_edge; ++k) {
                out.push_back(a + (b - a) * (static_cast<double>(k) / per_edge));
              }
            }
          },
          [&](const Union& r) {
            for (const Region& part : r.parts) append_boundary(part, count, out);
          },
      },
      region.shape());
}

// Trapezoid edge: the polygon edge (a, b) restricted to a slab and expressed
// as the linear interpolant between its values at the slab ends.
struct EdgeSpan {
  double at_lo;
  double at_hi;
  double mid;
};

double coordinate(const Point& p, Sweep sweep, bool along) {
  const bool x_first = (sweep == Sweep::AlongX);
  return (along == x_first) ? p.x() : p.y();
}

}  // namespace

double evaluate_nudged(const Curve& curve, double t, double lo, double hi) {
  try {
    return curve(t);
  } catch (const DomainError&) {
    const double nudge = 1e-12 * (hi - lo);
    if (t == lo) return curve(lo + nudge);
    if (t == hi) return curve(hi - nudge);
    throw;
  }
}

Region Region::normal_x(double x_min, double x_max, Curve lower, Curve upper,
                        ProbeOptions probes) {
  validate_between(x_min, x_max, lower, upper, "lower", "upper", probes);
  return Region(NormalX{x_min, x_max, std::move(lower), std::move(upper)});
}

Region Region::normal_y(double y_min, double y_max, Curve left, Curve right,
                        ProbeOptions probes) {
  validate_between(y_min, y_max, left, right, "left", "right", probes);
  return Region(NormalY{y_min, y_max, std::move(left), std::move(right)});
}

Region Region::polar(double theta_min, double theta_max, Curve rho_min,
                     Curve rho_max, ProbeOptions probes) {
  if (!std::isfinite(theta_min) || !std::isfinite(theta_max)) {
    throw InvalidRegion("polar sector needs finite angle bounds");
  }
  const double span = theta_max - theta_min;
  if (!(span > 0.0) || span > kTwoPi) {
    throw InvalidRegion("polar sector needs 0 < theta_max - theta_min <= 2*pi");
  }
  for (double t : probe_points(theta_min, theta_max, probes.interior_points)) {
    double inner = 0.0;
    double outer = 0.0;
    try {
      inner = evaluate_nudged(rho_min, t, theta_min, theta_max);
      outer = evaluate_nudged(rho_max, t, theta_min, theta_max);
    } catch (const DomainError& e) {
      throw InvalidRegion(describe("radius curve", t) + ": " + e.what());
    }
    if (inner < 0.0) throw InvalidRegion(describe("rho_min negative", t));
    if (inner > outer + ordering_slack(inner, outer)) {
      throw InvalidRegion(describe("rho_min exceeds rho_max", t));
    }
  }
  return Region(PolarSector{theta_min, theta_max, std::move(rho_min),
                            std::move(rho_max)});
}

Region Region::polygon(std::vector<Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw InvalidRegion("polygon needs at least 3 vertices");
  for (const Point& v : vertices) {
    if (!v.allFinite()) throw InvalidRegion("polygon vertex is not finite");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_cross(vertices[i], vertices[(i + 1) % n], vertices[j],
                         vertices[(j + 1) % n])) {
        throw InvalidRegion("polygon is not simple (edges " +
                            std::to_string(i) + " and " + std::to_string(j) +
                            " intersect)");
      }
    }
  }
  if (!(polygon_signed_area<double>(vertices) > 0.0)) {
    throw InvalidRegion(
        "polygon must have positive signed area (counterclockwise vertices)");
  }
  return Region(Polygon{std::move(vertices)});
}

Region Region::union_of(std::vector<Region> parts) {
  if (parts.empty()) throw InvalidRegion("union needs at least one part");
  return Region(Union{std::move(parts)});
}

bool contains(const Region& region, const Point& p) {
  return std::visit(
      Overloaded{
          [&](const NormalX& r) {
            if (p.x() < r.x_min || p.x() > r.x_max) return false;
            try {
              return r.lower(p.x()) <= p.y() && p.y() <= r.upper(p.x());
            } catch (const DomainError&) {
              return false;
            }
          },
          [&](const NormalY& r) {
            if (p.y() < r.y_min || p.y() > r.y_max) return false;
            try {
              return r.left(p.y()) <= p.x() && p.x() <= r.right(p.y());
            } catch (const DomainError&) {
              return false;
            }
          },
          [&](const PolarSector& r) {
            const double rho = p.norm();
            try {
              if (rho == 0.0) {
                // The origin has every angle; it belongs to the sector when
                // the inner radius reaches zero somewhere.
                for (double t : {r.theta_min, 0.5 * (r.theta_min + r.theta_max),
                                 r.theta_max}) {
                  if (evaluate_nudged(r.rho_min, t, r.theta_min,
                                      r.theta_max) <= 0.0) {
                    return true;
                  }
                }
                return false;
              }
              const double t =
                  normalize_angle(std::atan2(p.y(), p.x()), r.theta_min);
              if (t > r.theta_max) return false;
              return r.rho_min(t) <= rho && rho <= r.rho_max(t);
            } catch (const DomainError&) {
              return false;
            }
          },
          [&](const Polygon& r) { return polygon_contains(r.vertices, p); },
          [&](const Union& r) {
            return std::any_of(r.parts.begin(), r.parts.end(),
                               [&](const Region& part) {
                                 return contains(part, p);
                               });
          },
      },
      region.shape());
}

Box bounding_box(const Region& region) {
  return std::visit(
      Overloaded{
          [](const NormalX& r) {
            return padded(normal_box(r.x_min, r.x_max, r.lower, r.upper, false));
          },
          [](const NormalY& r) {
            return padded(normal_box(r.y_min, r.y_max, r.left, r.right, true));
          },
          [](const PolarSector& r) { return padded(polar_box(r)); },
          [](const Polygon& r) {
            Box box;
            for (const Point& v : r.vertices) box.extend(v);
            return box;
          },
          [](const Union& r) {
            Box box;
            for (const Region& part : r.parts) box.extend(bounding_box(part));
            return box;
          },
      },
      region.shape());
}

std::vector<Point> boundary_samples(const Region& region, int count) {
  std::vector<Point> out;
  append_boundary(region, count, out);
  return out;
}

int axis_side_check(const Region& region, const Axis& axis) {
  bool any_positive = false;
  bool any_negative = false;
  auto record = [&](const Point& p) {
    const double d = signed_distance(axis, p);
    if (d > kSideTolerance) any_positive = true;
    if (d < -kSideTolerance) any_negative = true;
  };

  const Box box = bounding_box(region);
  const Point size = box.sizes();
  for (int i = 0; i < kSideGrid; ++i) {
    for (int j = 0; j < kSideGrid; ++j) {
      const Point p =
          box.min() + Point((i + 0.5) / kSideGrid * size.x(),
                            (j + 0.5) / kSideGrid * size.y());
      if (contains(region, p)) record(p);
    }
  }
  for (const Point& p : boundary_samples(region, 256)) record(p);

  if (any_positive && any_negative) {
    std::ostringstream out;
    out.precision(17);
    out << "axis " << axis.a() << "*x + " << axis.b() << "*y + " << axis.c()
        << " = 0 passes through the region";
    throw AxisIntersectsRegion(out.str());
  }
  return any_negative ? -1 : 1;
}

std::vector<Slab> polygon_slabs(std::span<const Point> vertices, Sweep sweep) {
  const std::size_t n = vertices.size();
  std::vector<double> stops;
  stops.reserve(n);
  for (const Point& v : vertices) stops.push_back(coordinate(v, sweep, true));
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

  std::vector<Slab> out;
  for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
    const double lo = stops[k];
    const double hi = stops[k + 1];
    const double mid = 0.5 * (lo + hi);
    std::vector<EdgeSpan> spans;
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = vertices[i];
      const Point& b = vertices[(i + 1) % n];
      const double ta = coordinate(a, sweep, true);
      const double tb = coordinate(b, sweep, true);
      if (ta == tb) continue;
      if (std::min(ta, tb) > lo || std::max(ta, tb) < hi) continue;
      const double sa = coordinate(a, sweep, false);
      const double sb = coordinate(b, sweep, false);
      auto at = [&](double t) {
        if (t == ta) return sa;
        if (t == tb) return sb;
        return sa + (t - ta) * (sb - sa) / (tb - ta);
      };
      spans.push_back({at(lo), at(hi), at(mid)});
    }
    std::sort(spans.begin(), spans.end(),
              [](const EdgeSpan& l, const EdgeSpan& r) { return l.mid < r.mid; });
    for (std::size_t e = 0; e + 1 < spans.size(); e += 2) {
      auto linear = [lo, hi](double v_lo, double v_hi) {
        return [lo, hi, v_lo, v_hi](double t) {
          return v_lo + (t - lo) / (hi - lo) * (v_hi - v_lo);
        };
      };
      out.push_back({lo, hi, linear(spans[e].at_lo, spans[e].at_hi),
                     linear(spans[e + 1].at_lo, spans[e + 1].at_hi)});
    }
  }
  return out;
}

std::optional<std::vector<Slab>> slabs(const Region& region, Sweep sweep) {
  using Result = std::optional<std::vector<Slab>>;
  auto curve_fn = [](const Curve& c) {
    return std::function<double(double)>([c](double t) { return c(t); });
  };
  return std::visit(
      Overloaded{
          [&](const NormalX& r) -> Result {
            if (sweep != Sweep::AlongX) return std::nullopt;
            return std::vector<Slab>{
                {r.x_min, r.x_max, curve_fn(r.lower), curve_fn(r.upper)}};
          },
          [&](const NormalY& r) -> Result {
            if (sweep != Sweep::AlongY) return std::nullopt;
            return std::vector<Slab>{
                {r.y_min, r.y_max, curve_fn(r.left), curve_fn(r.right)}};
          },
          [](const PolarSector&) -> Result { return std::nullopt; },
          [&](const Polygon& r) -> Result {
            return polygon_slabs(r.vertices, sweep);
          },
          [&](const Union& r) -> Result {
            std::vector<Slab> all;
            for (const Region& part : r.parts) {
              auto sub = slabs(part, sweep);
              if (!sub) return std::nullopt;
              for (auto& s : *sub) all.push_back(std::move(s));
            }
            return all;
          },
      },
      region.shape());
}

}  // namespace revolve
