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

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Geometry>

#include "revolve/expr.hpp"
#include "revolve/geometry.hpp"

namespace revolve {

/// A boundary curve: an expression in the parameter of its parent region
/// (x for NormalX, y for NormalY, theta for PolarSector).
using Curve = Expr;

using Box = Eigen::AlignedBox2d;

class Region;

/// { (x, y) : x_min <= x <= x_max, lower(x) <= y <= upper(x) }
struct NormalX {
  double x_min;
  double x_max;
  Curve lower;
  Curve upper;
};

/// { (x, y) : y_min <= y <= y_max, left(y) <= x <= right(y) }
struct NormalY {
  double y_min;
  double y_max;
  Curve left;
  Curve right;
};

/// { (rho cos t, rho sin t) : theta_min <= t <= theta_max,
///   rho_min(t) <= rho <= rho_max(t) }
struct PolarSector {
  double theta_min;
  double theta_max;
  Curve rho_min;
  Curve rho_max;
};

/// Simple polygon, vertices counterclockwise.
struct Polygon {
  std::vector<Point> vertices;
};

/// Interior-disjoint parts. Disjointness is the caller's contract and is not
/// checked.
struct Union {
  std::vector<Region> parts;
};

struct ProbeOptions {
  /// Interior probe points used to validate curve-bounded regions.
  int interior_points = 33;
};

/// A closed plane region in one of the supported forms. Instances are only
/// obtainable through the validating factories and are immutable afterwards.
class Region {
 public:
  using Variant = std::variant<NormalX, NormalY, PolarSector, Polygon, Union>;

  static Region normal_x(double x_min, double x_max, Curve lower, Curve upper,
                         ProbeOptions probes = {});
  static Region normal_y(double y_min, double y_max, Curve left, Curve right,
                         ProbeOptions probes = {});
  static Region polar(double theta_min, double theta_max, Curve rho_min,
                      Curve rho_max, ProbeOptions probes = {});
  static Region polygon(std::vector<Point> vertices);
  static Region union_of(std::vector<Region> parts);

  const Variant& shape() const { return shape_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&shape_);
  }

 private:
  explicit Region(Variant shape) : shape_(std::move(shape)) {}
  Variant shape_;
};

/// Evaluates a curve at `t`. A DomainError exactly at `lo` or `hi` is retried
/// once at a point moved inward by 1e-12 of the interval width.
double evaluate_nudged(const Curve& curve, double t, double lo, double hi);

/// Closed-set membership; a DomainError while evaluating a curve counts as
/// "outside".
bool contains(const Region& region, const Point& p);

/// Conservative axis-aligned box. Exact for polygons; curve-bounded regions
/// are probed at 1025 parameter values and padded by 1e-9 relative.
Box bounding_box(const Region& region);

/// Points on the region boundary, roughly `count` per part.
std::vector<Point> boundary_samples(const Region& region, int count = 256);

/// Which side of `axis` the region lies on: +1 when every sample has signed
/// distance >= -1e-9, -1 when every sample is <= 1e-9. Touching the axis is
/// allowed. Throws AxisIntersectsRegion when samples fall strictly on both
/// sides.
int axis_side_check(const Region& region, const Axis& axis);

/// A strip between two graphs over [lo, hi] of the sweep parameter t:
/// { lower(t) <= s <= upper(t) }, where (t, s) is (x, y) for an x-sweep and
/// (y, x) for a y-sweep.
struct Slab {
  double lo;
  double hi;
  std::function<double(double)> lower;
  std::function<double(double)> upper;
};

enum class Sweep { AlongX, AlongY };

/// Decomposes the region into slabs over the given sweep direction, or
/// returns nullopt when some part is not a normal domain in that direction.
/// Polygons are split into trapezoids between consecutive vertex abscissas
/// (ordinates for AlongY).
std::optional<std::vector<Slab>> slabs(const Region& region, Sweep sweep);

/// Trapezoidal decomposition of a simple polygon.
std::vector<Slab> polygon_slabs(std::span<const Point> vertices, Sweep sweep);

}  // namespace revolve
