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

#include <cstddef>
#include <span>

#include "revolve/geometry.hpp"

namespace revolve {

/// Signed shoelace area; positive for counterclockwise vertex order.
/// Coordinates are taken relative to the first vertex, which keeps the cross
/// products small for polygons far from the origin.
template <typename Scalar>
Scalar polygon_signed_area(std::span<const Point2<Scalar>> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) return Scalar(0);
  const Point2<Scalar> origin = vertices[0];
  Scalar twice_area(0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Point2<Scalar> p = vertices[i] - origin;
    const Point2<Scalar> q = vertices[i + 1] - origin;
    twice_area += p.x() * q.y() - q.x() * p.y();
  }
  return twice_area / Scalar(2);
}

/// Area centroid of a simple polygon with nonzero area.
template <typename Scalar>
Point2<Scalar> polygon_centroid(std::span<const Point2<Scalar>> vertices) {
  const std::size_t n = vertices.size();
  const Point2<Scalar> origin = vertices[0];
  Scalar twice_area(0);
  Point2<Scalar> weighted = Point2<Scalar>::Zero();
  // Fan of triangles (origin, v[i], v[i+1]); each contributes its signed
  // area times its own centroid.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Point2<Scalar> p = vertices[i] - origin;
    const Point2<Scalar> q = vertices[i + 1] - origin;
    const Scalar cross = p.x() * q.y() - q.x() * p.y();
    twice_area += cross;
    weighted += cross * (p + q);
  }
  return origin + weighted / (Scalar(3) * twice_area);
}

}  // namespace revolve
