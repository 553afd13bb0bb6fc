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

#include <cmath>
#include <numbers>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "revolve/errors.hpp"

namespace revolve {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using Point = Point2<double>;

/// The line a*x + b*y + c = 0, stored with a^2 + b^2 = 1 and the first
/// nonzero of (a, b) positive. With that normalization two axes describing the
/// same line compare equal and signed_distance() needs no division.
template <typename Scalar>
class AxisT {
 public:
  using Vector = Point2<Scalar>;

  static AxisT from_coefficients(Scalar a, Scalar b, Scalar c) {
    using std::hypot;
    using std::isfinite;
    if (!isfinite(a) || !isfinite(b) || !isfinite(c)) {
      throw InvalidAxis("axis coefficients must be finite");
    }
    const Scalar norm = hypot(a, b);
    if (norm == Scalar(0)) {
      throw InvalidAxis("axis with a = b = 0 is not a line");
    }
    const Scalar sign = (a > Scalar(0) || (a == Scalar(0) && b > Scalar(0)))
                            ? Scalar(1)
                            : Scalar(-1);
    // Coefficients already normalized up to rounding are kept as given, so
    // normalization is idempotent.
    using std::abs;
    const Scalar scale =
        abs(norm - Scalar(1)) <= Scalar(4) * Eigen::NumTraits<Scalar>::epsilon()
            ? Scalar(1)
            : norm;
    return AxisT(Vector(sign * a / scale, sign * b / scale), sign * c / scale);
  }

  /// The line x = x0.
  static AxisT vertical(Scalar x0) { return AxisT(Vector(1, 0), -x0); }
  /// The line y = y0.
  static AxisT horizontal(Scalar y0) { return AxisT(Vector(0, 1), -y0); }

  /// The line through two distinct points.
  static AxisT through(const Vector& p, const Vector& q) {
    const Vector dir = q - p;
    if (dir.isZero(Scalar(0))) {
      throw InvalidAxis("axis through two coincident points");
    }
    // Normal (dy, -dx); c chosen so that p lies on the line.
    const Scalar a = dir.y();
    const Scalar b = -dir.x();
    return from_coefficients(a, b, -(a * p.x() + b * p.y()));
  }

  Scalar a() const { return normal_.x(); }
  Scalar b() const { return normal_.y(); }
  Scalar c() const { return offset_; }
  const Vector& normal() const { return normal_; }

  bool is_vertical() const { return normal_.y() == Scalar(0); }
  bool is_horizontal() const { return normal_.x() == Scalar(0); }

  /// Abscissa of a vertical axis.
  Scalar x0() const { return -offset_; }
  /// Ordinate of a horizontal axis.
  Scalar y0() const { return -offset_; }

  friend bool operator==(const AxisT& lhs, const AxisT& rhs) {
    return lhs.normal_ == rhs.normal_ && lhs.offset_ == rhs.offset_;
  }

 private:
  AxisT(const Vector& normal, Scalar offset)
      : normal_(normal), offset_(offset) {}

  Vector normal_;
  Scalar offset_;
};

using Axis = AxisT<double>;

/// a*x + b*y + c for the normalized axis. The magnitude is the Euclidean
/// distance to the line; the sign tells which half-plane `p` lies in.
template <typename Scalar>
Scalar signed_distance(const AxisT<Scalar>& axis, const Point2<Scalar>& p) {
  return axis.normal().dot(p) + axis.c();
}

/// p -> R(angle) * p + translation.
template <typename Scalar>
struct RigidMotionT {
  Scalar angle = Scalar(0);
  Point2<Scalar> translation = Point2<Scalar>::Zero();

  static RigidMotionT identity() { return {}; }

  Eigen::Rotation2D<Scalar> rotation() const {
    return Eigen::Rotation2D<Scalar>(angle);
  }

  RigidMotionT inverse() const {
    const Eigen::Rotation2D<Scalar> back(-angle);
    return {-angle, -(back * translation)};
  }

  /// (*this) after `first`.
  RigidMotionT operator*(const RigidMotionT& first) const {
    return {angle + first.angle, rotation() * first.translation + translation};
  }
};

using RigidMotion = RigidMotionT<double>;

template <typename Scalar>
Point2<Scalar> apply_motion(const RigidMotionT<Scalar>& m,
                            const Point2<Scalar>& p) {
  return m.rotation() * p + m.translation;
}

/// Image of the line under the motion, renormalized (which may flip the sign
/// of all three coefficients).
template <typename Scalar>
AxisT<Scalar> apply_motion_axis(const RigidMotionT<Scalar>& m,
                                const AxisT<Scalar>& axis) {
  const Point2<Scalar> normal = m.rotation() * axis.normal();
  return AxisT<Scalar>::from_coefficients(
      normal.x(), normal.y(), axis.c() - normal.dot(m.translation));
}

/// A motion taking `axis` onto the line x = 0 such that the half-plane of
/// positive signed distance lands on x > 0. Signed distances to the axis
/// become plain x-coordinates afterwards.
template <typename Scalar>
RigidMotionT<Scalar> axis_to_vertical_motion(const AxisT<Scalar>& axis) {
  using std::atan2;
  return {-atan2(axis.b(), axis.a()), Point2<Scalar>(axis.c(), Scalar(0))};
}

}  // namespace revolve
