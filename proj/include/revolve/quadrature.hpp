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

#include <cstdint>
#include <functional>

#include "revolve/geometry.hpp"
#include "revolve/region.hpp"

namespace revolve {

struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-12;
  int max_depth = 50;

  /// Throws std::invalid_argument unless rel > 0, abs > 0 and max_depth > 0.
  void validate() const;

  /// The tolerance handed to inner integrals of an iterated integral.
  Tolerance tightened(double factor = 0.1) const {
    return {rel * factor, abs * factor, max_depth};
  }
};

struct QuadratureResult {
  double value = 0.0;
  /// Absolute error estimate.
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;

  QuadratureResult& operator+=(const QuadratureResult& other) {
    value += other.value;
    error_estimate += other.error_estimate;
    evaluations += other.evaluations;
    return *this;
  }
};

/// Adaptive Gauss-Kronrod (7/15) integration with global bisection of the
/// interval carrying the largest error, until the summed estimate meets
/// max(tol.abs, tol.rel * |value|).
///
/// Throws QuadratureNoConvergence when an interval deeper than tol.max_depth
/// would have to be split, and IntegrandError when `f` raises DomainError
/// inside the interval. Requires lo < hi.
QuadratureResult integrate_1d(const std::function<double(double)>& f,
                              double lo, double hi, const Tolerance& tol = {});

/// Iterated integral of `f` over [lo, hi] x [lower(t), upper(t)]; `f` takes
/// (outer, inner). Inner integrals run at tol.tightened() and their error
/// estimates are integrated along the outer rule and added to the result.
QuadratureResult integrate_iterated(
    const std::function<double(double, double)>& f, double lo, double hi,
    const std::function<double(double)>& lower,
    const std::function<double(double)>& upper, const Tolerance& tol = {});

/// Double integral of `integrand` over the region (the measure dA).
/// NormalX and polygons integrate y inside x, NormalY x inside y, polar
/// sectors rho (with Jacobian rho) inside theta; unions sum their parts.
QuadratureResult integrate_region(const Region& region,
                                  const std::function<double(const Point&)>& integrand,
                                  const Tolerance& tol = {});

}  // namespace revolve
