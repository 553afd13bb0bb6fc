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

#include "revolve/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "revolve/errors.hpp"

namespace revolve {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half, descending) and
// weights, with the embedded 7-point Gauss weights. Gauss nodes are the odd
// entries of kNodes plus the centre.
constexpr std::array<double, 8> kNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRoundoffFactor = 50.0 * kEps;

// One integrand evaluation. `error` and `evaluations` carry the cost and
// accuracy of an inner integral when the integrand is itself a quadrature.
struct Sample {
  double value = 0.0;
  double error = 0.0;
  std::int64_t evaluations = 1;
};

struct Interval {
  double a;
  double b;
  double value;
  double error;
  double inner_error;
  double roundoff_floor;
  std::int64_t evaluations;
  int depth;
};

template <typename F>
Interval kronrod15(F& f, double a, double b, int depth) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  std::array<double, 7> lower{};
  std::array<double, 7> upper{};
  std::int64_t evaluations = 0;
  double inner_error = 0.0;

  const Sample fc = f(centre);
  evaluations += fc.evaluations;
  double gauss = fc.value * kGaussWeights[3];
  double kronrod = fc.value * kKronrodWeights[7];
  double resabs = std::abs(kronrod);
  inner_error += kKronrodWeights[7] * std::abs(fc.error);

  for (std::size_t j = 0; j < 7; ++j) {
    const double offset = half * kNodes[j];
    const Sample s1 = f(centre - offset);
    const Sample s2 = f(centre + offset);
    evaluations += s1.evaluations + s2.evaluations;
    lower[j] = s1.value;
    upper[j] = s2.value;
    kronrod += kKronrodWeights[j] * (s1.value + s2.value);
    resabs += kKronrodWeights[j] * (std::abs(s1.value) + std::abs(s2.value));
    inner_error +=
        kKronrodWeights[j] * (std::abs(s1.error) + std::abs(s2.error));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (s1.value + s2.value);
  }

  const double mean = 0.5 * kronrod;
  double resasc = kKronrodWeights[7] * std::abs(fc.value - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    resasc += kKronrodWeights[j] *
              (std::abs(lower[j] - mean) + std::abs(upper[j] - mean));
  }

  resabs *= abs_half;
  resasc *= abs_half;
  double error = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  const double floor = kRoundoffFactor * resabs;
  error = std::max(error, floor);

  return {a, b, kronrod * half, error, inner_error * abs_half, floor,
          evaluations, depth};
}

bool worse(const Interval& l, const Interval& r) { return l.error < r.error; }

// Wraps an integrand so that a DomainError next to the outer endpoints is
// retried once slightly inward and any other DomainError becomes an
// IntegrandError.
template <typename F>
auto guarded(F& f, double lo, double hi) {
  return [&f, lo, hi](double x) -> Sample {
    try {
      return f(x);
    } catch (const DomainError& first) {
      const double width = hi - lo;
      const double near = 1e-6 * width;
      double retry = x;
      if (x - lo <= near) {
        retry = x + 1e-12 * width;
      } else if (hi - x <= near) {
        retry = x - 1e-12 * width;
      } else {
        std::ostringstream out;
        out.precision(17);
        out << "integrand undefined at " << x << ": " << first.what();
        throw IntegrandError(out.str());
      }
      try {
        return f(retry);
      } catch (const DomainError& second) {
        std::ostringstream out;
        out.precision(17);
        out << "integrand undefined near endpoint " << x << ": "
            << second.what();
        throw IntegrandError(out.str());
      }
    }
  };
}

template <typename F>
QuadratureResult adaptive(F&& raw, double lo, double hi, const Tolerance& tol) {
  tol.validate();
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("integration bounds must be finite with lo < hi");
  }
  auto f = guarded(raw, lo, hi);

  std::vector<Interval> active;  // max-heap on error
  std::vector<Interval> settled;
  active.push_back(kronrod15(f, lo, hi, 0));
  double total_value = active.front().value;
  double total_error = active.front().error;
  std::int64_t evaluations = active.front().evaluations;

  for (;;) {
    const double target = std::max(tol.abs, tol.rel * std::abs(total_value));
    if (total_error <= target || active.empty()) break;

    std::pop_heap(active.begin(), active.end(), worse);
    const Interval worst = active.back();
    active.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    // Splitting cannot help once the estimate sits on the roundoff floor or
    // the interval can no longer be bisected in floating point.
    if (worst.error <= worst.roundoff_floor || mid <= worst.a ||
        mid >= worst.b) {
      settled.push_back(worst);
      continue;
    }
    if (worst.depth >= tol.max_depth) {
      std::ostringstream out;
      out.precision(6);
      out << "no convergence on [" << lo << ", " << hi << "]: error "
          << total_error << " exceeds " << target << " at depth "
          << tol.max_depth;
      throw QuadratureNoConvergence(out.str());
    }
    const Interval left = kronrod15(f, worst.a, mid, worst.depth + 1);
    const Interval right = kronrod15(f, mid, worst.b, worst.depth + 1);
    evaluations += left.evaluations + right.evaluations;
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    for (const Interval& child : {left, right}) {
      active.push_back(child);
      std::push_heap(active.begin(), active.end(), worse);
    }
  }

  // Final sums in a fixed left-to-right order.
  settled.insert(settled.end(), active.begin(), active.end());
  std::sort(settled.begin(), settled.end(),
            [](const Interval& l, const Interval& r) { return l.a < r.a; });
  QuadratureResult result;
  for (const Interval& piece : settled) {
    result.value += piece.value;
    result.error_estimate += piece.error + piece.inner_error;
  }
  result.evaluations = evaluations;
  return result;
}

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

}  // namespace

void Tolerance::validate() const {
  if (!(rel > 0.0) || !(abs > 0.0) || max_depth <= 0) {
    throw std::invalid_argument(
        "tolerance needs rel > 0, abs > 0 and max_depth > 0");
  }
}

QuadratureResult integrate_1d(const std::function<double(double)>& f,
                              double lo, double hi, const Tolerance& tol) {
  auto sample = [&f](double x) { return Sample{f(x), 0.0, 1}; };
  return adaptive(sample, lo, hi, tol);
}

QuadratureResult integrate_iterated(
    const std::function<double(double, double)>& f, double lo, double hi,
    const std::function<double(double)>& lower,
    const std::function<double(double)>& upper, const Tolerance& tol) {
  const Tolerance inner_tol = tol.tightened();
  auto outer = [&](double t) -> Sample {
    const double s_lo = lower(t);
    const double s_hi = upper(t);
    if (s_lo == s_hi) return {0.0, 0.0, 2};
    // Curves that cross between probe points give a reversed strip; its
    // contribution is kept with its sign.
    const double sign = s_lo < s_hi ? 1.0 : -1.0;
    const QuadratureResult inner = integrate_1d(
        [&f, t](double s) { return f(t, s); }, std::min(s_lo, s_hi),
        std::max(s_lo, s_hi), inner_tol);
    return {sign * inner.value, inner.error_estimate, inner.evaluations + 2};
  };
  return adaptive(outer, lo, hi, tol);
}

QuadratureResult integrate_region(
    const Region& region, const std::function<double(const Point&)>& integrand,
    const Tolerance& tol) {
  auto over_slabs = [&](const std::vector<Slab>& pieces, Sweep sweep) {
    QuadratureResult total;
    for (const Slab& slab : pieces) {
      if (!(slab.lo < slab.hi)) continue;
      if (sweep == Sweep::AlongX) {
        total += integrate_iterated(
            [&](double x, double y) { return integrand(Point(x, y)); },
            slab.lo, slab.hi, slab.lower, slab.upper, tol);
      } else {
        total += integrate_iterated(
            [&](double y, double x) { return integrand(Point(x, y)); },
            slab.lo, slab.hi, slab.lower, slab.upper, tol);
      }
    }
    return total;
  };

  return std::visit(
      Overloaded{
          [&](const NormalX&) {
            return over_slabs(*slabs(region, Sweep::AlongX), Sweep::AlongX);
          },
          [&](const NormalY&) {
            return over_slabs(*slabs(region, Sweep::AlongY), Sweep::AlongY);
          },
          [&](const Polygon&) {
            return over_slabs(*slabs(region, Sweep::AlongX), Sweep::AlongX);
          },
          [&](const PolarSector& s) {
            return integrate_iterated(
                [&](double theta, double rho) {
                  return integrand(
                             Point(rho * std::cos(theta), rho * std::sin(theta))) *
                         rho;
                },
                s.theta_min, s.theta_max,
                [&s](double theta) { return s.rho_min(theta); },
                [&s](double theta) { return s.rho_max(theta); }, tol);
          },
          [&](const Union& u) {
            QuadratureResult total;
            for (const Region& part : u.parts) {
              total += integrate_region(part, integrand, tol);
            }
            return total;
          },
      },
      region.shape());
}

}  // namespace revolve
