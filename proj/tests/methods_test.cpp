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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_regions.hpp"
#include "revolve/errors.hpp"
#include "test_regions.hpp"

namespace revolve {
namespace {

constexpr double kPi = std::numbers::pi;
const Axis kOy = Axis::vertical(0.0);

double summed(const VolumeReport& a, const VolumeReport& b) {
  return 10.0 * (a.error_estimate + b.error_estimate);
}

TEST(DoubleIntegral, Examples) {
  EXPECT_NEAR(volume_double_integral(test::sector(), kOy).value,
              test::sector_volume(), 1e-8);
  EXPECT_NEAR(volume_double_integral(test::square_1_2(), kOy).value, 3 * kPi,
              1e-9);
  const Region flat = Region::normal_x(0.0, 1.0, parse_expr("x^2", "x"),
                                       parse_expr("x^2", "x"));
  EXPECT_NEAR(volume_double_integral(flat, kOy).value, 0.0, 1e-12);
}

TEST(DoubleIntegral, OppositeSideIsPositive) {
  // Square to the left of x = 3 mirrors the square (1,2)x(0,1) about x = 0.
  const VolumeReport v = volume_double_integral(test::square_1_2(),
                                                Axis::vertical(3.0));
  EXPECT_NEAR(v.value, 3 * kPi, 1e-9);
  EXPECT_EQ(v.method, Method::DoubleIntegral);
  EXPECT_GE(v.error_estimate, 0.0);
}

TEST(Shell, Examples) {
  const Region cone = Region::normal_x(0.0, 1.0, parse_expr("0", "x"),
                                       parse_expr("1-x", "x"));
  EXPECT_NEAR(volume_shell(cone, kOy).value, test::cone_volume(1, 1), 1e-10);
  EXPECT_NEAR(volume_shell(test::torus_circle(), kOy).value,
              test::torus_volume(2, 1), 1e-7);
  EXPECT_NEAR(volume_shell(test::square_1_2(), kOy).value, 3 * kPi, 1e-10);
  EXPECT_NEAR(volume_shell(test::sector_union_x(), kOy).value,
              test::sector_volume(), 1e-8);
}

TEST(Shell, HorizontalAxisUsesNormalY) {
  // Rectangle y in [1, 2], x in [0, 1] about y = 0: shells of radius y.
  const Region r = Region::normal_y(1.0, 2.0, parse_expr("0", "y"),
                                    parse_expr("1", "y"));
  EXPECT_NEAR(volume_shell(r, Axis::horizontal(0.0)).value, 3 * kPi, 1e-10);
  EXPECT_THROW(volume_shell(r, kOy), UnsupportedMethod);
}

TEST(Shell, RejectsShapeMismatch) {
  EXPECT_THROW(volume_shell(test::sector(), kOy), UnsupportedMethod);
  EXPECT_THROW(volume_shell(test::sector_union_y(), kOy), UnsupportedMethod);
  EXPECT_THROW(volume_shell(test::square_1_2(),
                            Axis::from_coefficients(1, 1, 5)),
               UnsupportedMethod);
}

TEST(Disk, Examples) {
  EXPECT_NEAR(volume_disk(test::sector_union_y(), kOy).value,
              test::sector_volume(), 1e-8);
  const Region cylinder = Region::normal_y(0.0, 1.0, parse_expr("0", "y"),
                                           parse_expr("1", "y"));
  EXPECT_NEAR(volume_disk(cylinder, kOy).value, kPi, 1e-10);
  const Region half_disk = Region::normal_y(-1.0, 1.0, parse_expr("0", "y"),
                                            parse_expr("sqrt(1-y^2)", "y"));
  EXPECT_NEAR(volume_disk(half_disk, kOy).value, test::sphere_volume(1), 1e-8);
  EXPECT_NEAR(volume_disk(test::square_1_2(), kOy).value, 3 * kPi, 1e-10);
}

TEST(Disk, WashersOnTheNegativeSide) {
  // Square (-2,-1)x(0,1) about x = 0 is the mirror of (1,2)x(0,1).
  const Region r = Region::normal_y(0.0, 1.0, parse_expr("-2", "y"),
                                    parse_expr("-1", "y"));
  EXPECT_NEAR(volume_disk(r, kOy).value, 3 * kPi, 1e-10);
  EXPECT_NEAR(volume_double_integral(r, kOy).value, 3 * kPi, 1e-10);
}

TEST(Disk, HorizontalAxisUsesNormalX) {
  // Area under y = 1 - x^2 on [-1, 1] about the x-axis:
  // pi * integral (1 - x^2)^2 dx = 16 pi / 15.
  const Region r = Region::normal_x(-1.0, 1.0, parse_expr("0", "x"),
                                    parse_expr("1-x^2", "x"));
  EXPECT_NEAR(volume_disk(r, Axis::horizontal(0.0)).value, 16 * kPi / 15,
              1e-10);
  EXPECT_THROW(volume_disk(test::sector(), kOy), UnsupportedMethod);
}

TEST(Polar, Examples) {
  EXPECT_NEAR(volume_polar(test::sector(), kOy).value, test::sector_volume(),
              1e-9);
  const Region half_annulus = Region::polar(0.0, kPi, parse_expr("1", "theta"),
                                            parse_expr("2", "theta"));
  // 2 pi * (7/3) * 2.
  EXPECT_NEAR(volume_polar(half_annulus, Axis::horizontal(0.0)).value,
              28 * kPi / 3, 1e-8);
  EXPECT_THROW(volume_polar(test::square_1_2(), kOy), UnsupportedMethod);
}

TEST(Polar, ObliqueAxis) {
  const Region half_annulus = Region::polar(0.0, kPi, parse_expr("1", "theta"),
                                            parse_expr("2", "theta"));
  const Axis oblique = Axis::from_coefficients(1, -2, -5);
  const auto polar = volume_polar(half_annulus, oblique);
  const auto pappus = volume_pappus(half_annulus, oblique);
  EXPECT_LE(std::abs(polar.value - pappus.value), summed(polar, pappus));
}

TEST(Centroid, Examples) {
  const Region unit = Region::polygon(
      {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
  EXPECT_EQ(area(unit), 1.0);
  EXPECT_EQ(centroid(unit).centroid, Point(0.5, 0.5));

  const CentroidReport circle = centroid(test::torus_circle());
  EXPECT_NEAR(circle.area, kPi, 1e-9);
  EXPECT_NEAR(circle.centroid.x(), 2.0, 1e-9);
  EXPECT_NEAR(circle.centroid.y(), 0.0, 1e-9);

  const CentroidReport tri =
      centroid(Region::polygon({Point(0, 0), Point(1, 0), Point(0, 1)}));
  EXPECT_DOUBLE_EQ(tri.centroid.x(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(tri.centroid.y(), 1.0 / 3.0);
  EXPECT_EQ(tri.area, 0.5);
}

TEST(Centroid, SectorSatisfiesPappusIdentity) {
  const CentroidReport c = centroid(test::sector());
  // Sector of angle 7 pi / 12 and radius 1.
  EXPECT_NEAR(c.area, 7 * kPi / 24, 1e-12);
  EXPECT_NEAR(2 * kPi * c.centroid.x() * c.area, test::sector_volume(), 1e-9);
}

TEST(Centroid, ZeroAreaRejected) {
  const Region flat = Region::normal_x(0.0, 1.0, parse_expr("x", "x"),
                                       parse_expr("x", "x"));
  EXPECT_THROW(centroid(flat), InvalidRegion);
}

TEST(Pappus, Examples) {
  EXPECT_NEAR(volume_pappus(test::torus_circle(), kOy).value,
              test::torus_volume(2, 1), 1e-7);
  EXPECT_EQ(volume_pappus(test::square_1_2(), kOy).value, 3 * kPi);
  EXPECT_THROW(volume_pappus(test::unit_disk(), kOy), AxisIntersectsRegion);
}

TEST(Pappus, ScalingLawIsCubic) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const auto vertices = test::random_convex_polygon(rng);
    const Axis axis = test::random_exterior_axis(rng, vertices);
    const double base = volume_pappus(Region::polygon(vertices), axis).value;
    for (double k : {0.5, 2.0, 4.0}) {
      std::vector<Point> scaled;
      for (const Point& v : vertices) scaled.push_back(k * v);
      const Axis scaled_axis =
          Axis::from_coefficients(axis.a(), axis.b(), k * axis.c());
      // Powers of two scale without rounding.
      EXPECT_EQ(volume_pappus(Region::polygon(scaled), scaled_axis).value,
                k * k * k * base);
    }
    const double k = 1.7;
    std::vector<Point> scaled;
    for (const Point& v : vertices) scaled.push_back(k * v);
    EXPECT_NEAR(volume_pappus(Region::polygon(scaled),
                              Axis::from_coefficients(axis.a(), axis.b(),
                                                      k * axis.c()))
                    .value,
                k * k * k * base, 1e-12 * k * k * k * base);
  }
}

TEST(MonteCarlo, SquareWithinFourSigma) {
  const VolumeReport mc =
      volume_monte_carlo(test::square_1_2(), kOy, {1'000'000, 99});
  EXPECT_LE(std::abs(mc.value - 3 * kPi), 4 * mc.error_estimate);
  EXPECT_GT(mc.error_estimate, 0.0);
  EXPECT_EQ(mc.evaluations, 1'000'000);
}

TEST(MonteCarlo, Deterministic) {
  const McConfig cfg{20'000, 5};
  const VolumeReport a = volume_monte_carlo(test::sector(), kOy, cfg);
  const VolumeReport b = volume_monte_carlo(test::sector(), kOy, cfg);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.error_estimate, b.error_estimate);
  const VolumeReport c = volume_monte_carlo(test::sector(), kOy, {20'000, 6});
  EXPECT_NE(a.value, c.value);
}

TEST(MonteCarlo, RejectsTooFewSamples) {
  EXPECT_THROW(volume_monte_carlo(test::sector(), kOy, {99, 0}),
               std::invalid_argument);
}

TEST(MonteCarlo, ConsistentOverSeeds) {
  const Region region = test::torus_circle();
  const VolumeReport exact = volume_double_integral(region, kOy);
  int within = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const VolumeReport mc = volume_monte_carlo(region, kOy, {100'000, seed});
    if (std::abs(mc.value - exact.value) <= 4 * mc.error_estimate) ++within;
  }
  EXPECT_GE(within, 28);
}

TEST(Methods, StraddlingAxisRejectedByEveryMethod) {
  for (Method m : kAllMethods) {
    SCOPED_TRACE(std::string(to_string(m)));
    EXPECT_THROW(compute_volume(m, test::unit_disk(), kOy, {}, {1000, 0}),
                 AxisIntersectsRegion);
  }
}

TEST(Methods, NamesRoundTrip) {
  for (Method m : kAllMethods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_FALSE(parse_method("washer").has_value());
}

TEST(Compare, UnitSquare) {
  const Comparison c = compare_methods(test::square_1_2(), kOy, {}, {200'000, 1});
  int reports = 0;
  for (const auto& outcome : c.outcomes) {
    if (!outcome.report) {
      EXPECT_EQ(outcome.method, Method::Polar);
      EXPECT_EQ(outcome.error_kind, "UnsupportedMethod");
      continue;
    }
    ++reports;
  }
  EXPECT_EQ(reports, 5);
  EXPECT_EQ(c.verdict, Verdict::Agree);
}

TEST(Compare, StraddleHasNoData) {
  const Comparison c = compare_methods(test::unit_disk(), kOy, {}, {1000, 1});
  for (const auto& outcome : c.outcomes) {
    EXPECT_FALSE(outcome.report.has_value());
    EXPECT_EQ(outcome.error_kind, "AxisIntersectsRegion");
  }
  EXPECT_EQ(c.verdict, Verdict::NoData);
}

TEST(Compare, SectorAcrossRepresentations) {
  const McConfig cfg{200'000, 3};
  std::vector<VolumeReport> all;
  for (const Region& r :
       {test::sector(), test::sector_union_y(), test::sector_union_x()}) {
    const Comparison c = compare_methods(r, kOy, {}, cfg);
    EXPECT_EQ(c.verdict, Verdict::Agree);
    for (const auto& outcome : c.outcomes) {
      if (outcome.report) all.push_back(*outcome.report);
    }
  }
  EXPECT_EQ(assess_agreement(all), Verdict::Agree);
}

TEST(Compare, CorruptedReportDisagrees) {
  const Comparison c = compare_methods(test::square_1_2(), kOy, {}, {10'000, 1});
  std::vector<VolumeReport> reports;
  for (const auto& outcome : c.outcomes) {
    if (outcome.report) reports.push_back(*outcome.report);
  }
  ASSERT_EQ(assess_agreement(reports), Verdict::Agree);
  for (auto& r : reports) {
    if (r.method == Method::Shell) r.value *= 1.01;
  }
  EXPECT_EQ(assess_agreement(reports), Verdict::Disagree);
  EXPECT_EQ(assess_agreement({}), Verdict::NoData);
  EXPECT_EQ(assess_agreement({reports.front()}), Verdict::Agree);
}

// The classical routes are two Fubini orders of the same double integral.
TEST(MethodProperty, ShellMatchesDoubleIntegral) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const auto c = test::random_normal_case(rng, "x");
    SCOPED_TRACE(c.below + " | " + c.above);
    const Region r = Region::normal_x(c.lo, c.hi, parse_expr(c.below, "x"),
                                      parse_expr(c.above, "x"));
    const Axis axis = Axis::vertical(c.axis_at);
    const auto shell = volume_shell(r, axis);
    const auto dbl = volume_double_integral(r, axis);
    EXPECT_LE(std::abs(shell.value - dbl.value), summed(shell, dbl));
  }
}

TEST(MethodProperty, DiskMatchesDoubleIntegral) {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 100; ++i) {
    const auto c = test::random_normal_case(rng, "y");
    // The axis is vertical, so the curves must stay on one side: shift the
    // strip to the right of x = 0 and put the axis at a random x <= 0.
    const Region r = Region::normal_y(c.lo, c.hi,
                                      parse_expr("5+" + c.below, "y"),
                                      parse_expr("5+" + c.above, "y"));
    const Axis axis = Axis::vertical(-std::abs(c.axis_at));
    const auto disk = volume_disk(r, axis);
    const auto dbl = volume_double_integral(r, axis);
    EXPECT_LE(std::abs(disk.value - dbl.value), summed(disk, dbl));
  }
}

TEST(MethodProperty, PappusMatchesDoubleIntegralForObliqueAxes) {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 100; ++i) {
    const auto vertices = test::random_convex_polygon(rng);
    const Axis axis = test::random_exterior_axis(rng, vertices);
    const Region r = Region::polygon(vertices);
    const auto pappus = volume_pappus(r, axis);
    const auto dbl = volume_double_integral(r, axis);
    EXPECT_LE(std::abs(pappus.value - dbl.value), summed(pappus, dbl));
  }
}

TEST(MethodProperty, RigidMotionInvariance) {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const auto vertices = test::random_convex_polygon(rng);
    const Axis axis = test::random_exterior_axis(rng, vertices);
    const RigidMotion m{u(rng), Point(u(rng), u(rng))};
    std::vector<Point> moved;
    for (const Point& v : vertices) moved.push_back(apply_motion(m, v));
    const auto before = volume_double_integral(Region::polygon(vertices), axis);
    const auto after = volume_double_integral(Region::polygon(moved),
                                              apply_motion_axis(m, axis));
    EXPECT_LE(std::abs(before.value - after.value), summed(before, after));
  }
}

TEST(MethodProperty, UnionIsAdditive) {
  const auto parts = test::sector_union_x();
  const auto whole = volume_double_integral(parts, kOy);
  double sum = 0.0;
  double err = 0.0;
  for (const Region& part : parts.get_if<Union>()->parts) {
    const auto v = volume_double_integral(part, kOy);
    sum += v.value;
    err += v.error_estimate;
  }
  EXPECT_LE(std::abs(whole.value - sum), err + whole.error_estimate);
}

}  // namespace
}  // namespace revolve
