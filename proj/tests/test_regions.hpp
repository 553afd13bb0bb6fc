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

#include <numbers>

#include "revolve/region.hpp"

namespace revolve::test {

inline Region sector() {
  return Region::polar(-std::numbers::pi / 3, std::numbers::pi / 4,
                       parse_expr("0", "theta"), parse_expr("1", "theta"));
}

inline Region sector_union_y() {
  return Region::union_of(
      {Region::normal_y(-std::sqrt(3.0) / 2, 0.0, parse_expr("-y/sqrt(3)", "y"),
                        parse_expr("sqrt(1-y^2)", "y")),
       Region::normal_y(0.0, std::sqrt(2.0) / 2, parse_expr("y", "y"),
                        parse_expr("sqrt(1-y^2)", "y"))});
}

inline Region sector_union_x() {
  return Region::union_of(
      {Region::normal_x(0.0, 0.5, parse_expr("-sqrt(3)*x", "x"),
                        parse_expr("x", "x")),
       Region::normal_x(0.5, std::sqrt(2.0) / 2, parse_expr("-sqrt(1-x^2)", "x"),
                        parse_expr("x", "x")),
       Region::normal_x(std::sqrt(2.0) / 2, 1.0, parse_expr("-sqrt(1-x^2)", "x"),
                        parse_expr("sqrt(1-x^2)", "x"))});
}

/// Unit circle centred at (2, 0).
inline Region torus_circle() {
  return Region::normal_x(1.0, 3.0, parse_expr("-sqrt(1-(x-2)^2)", "x"),
                          parse_expr("sqrt(1-(x-2)^2)", "x"));
}

inline Region unit_disk() {
  return Region::normal_x(-1.0, 1.0, parse_expr("-sqrt(1-x^2)", "x"),
                          parse_expr("sqrt(1-x^2)", "x"));
}

inline Region square_1_2() {
  return Region::polygon({Point(1, 0), Point(2, 0), Point(2, 1), Point(1, 1)});
}

}  // namespace revolve::test
