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
#include <string_view>

namespace revolve::test {

struct PrecedenceCase {
  std::string_view text;
  double x;
  double expected;
};

// Every expected value is exactly representable and follows from the grammar
// by hand evaluation.
inline constexpr PrecedenceCase kPrecedenceCases[] = {
    {"2+3*4^2", 0.0, 50.0},
    {"-2^2", 0.0, -4.0},
    {"2^3^2", 0.0, 512.0},
    {"(2^3)^2", 0.0, 64.0},
    {"(-2)^2", 0.0, 4.0},
    {"-(2)^2", 0.0, -4.0},
    {"2^-1", 0.0, 0.5},
    {"-2^-2", 0.0, -0.25},
    {"2*3+4", 0.0, 10.0},
    {"2+3*4", 0.0, 14.0},
    {"(2+3)*4", 0.0, 20.0},
    {"10-4-3", 0.0, 3.0},
    {"100/10/5", 0.0, 2.0},
    {"2*3/4", 0.0, 1.5},
    {"-3--2", 0.0, -1.0},
    {"--2", 0.0, 2.0},
    {"1+2*3^2-4/2", 0.0, 17.0},
    {"2^3*2", 0.0, 16.0},
    {"abs(-3)*2", 0.0, 6.0},
    {"sqrt(16)+1", 0.0, 5.0},
    {"e^0", 0.0, 1.0},
    {"2*pi/pi", 0.0, 2.0},
    {" 1 +\t2 ", 0.0, 3.0},
    {"1.5e1+0.5", 0.0, 15.5},
    {"-x^2", 3.0, -9.0},
    {"x^2", 3.0, 9.0},
    {"2*x^3-x", 2.0, 14.0},
    {"x/2/2", 8.0, 2.0},
    {"-x*-x", 4.0, 16.0},
};

struct MalformedCase {
  std::string_view text;
  std::size_t position;
};

inline constexpr MalformedCase kMalformedCases[] = {
    {"x+", 2},     {"", 0},        {"2x", 1},     {"(1+2", 4},
    {"1+*2", 2},   {"sqrt 2", 5},  {"3 4", 2},    {")", 0},
    {"2^", 2},     {"x y", 2},     {"1 + #", 4},  {"sin()", 4},
    {".", 0},      {"(", 1},       {"2*(x", 4},   {"1,5", 1},
};

}  // namespace revolve::test
