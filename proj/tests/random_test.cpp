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

#include "revolve/random.hpp"

#include <cstdint>

#include <gtest/gtest.h>

namespace revolve {
namespace {

// Reference outputs of the sequential SplitMix64 generator.
TEST(CounterRng, MatchesSequentialSplitMix64) {
  const CounterRng zero(0);
  EXPECT_EQ(zero(0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(zero(1), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(zero(2), 0x06C45D188009454FULL);

  const CounterRng r(1234567);
  EXPECT_EQ(r(0), 6457827717110365317ULL);
  EXPECT_EQ(r(1), 3203168211198807973ULL);
  EXPECT_EQ(r(2), 9817491932198370423ULL);
  EXPECT_EQ(r(3), 4593380528125082431ULL);
  EXPECT_EQ(r(4), 16408922859458223821ULL);
}

TEST(CounterRng, SequentialStateWalk) {
  // Sequential form: state += gamma; output mix(state).
  std::uint64_t state = 42;
  const CounterRng r(42);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    state += CounterRng::kGoldenGamma;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    ASSERT_EQ(r(i), z ^ (z >> 31));
  }
}

TEST(CounterRng, UniformRange) {
  const CounterRng r(9);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = r.uniform(i);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
  EXPECT_EQ(CounterRng(0).uniform(0),
            static_cast<double>(0xE220A8397B1DCDAFULL >> 11) / 9007199254740992.0);
}

}  // namespace
}  // namespace revolve
