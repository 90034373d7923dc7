// Copyright 2026 The Symmetra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "symmetra/permutation.hpp"
#include "test_support.hpp"

namespace symmetra {
namespace {

TEST(PermutationTest, Compose) {
  EXPECT_TRUE(compose(parse_cycles("(1 2)", 2), parse_cycles("(1 2)", 2)).is_identity());
  // P_4 after P_1 on five sites is the unit rotation.
  Permutation p1 = parse_cycles("(2 5)(3 4)", 5);
  Permutation p4 = parse_cycles("(1 2)(3 5)", 5);
  EXPECT_EQ(format_cycles(compose(p4, p1)), "(1 2 3 4 5)");
  EXPECT_EQ(format_cycles(compose(parse_cycles("(1 2)", 3), parse_cycles("(2 3)", 3))),
            "(1 2 3)");
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)), DimensionError);
}

TEST(PermutationTest, Inverse) {
  EXPECT_EQ(format_cycles(inverse(parse_cycles("(1 2 3)", 3))), "(1 3 2)");
  EXPECT_TRUE(inverse(Permutation::identity(4)).is_identity());
  Permutation t = parse_cycles("(2 4)", 5);
  EXPECT_EQ(inverse(t), t);
}

TEST(PermutationTest, ParseCycles) {
  Permutation p = parse_cycles("(1 3)", 3);
  EXPECT_EQ(p(0), 2u);
  EXPECT_EQ(p(1), 1u);
  EXPECT_EQ(p(2), 0u);
  EXPECT_TRUE(parse_cycles("", 4).is_identity());
  EXPECT_TRUE(parse_cycles("()", 4).is_identity());
  Permutation q = parse_cycles(" ( 2 5 ) ( 3   4 ) ", 5);
  EXPECT_EQ(format_cycles(q), "(2 5)(3 4)");
  EXPECT_EQ(q(1), 4u);
  EXPECT_EQ(q(2), 3u);
}

TEST(PermutationTest, ParseCyclesErrors) {
  EXPECT_THROW(parse_cycles("(1 1)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 2)(2 3)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 4)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(0 1)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 2", 3), ParseError);
  EXPECT_THROW(parse_cycles("1 2)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(a b)", 3), ParseError);
}

TEST(PermutationTest, FormatCycles) {
  EXPECT_EQ(format_cycles(Permutation::identity(5)), "()");
  EXPECT_EQ(format_cycles(Permutation({1, 0, 3, 2})), "(1 2)(3 4)");
  EXPECT_EQ(format_cycles(Permutation({2, 0, 1})), "(1 3 2)");
}

TEST(PermutationTest, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0}), InvalidArgument);
  EXPECT_THROW(Permutation({0, 2}), InvalidArgument);
}

TEST(PermutationTest, CycleRoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 10000; ++it) {
    std::size_t n = 1 + it % 12;
    Permutation p = testing::random_permutation(n, rng);
    ASSERT_EQ(parse_cycles(format_cycles(p), n), p);
    ASSERT_TRUE(compose(p, inverse(p)).is_identity());
  }
}

}  // namespace
}  // namespace symmetra
