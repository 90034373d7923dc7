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

#include "symmetra/perm_group.hpp"
#include "test_support.hpp"

namespace symmetra {
namespace {

PermutationGroup group_of(std::size_t n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(parse_cycles(c, n));
  return build_group(n, gens);
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

TEST(PermGroupTest, Orders) {
  EXPECT_EQ(group_of(5, {"(2 5)(3 4)", "(1 2)(3 5)"}).order(), 10);
  EXPECT_EQ(group_of(4, {}).order(), 1);
  EXPECT_EQ(group_of(5, {"(1 2)", "(2 3)", "(3 4)", "(4 5)"}).order(), 120);
  EXPECT_EQ(group_of(12, {"(1 2)", "(1 2 3 4 5 6 7 8 9 10 11 12)"}).order(), factorial(12));
}

TEST(PermGroupTest, LargeSymmetricOrderIsExact) {
  std::vector<Permutation> gens;
  const std::size_t n = 25;
  gens.push_back(parse_cycles("(1 2)", n));
  std::vector<Permutation::Point> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<Permutation::Point>((k + 1) % n);
  gens.emplace_back(img);
  PermutationGroup g = build_group(n, gens);
  EXPECT_EQ(g.order(), factorial(n));
  EXPECT_EQ(g.order().str(), "15511210043330985984000000");
}

TEST(PermGroupTest, Contains) {
  auto d5 = group_of(5, {"(2 5)(3 4)", "(1 2)(3 5)"});
  EXPECT_TRUE(contains(d5, Permutation::identity(5)));
  EXPECT_TRUE(contains(d5, parse_cycles("(1 2 3 4 5)", 5)));
  EXPECT_FALSE(contains(d5, parse_cycles("(1 2)", 5)));
  EXPECT_FALSE(contains(group_of(3, {"(1 2 3)"}), parse_cycles("(1 2)", 3)));
  EXPECT_THROW(contains(d5, Permutation::identity(4)), DimensionError);
}

TEST(PermGroupTest, GroupsEqual) {
  EXPECT_TRUE(groups_equal(group_of(3, {"(1 2)"}), group_of(3, {"(1 2)"})));
  EXPECT_TRUE(groups_equal(group_of(5, {"(2 5)(3 4)", "(1 2)(3 5)"}),
                           group_of(5, {"(1 2 3 4 5)", "(2 5)(3 4)"})));
  EXPECT_FALSE(groups_equal(group_of(3, {"(1 2)"}), group_of(3, {"(1 3)"})));
}

TEST(PermGroupTest, Orbits) {
  EXPECT_EQ(format_orbits(group_of(3, {}).orbits()), "{1},{2},{3}");
  EXPECT_EQ(format_orbits(group_of(5, {"(2 5)(3 4)", "(1 2)(3 5)"}).orbits()), "{1,2,3,4,5}");
  EXPECT_EQ(format_orbits(group_of(3, {"(1 2)"}).orbits()), "{1,2},{3}");
}

TEST(PermGroupTest, RejectsMixedDegrees) {
  std::vector<Permutation> gens{Permutation::identity(3), Permutation::identity(4)};
  EXPECT_THROW(build_group(3, gens), DimensionError);
}

TEST(PermGroupTest, StrongGeneratorsAreMembers) {
  auto g = group_of(6, {"(1 2 3)(4 5)", "(1 4)(2 5)(3 6)"});
  for (const auto& s : g.strong_generators()) EXPECT_TRUE(g.contains(s));
  for (const auto& s : g.generators()) EXPECT_TRUE(g.contains(s));
}

// Order against element-by-element closure, on random small generator sets.
TEST(PermGroupPropertyTest, OrderMatchesClosure) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    std::size_t n = 1 + rng() % 7;
    std::size_t k = rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t j = 0; j < k; ++j) gens.push_back(testing::random_permutation(n, rng));
    PermutationGroup g = build_group(n, gens);
    ASSERT_EQ(factorial(n) % g.order(), 0) << "Lagrange";
    if (g.order() > 5000) continue;
    auto elems = testing::closure(n, gens);
    ASSERT_EQ(g.order(), BigInt(elems.size()));
    for (const auto& img : elems) ASSERT_TRUE(g.contains(Permutation(img)));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(PermGroupPropertyTest, ClosedUnderProducts) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 2 + rng() % 10;
    std::vector<Permutation> gens{testing::random_permutation(n, rng),
                                  testing::random_permutation(n, rng)};
    PermutationGroup g = build_group(n, gens);
    auto sgs = g.strong_generators();
    if (sgs.empty()) continue;
    for (int t = 0; t < 10; ++t) {
      const auto& x = sgs[rng() % sgs.size()];
      const auto& y = sgs[rng() % sgs.size()];
      ASSERT_TRUE(g.contains(compose(x, y)));
      ASSERT_TRUE(g.contains(inverse(x)));
    }
  }
}

}  // namespace
}  // namespace symmetra
