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

#include "symmetra/coefficient.hpp"

#include <gtest/gtest.h>

namespace symmetra {
namespace {

TEST(DecimalTest, ParsesAndNormalizes) {
  EXPECT_EQ(Decimal::parse("1.0"), Decimal::parse("1"));
  EXPECT_EQ(Decimal::parse("-2.50").to_string(), "-2.5");
  EXPECT_EQ(Decimal::parse("+0.000").to_string(), "0");
  EXPECT_EQ(Decimal::parse("0.05").to_string(), "0.05");
  EXPECT_EQ(Decimal::parse("-0.5").to_string(), "-0.5");
  EXPECT_EQ(Decimal::parse("123456789012345678901234567890").to_string(),
            "123456789012345678901234567890");
}

TEST(DecimalTest, RejectsMalformed) {
  EXPECT_THROW(Decimal::parse(""), ParseError);
  EXPECT_THROW(Decimal::parse("."), ParseError);
  EXPECT_THROW(Decimal::parse("1."), ParseError);
  EXPECT_THROW(Decimal::parse(".5"), ParseError);
  EXPECT_THROW(Decimal::parse("1e3"), ParseError);
  EXPECT_THROW(Decimal::parse("--1"), ParseError);
}

TEST(DecimalTest, OrderingIsNumeric) {
  EXPECT_LT(Decimal::parse("-3"), Decimal::parse("-2.99"));
  EXPECT_LT(Decimal::parse("0.1"), Decimal::parse("0.25"));
  EXPECT_GT(Decimal::parse("10"), Decimal::parse("9.999"));
}

TEST(DecimalTest, RoundToMultipleHalvesAwayFromZero) {
  Decimal eps = Decimal::parse("0.1");
  EXPECT_EQ(Decimal::parse("0.14").round_to_multiple(eps), 1);
  EXPECT_EQ(Decimal::parse("0.15").round_to_multiple(eps), 2);
  EXPECT_EQ(Decimal::parse("-0.15").round_to_multiple(eps), -2);
  EXPECT_EQ(Decimal::parse("-0.149").round_to_multiple(eps), -1);
  EXPECT_THROW(Decimal::parse("1").round_to_multiple(Decimal::parse("0")), InvalidArgument);
}

TEST(CoefficientTest, ParsesComplexGrammar) {
  Coefficient c = Coefficient::parse("1.5-2i");
  EXPECT_EQ(c.re, Decimal::parse("1.5"));
  EXPECT_EQ(c.im, Decimal::parse("-2"));
  EXPECT_EQ(c.to_string(), "1.5-2i");
  EXPECT_EQ(Coefficient::parse("-1+0.25i").to_string(), "-1+0.25i");
  EXPECT_EQ(Coefficient::parse("3+0i").to_string(), "3");
  EXPECT_EQ(Coefficient::parse("0+1i").to_string(), "0+1i");
  EXPECT_THROW(Coefficient::parse("2i"), ParseError);
  EXPECT_THROW(Coefficient::parse("1+i"), ParseError);
  EXPECT_THROW(Coefficient::parse("1+2j"), ParseError);
}

TEST(CoefficientPolicyTest, QuantizedIsAnEquivalence) {
  auto q = CoefficientPolicy::quantized(Decimal::parse("0.01"));
  Coefficient a = Coefficient::parse("1.004");
  Coefficient b = Coefficient::parse("0.996");
  Coefficient c = Coefficient::parse("1.006");
  EXPECT_TRUE(q.equivalent(a, b));
  EXPECT_FALSE(q.equivalent(a, c));
  EXPECT_EQ(q.representative(a).to_string(), "1");
  EXPECT_FALSE(CoefficientPolicy::exact().equivalent(a, b));
  EXPECT_THROW(CoefficientPolicy::quantized(Decimal::parse("-1")), InvalidArgument);
}

}  // namespace
}  // namespace symmetra
