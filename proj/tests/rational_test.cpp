// Copyright 2026 The dicolor Authors
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

#include "dicolor/rational.hpp"

#include <gtest/gtest.h>

#include <cstdint>

namespace dicolor {
namespace {

TEST(RationalTest, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, -5), Rational(0));
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
}

TEST(RationalTest, ArithmeticAndOrder) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(5, 6), Rational(-1, 3));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_THROW(Rational(1) / Rational(0), InvalidArgument);
  EXPECT_LT(Rational(2, 3), Rational(3, 4));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_TRUE(Rational(4, 2) == 2);
  EXPECT_TRUE(0 < Rational(1, 1000));
}

TEST(RationalTest, OverflowThrowsInsteadOfWrapping) {
  const Rational big(INT64_MAX);
  EXPECT_THROW(big + Rational(1), InternalError);
  EXPECT_THROW(Rational(1, INT64_MAX) * Rational(1, 2), InternalError);
  // Cross products beyond 64 bits still compare correctly.
  EXPECT_LT(Rational(INT64_MAX - 1, INT64_MAX), Rational(1));
}

TEST(RationalTest, TextForm) {
  EXPECT_EQ(to_string(Rational(2, 3)), "2/3");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

}  // namespace
}  // namespace dicolor
