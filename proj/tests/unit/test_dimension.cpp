// Copyright 2026 The dimkit Authors.
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


#include <random>

#include "common.hpp"
#include "dimkit/dimension.hpp"
#include "doctest.h"

using namespace dimkit;

TEST_CASE("format and parse the canonical encoding") {
  const DimensionVector force({0, 0, 1, 0, 1, 0, -2});
  CHECK(format_dimension(force) == "A0E0L1I0M1H0T-2D0");
  CHECK(parse_dimension("A0E0L1I0M1H0T-2D0") == force);
  CHECK(format_dimension(DimensionVector()) == "A0E0L0I0M0H0T0D1");
  CHECK(DimensionVector().dimensionless());
  CHECK_FALSE(force.dimensionless());
}

TEST_CASE("symbolic form") {
  CHECK(format_symbolic(DimensionVector({0, 0, 1, 0, 1, 0, -2})) == "LMT^-2");
  CHECK(format_symbolic(DimensionVector({0, 0, 0, 0, 1, 0, -2})) == "MT^-2");
  CHECK(format_symbolic(DimensionVector({0, 0, 3, 0, 1, 0, -2}), " ") ==
        "L^3 M T^-2");
  CHECK(format_symbolic(DimensionVector()) == "D");
  // Temperature and current come between mass and time.
  CHECK(format_symbolic(DimensionVector({1, 1, 0, 1, 0, 1, 1})) == "HETAI");
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_dimension(""), ParseError);
  CHECK_THROWS_AS(parse_dimension("A0E0L1I0M0H0T0"), ParseError);
  CHECK_THROWS_AS(parse_dimension("A0E0L1I0M0H0T0D0x"), ParseError);
  CHECK_THROWS_AS(parse_dimension("E0A0L1I0M0H0T0D0"), ParseError);
  CHECK_THROWS_AS(parse_dimension("A0E0L+1I0M0H0T0D0"), ParseError);
  CHECK_THROWS_CODE(parse_dimension("A0E0L1I0M0H0T0D1"), ErrorCode::kValidation);
  CHECK_THROWS_CODE(parse_dimension("A0E0L0I0M0H0T0D0"), ErrorCode::kValidation);
  CHECK_THROWS_CODE(parse_dimension("A0E0L13I0M0H0T0D0"), ErrorCode::kRange);
  CHECK_THROWS_CODE(parse_dimension("A0E0L99999999999I0M0H0T0D0"), ErrorCode::kRange);
}

TEST_CASE("exponent bounds") {
  CHECK_NOTHROW(DimensionVector({12, -12, 0, 0, 0, 0, 0}));
  CHECK_THROWS_CODE(DimensionVector({13, 0, 0, 0, 0, 0, 0}), ErrorCode::kRange);
  const DimensionVector l = DimensionVector::of(Base::kLength, 7);
  CHECK_THROWS_CODE(dim_mul(l, l), ErrorCode::kRange);
  CHECK_THROWS_CODE(dim_pow(l, 2), ErrorCode::kRange);
}

TEST_CASE("algebra agrees with exponent arithmetic") {
  std::mt19937_64 g(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int i = 0; i < 500; ++i) {
    oracle::Dim a{}, b{};
    DimensionVector::Exponents ea{}, eb{};
    for (int k = 0; k < 7; ++k) {
      ea[k] = a[k] = d(g);
      eb[k] = b[k] = d(g);
    }
    const auto sum = oracle::add(a, b);
    const auto diff = oracle::sub(a, b);
    DimensionVector::Exponents es{}, ed{};
    for (int k = 0; k < 7; ++k) {
      es[k] = sum[k];
      ed[k] = diff[k];
    }
    CHECK(dim_mul(DimensionVector(ea), DimensionVector(eb)) == DimensionVector(es));
    CHECK(dim_div(DimensionVector(ea), DimensionVector(eb)) == DimensionVector(ed));
    CHECK(dim_pow(DimensionVector(ea), 0) == DimensionVector());
    CHECK(dim_pow(DimensionVector(ea), 2) == dim_mul(DimensionVector(ea), DimensionVector(ea)));
  }
}

TEST_CASE("comparability is equality") {
  const DimensionVector a = DimensionVector::of(Base::kMass);
  CHECK(is_comparable(a, a));
  CHECK_FALSE(is_comparable(a, DimensionVector::of(Base::kLength)));
}
