// Copyright 2026 The qfdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <limits>

#include "qfdiv/error.hpp"
#include "qfdiv/extended_real.hpp"

using qfdiv::ErrorCode;
using ER = qfdiv::ExtendedReal;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const qfdiv::Error& e) {
    return e.code();
  }
  FAIL("expected qfdiv::Error");
  return ErrorCode::InvalidConfig;
}

}  // namespace

TEST_CASE("zero times infinity is zero") {
  CHECK(ER::zero() * ER::plus_infinity() == ER::zero());
  CHECK(ER::minus_infinity() * ER::zero() == ER::zero());
  CHECK(ER::plus_infinity().scaled(0.0) == ER::zero());
  CHECK(ER::minus_infinity().scaled(0.0) == ER::zero());
}

TEST_CASE("sign rules for products") {
  CHECK(ER::finite(2.0) * ER::plus_infinity() == ER::plus_infinity());
  CHECK(ER::finite(-2.0) * ER::plus_infinity() == ER::minus_infinity());
  CHECK(ER::minus_infinity() * ER::minus_infinity() == ER::plus_infinity());
  CHECK(ER::finite(0.5).scaled(4.0).value() == 2.0);
  CHECK(ER::plus_infinity().scaled(1e-300) == ER::plus_infinity());
}

TEST_CASE("opposite infinities cannot be added") {
  CHECK(code_of([] { (void)(ER::plus_infinity() + ER::minus_infinity()); }) ==
        ErrorCode::IllFormedInfinitySum);
  CHECK(code_of([] { (void)(ER::plus_infinity() - ER::plus_infinity()); }) ==
        ErrorCode::IllFormedInfinitySum);
  CHECK(ER::plus_infinity() + ER::finite(-1e300) == ER::plus_infinity());
  CHECK(ER::plus_infinity() + ER::plus_infinity() == ER::plus_infinity());
}

TEST_CASE("finite construction rejects non-finite doubles") {
  CHECK(code_of([] { (void)ER::finite(std::nan("")); }) == ErrorCode::NonFinite);
  CHECK(code_of([] {
          (void)ER::finite(std::numeric_limits<double>::infinity());
        }) == ErrorCode::NonFinite);
  CHECK(ER::from_double(-std::numeric_limits<double>::infinity()) ==
        ER::minus_infinity());
  CHECK(code_of([] { (void)ER::plus_infinity().value(); }) ==
        ErrorCode::NonFinite);
}

TEST_CASE("ordering") {
  CHECK(ER::minus_infinity() < ER::finite(-1e308));
  CHECK(ER::finite(1e308) < ER::plus_infinity());
  CHECK(ER::finite(1.0) <= ER::finite(1.0));
  CHECK_FALSE(ER::plus_infinity() < ER::plus_infinity());
  CHECK(-ER::plus_infinity() == ER::minus_infinity());
}

TEST_CASE("log") {
  CHECK(log(ER::zero()) == ER::minus_infinity());
  CHECK(log(ER::plus_infinity()) == ER::plus_infinity());
  CHECK(log(ER::finite(1.0)) == ER::zero());
  CHECK(code_of([] { (void)log(ER::finite(-1e-3)); }) ==
        ErrorCode::NegativeDivergenceValue);
}

TEST_CASE("text encoding round-trips") {
  for (double v : {0.0, -0.0, 0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23,
                   std::numeric_limits<double>::denorm_min(),
                   std::numeric_limits<double>::max()}) {
    const ER x = ER::finite(v);
    const auto back = ER::parse(x.to_string());
    REQUIRE(back.has_value());
    CHECK(std::signbit(back->value()) == std::signbit(v));
    CHECK(back->value() == v);
  }
  CHECK(ER::plus_infinity().to_string() == "inf");
  CHECK(ER::minus_infinity().to_string() == "-inf");
  CHECK(*ER::parse("inf") == ER::plus_infinity());
  CHECK(*ER::parse("-inf") == ER::minus_infinity());
  CHECK_FALSE(ER::parse("nan").has_value());
  CHECK_FALSE(ER::parse("1.0x").has_value());
  CHECK_FALSE(ER::parse("").has_value());
}
