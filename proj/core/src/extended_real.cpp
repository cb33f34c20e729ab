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

#include "qfdiv/extended_real.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "qfdiv/error.hpp"

namespace qfdiv {

ExtendedReal ExtendedReal::finite(double v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::NonFinite, "ExtendedReal::finite got " +
                                          std::to_string(v));
  }
  return ExtendedReal(Tag::Finite, v);
}

ExtendedReal ExtendedReal::from_double(double v) {
  if (std::isnan(v)) throw Error(ErrorCode::NonFinite, "NaN is not extended-real");
  if (std::isinf(v)) return v > 0 ? plus_infinity() : minus_infinity();
  return ExtendedReal(Tag::Finite, v);
}

double ExtendedReal::value() const {
  if (tag_ != Tag::Finite) {
    throw Error(ErrorCode::NonFinite, "value() on " + to_string());
  }
  return value_;
}

double ExtendedReal::to_double() const noexcept {
  switch (tag_) {
    case Tag::PlusInfinity: return std::numeric_limits<double>::infinity();
    case Tag::MinusInfinity: return -std::numeric_limits<double>::infinity();
    case Tag::Finite: break;
  }
  return value_;
}

ExtendedReal ExtendedReal::operator-() const noexcept {
  switch (tag_) {
    case Tag::PlusInfinity: return minus_infinity();
    case Tag::MinusInfinity: return plus_infinity();
    case Tag::Finite: break;
  }
  return ExtendedReal(Tag::Finite, -value_);
}

ExtendedReal ExtendedReal::scaled(double nonneg) const {
  if (!(nonneg >= 0.0) || !std::isfinite(nonneg)) {
    throw Error(ErrorCode::NonFinite,
                "scaled() needs a finite non-negative factor");
  }
  if (nonneg == 0.0) return zero();
  if (tag_ != Tag::Finite) return *this;
  return from_double(value_ * nonneg);
}

ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
  using Tag = ExtendedReal::Tag;
  if (a.tag_ == Tag::Finite && b.tag_ == Tag::Finite) {
    return ExtendedReal::from_double(a.value_ + b.value_);
  }
  if ((a.is_plus_infinity() && b.is_minus_infinity()) ||
      (a.is_minus_infinity() && b.is_plus_infinity())) {
    throw Error(ErrorCode::IllFormedInfinitySum, "(+inf) + (-inf)");
  }
  return a.tag_ != Tag::Finite ? a : b;
}

ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) {
  return a + (-b);
}

ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_finite() && b.is_finite()) {
    return ExtendedReal::from_double(a.value_ * b.value_);
  }
  const auto sign = [](const ExtendedReal& x) {
    if (x.is_plus_infinity()) return 1;
    if (x.is_minus_infinity()) return -1;
    return x.value_ > 0 ? 1 : (x.value_ < 0 ? -1 : 0);
  };
  const int s = sign(a) * sign(b);
  if (s == 0) return ExtendedReal::zero();
  return s > 0 ? ExtendedReal::plus_infinity() : ExtendedReal::minus_infinity();
}

std::partial_ordering operator<=>(const ExtendedReal& a,
                                  const ExtendedReal& b) noexcept {
  return a.to_double() <=> b.to_double();
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept {
  return a.tag_ == b.tag_ && (a.tag_ != ExtendedReal::Tag::Finite ||
                              a.value_ == b.value_);
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string ExtendedReal::to_string() const {
  switch (tag_) {
    case Tag::PlusInfinity: return "inf";
    case Tag::MinusInfinity: return "-inf";
    case Tag::Finite: break;
  }
  return format_double(value_);
}

std::optional<ExtendedReal> ExtendedReal::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return plus_infinity();
  if (text == "-inf") return minus_infinity();
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() ||
      !std::isfinite(v)) {
    return std::nullopt;
  }
  return ExtendedReal(Tag::Finite, v);
}

ExtendedReal log(const ExtendedReal& x) {
  if (x.is_plus_infinity()) return x;
  if (x.is_minus_infinity() || x.value() < 0.0) {
    throw Error(ErrorCode::NegativeDivergenceValue,
                "log of negative value " + x.to_string());
  }
  if (x.value() == 0.0) return ExtendedReal::minus_infinity();
  return ExtendedReal::finite(std::log(x.value()));
}

}  // namespace qfdiv
