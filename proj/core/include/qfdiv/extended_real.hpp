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

#ifndef QFDIV_EXTENDED_REAL_HPP
#define QFDIV_EXTENDED_REAL_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace qfdiv {

/// A value of the extended real line [-inf, +inf].
///
/// Arithmetic follows the conventions used for f-divergences:
///   0 * (+-inf) = 0,  a * (+-inf) = +-inf for a > 0,
/// and (+inf) + (-inf) is an error (ErrorCode::IllFormedInfinitySum) rather
/// than NaN. Values never hold NaN.
class ExtendedReal {
 public:
  enum class Tag { Finite, PlusInfinity, MinusInfinity };

  constexpr ExtendedReal() noexcept = default;

  /// Throws ErrorCode::NonFinite for NaN or infinite input.
  static ExtendedReal finite(double v);
  /// Maps +-HUGE_VAL to the matching infinity; throws on NaN.
  static ExtendedReal from_double(double v);
  static constexpr ExtendedReal plus_infinity() noexcept {
    return ExtendedReal(Tag::PlusInfinity, 0.0);
  }
  static constexpr ExtendedReal minus_infinity() noexcept {
    return ExtendedReal(Tag::MinusInfinity, 0.0);
  }
  static constexpr ExtendedReal zero() noexcept { return ExtendedReal(); }

  constexpr Tag tag() const noexcept { return tag_; }
  constexpr bool is_finite() const noexcept { return tag_ == Tag::Finite; }
  constexpr bool is_plus_infinity() const noexcept {
    return tag_ == Tag::PlusInfinity;
  }
  constexpr bool is_minus_infinity() const noexcept {
    return tag_ == Tag::MinusInfinity;
  }

  /// Finite value; throws ErrorCode::NonFinite when infinite.
  double value() const;
  /// Finite value, or +-HUGE_VAL for the infinities.
  double to_double() const noexcept;

  ExtendedReal operator-() const noexcept;

  /// Multiplication by a non-negative scalar with 0 * (+-inf) = 0.
  ExtendedReal scaled(double nonneg) const;

  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b);
  friend ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b);
  /// Product with 0 * (+-inf) = 0 and sign rules otherwise.
  friend ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b);
  ExtendedReal& operator+=(const ExtendedReal& b) { return *this = *this + b; }

  friend std::partial_ordering operator<=>(const ExtendedReal& a,
                                           const ExtendedReal& b) noexcept;
  friend bool operator==(const ExtendedReal& a,
                         const ExtendedReal& b) noexcept;

  /// "inf", "-inf", or the shortest 17-significant-digit decimal.
  std::string to_string() const;
  static std::optional<ExtendedReal> parse(std::string_view text);

 private:
  constexpr ExtendedReal(Tag t, double v) noexcept : tag_(t), value_(v) {}

  Tag tag_ = Tag::Finite;
  double value_ = 0.0;
};

/// Natural logarithm on [0, +inf]: log(0) = -inf, log(+inf) = +inf.
/// Throws ErrorCode::NegativeDivergenceValue for negative arguments.
ExtendedReal log(const ExtendedReal& x);

/// Formats a finite double with 17 significant digits.
std::string format_double(double v);

}  // namespace qfdiv

#endif  // QFDIV_EXTENDED_REAL_HPP
