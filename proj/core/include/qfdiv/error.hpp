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

#ifndef QFDIV_ERROR_HPP
#define QFDIV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfdiv {

enum class ErrorCode {
  NotSquare,
  NonFinite,
  NotHermitian,
  NotPositive,
  TraceDeviation,
  EigensolverFailure,
  FunctionUndefinedAtEigenvalue,
  DimensionCapExceeded,
  DimensionMismatch,
  IndexMismatch,
  InvalidDistribution,
  InvalidDivergenceFunction,
  IllFormedInfinitySum,
  UnknownName,
  AlphaOutOfRange,
  NegativeDivergenceValue,
  ParameterOutOfRange,
  HypothesisViolation,
  NotAProjection,
  InvalidPriors,
  FewerThanTwoStates,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported as qfdiv::Error; code() identifies the
/// precondition that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qfdiv

#endif  // QFDIV_ERROR_HPP
