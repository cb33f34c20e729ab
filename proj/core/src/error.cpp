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

#include "qfdiv/error.hpp"

namespace qfdiv {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::TraceDeviation: return "TraceDeviation";
    case ErrorCode::EigensolverFailure: return "EigensolverFailure";
    case ErrorCode::FunctionUndefinedAtEigenvalue:
      return "FunctionUndefinedAtEigenvalue";
    case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::InvalidDivergenceFunction:
      return "InvalidDivergenceFunction";
    case ErrorCode::IllFormedInfinitySum: return "IllFormedInfinitySum";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::NegativeDivergenceValue: return "NegativeDivergenceValue";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::NotAProjection: return "NotAProjection";
    case ErrorCode::InvalidPriors: return "InvalidPriors";
    case ErrorCode::FewerThanTwoStates: return "FewerThanTwoStates";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace qfdiv
