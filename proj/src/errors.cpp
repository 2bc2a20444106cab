// Copyright 2026 The Periodica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "periodica/errors.hpp"

namespace periodica {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kDegenerateGame: return "DegenerateGame";
    case ErrorCode::kConflict: return "ConflictError";
    case ErrorCode::kNotZeroSum: return "NotZeroSum";
    case ErrorCode::kInvalidPrior: return "InvalidPrior";
    case ErrorCode::kNoCommonPrior: return "NoCommonPrior";
    case ErrorCode::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::kZeroCurvature: return "ZeroCurvature";
    case ErrorCode::kMalformedCycle: return "MalformedCycle";
    case ErrorCode::kNotRationalizableCycle: return "NotRationalizableCycle";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string module, const std::string& message)
    : std::runtime_error("[" + module + "] " + std::string(ErrorCodeName(code)) +
                         ": " + message),
      code_(code),
      module_(std::move(module)),
      detail_(message) {}

}  // namespace periodica
