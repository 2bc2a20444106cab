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

#ifndef PERIODICA_ERRORS_HPP_
#define PERIODICA_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace periodica {

enum class ErrorCode {
  kDivisionByZero,
  kDimensionMismatch,
  kSizeLimit,
  kDegenerateGame,
  kConflict,
  kNotZeroSum,
  kInvalidPrior,
  kNoCommonPrior,
  kDegenerateDenominator,
  kZeroCurvature,
  kMalformedCycle,
  kNotRationalizableCycle,
  kParseError,
  kSchemaError,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every error names the module that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message);

  ErrorCode code() const { return code_; }
  const std::string& module() const { return module_; }
  // Message without the "[module] Code:" prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string module_;
  std::string detail_;
};

}  // namespace periodica

#endif  // PERIODICA_ERRORS_HPP_
