// Copyright 2026 The frontal Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frontal {

enum class ErrorCode {
  kContractViolation,
  kDivisionByNonUnit,
  kNotDivisible,
  kOrderExceeded,
  kDomainError,
  // Input / parse errors.
  kSyntaxError,
  kUndefinedName,
  kNonIntegerExponent,
  kConflictingKeys,
  kMissingKey,
  // Analysis errors.
  kNormalRequired,
  kDegenerateSingularSet,
  kSeedNotSingular,
  kTotallyDegenerate,
  kNotSingular,
  kInternalInconsistency,
  kNotSecondKind,
  kNotKthKind,
  kWrongInputForm,
  kNotNormalized,
  kWrongKind,
  kNotFoldedType,
  kLimitingNormalCurvatureZero,
  kLimitDiverges,
  kIo,
};

std::string_view to_string(ErrorCode code) noexcept;

// True for errors caused by malformed user input (CLI exit code 2).
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace frontal
