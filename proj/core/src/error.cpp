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

#include "frontal/error.hpp"

namespace frontal {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kContractViolation: return "ContractViolation";
    case ErrorCode::kDivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kOrderExceeded: return "OrderExceeded";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUndefinedName: return "UndefinedName";
    case ErrorCode::kNonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::kConflictingKeys: return "ConflictingKeys";
    case ErrorCode::kMissingKey: return "MissingKey";
    case ErrorCode::kNormalRequired: return "NormalRequired";
    case ErrorCode::kDegenerateSingularSet: return "DegenerateSingularSet";
    case ErrorCode::kSeedNotSingular: return "SeedNotSingular";
    case ErrorCode::kTotallyDegenerate: return "TotallyDegenerate";
    case ErrorCode::kNotSingular: return "NotSingular";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kNotSecondKind: return "NotSecondKind";
    case ErrorCode::kNotKthKind: return "NotKthKind";
    case ErrorCode::kWrongInputForm: return "WrongInputForm";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kWrongKind: return "WrongKind";
    case ErrorCode::kNotFoldedType: return "NotFoldedType";
    case ErrorCode::kLimitingNormalCurvatureZero:
      return "LimitingNormalCurvatureZero";
    case ErrorCode::kLimitDiverges: return "LimitDiverges";
    case ErrorCode::kIo: return "IoError";
  }
  return "UnknownError";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kSyntaxError:
    case ErrorCode::kUndefinedName:
    case ErrorCode::kNonIntegerExponent:
    case ErrorCode::kConflictingKeys:
    case ErrorCode::kMissingKey:
      return true;
    default:
      return false;
  }
}

}  // namespace frontal
