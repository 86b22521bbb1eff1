// Copyright 2026 The affine-little Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "affine/error.hpp"

namespace affine {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kBadLength: return "BadLength";
    case ErrorCode::kDuplicateResidue: return "DuplicateResidue";
    case ErrorCode::kBadSum: return "BadSum";
    case ErrorCode::kMismatchedPeriod: return "MismatchedPeriod";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kCongruentPair: return "CongruentPair";
    case ErrorCode::kNotGrassmannian: return "NotGrassmannian";
    case ErrorCode::kNotACover: return "NotACover";
    case ErrorCode::kWordIsReduced: return "WordIsReduced";
    case ErrorCode::kMarkNotReduced: return "MarkNotReduced";
    case ErrorCode::kFullSet: return "FullSet";
    case ErrorCode::kMarkAbsent: return "MarkAbsent";
    case ErrorCode::kNotVMarked: return "NotVMarked";
    case ErrorCode::kNotReduced: return "NotReduced";
    case ErrorCode::kNotRightRCover: return "NotRightRCover";
    case ErrorCode::kNotLeftRCover: return "NotLeftRCover";
    case ErrorCode::kInvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kSymmetryViolation: return "SymmetryViolation";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kIdentityInput: return "IdentityInput";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace affine
