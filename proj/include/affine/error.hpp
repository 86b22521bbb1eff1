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

#ifndef AFFINE_ERROR_HPP_
#define AFFINE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace affine {

enum class ErrorCode {
  kParse,
  kBadLength,
  kDuplicateResidue,
  kBadSum,
  kMismatchedPeriod,
  kBadIndex,
  kCongruentPair,
  kNotGrassmannian,
  kNotACover,
  kWordIsReduced,
  kMarkNotReduced,
  kFullSet,
  kMarkAbsent,
  kNotVMarked,
  kNotReduced,
  kNotRightRCover,
  kNotLeftRCover,
  kInvalidDecomposition,
  kDegreeMismatch,
  kSymmetryViolation,
  kSingularSystem,
  kIdentityInput,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// Every failure in the library surfaces as this exception. The code is the
// stable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace affine

#endif  // AFFINE_ERROR_HPP_
