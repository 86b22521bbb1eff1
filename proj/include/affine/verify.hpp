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

#ifndef AFFINE_VERIFY_HPP_
#define AFFINE_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "affine/core.hpp"

namespace affine {

struct VerifyOptions {
  int n = 3;
  int max_length = 3;
  std::uint64_t seed = 0;
  int samples = 0;  // extra random v just beyond max_length
};

struct SuiteResult {
  std::string name;
  std::uint64_t instances = 0;  // (v, r) pairs
  std::uint64_t passed = 0;
  std::vector<std::string> failures;  // first few counterexamples

  bool ok() const noexcept { return passed == instances; }
};

// Every v with ell(v) <= max_length, then the random samples, deduplicated,
// in a deterministic order.
std::vector<AffinePermutation> verification_elements(const VerifyOptions& opt);

// s_1 F_v against the Chevalley sum for every (v, r).
SuiteResult verify_chevalley(const VerifyOptions& opt);
// sum over Psi^- against sum over Psi^+ by decomposition counting.
SuiteResult verify_garsia_little(const VerifyOptions& opt);
// phi_r and the generalized map are bijections onto the left covers, with
// the p/q path invariant, checked against direct enumeration.
SuiteResult verify_bijection(const VerifyOptions& opt);

// Accepts "chevalley", "garsia-little", "bijection" or "all".
std::vector<SuiteResult> run_verification(const std::string& which,
                                          const VerifyOptions& opt);

}  // namespace affine

#endif  // AFFINE_VERIFY_HPP_
