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

#include "affine/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "affine/little.hpp"
#include "affine/symfunc.hpp"
#include "affine/text.hpp"
#include "affine/words.hpp"

namespace affine {
namespace {

constexpr std::size_t kMaxReportedFailures = 20;

std::string instance_label(const AffinePermutation& v, std::int64_t r) {
  return "v=" + format_window(v) + " r=" + std::to_string(r);
}

// Runs `check` for every (v, r); it returns an empty string on success.
template <typename Check>
SuiteResult sweep(const std::string& name, const VerifyOptions& opt,
                  Check check) {
  SuiteResult result{name, 0, 0, {}};
  for (const AffinePermutation& v : verification_elements(opt)) {
    for (std::int64_t r = 0; r < opt.n; ++r) {
      ++result.instances;
      std::string problem;
      try {
        problem = check(v, r);
      } catch (const Error& e) {
        problem = std::string(error_code_name(e.code())) + ": " + e.what();
      }
      if (problem.empty()) {
        ++result.passed;
      } else if (result.failures.size() < kMaxReportedFailures) {
        result.failures.push_back(instance_label(v, r) + ": " + problem);
      }
    }
  }
  return result;
}

std::string check_phi_r(const AffinePermutation& v, std::int64_t r) {
  std::set<AffinePermutation> minus;
  std::set<Word> expected;
  for (const Cover& c : left_r_covers(v, r)) {
    minus.insert(c.element);
    for (Word& c_word : reduced_words(c.element)) expected.insert(c_word);
  }
  std::set<Word> images;
  for (const Cover& c : right_r_covers(v, r)) {
    for (const Word& a : reduced_words(c.element)) {
      const PhiRResult out = phi_r(v, r, a);
      if (!minus.contains(out.element)) {
        return "phi_r(" + format_word(a) + ") left Psi^-";
      }
      if (!is_reduced(out.word) || evaluate(out.word) != out.element) {
        return "phi_r(" + format_word(a) + ") is not a reduced word";
      }
      std::vector<MarkedWord> vertices{out.start};
      vertices.insert(vertices.end(), out.run.path.begin(),
                      out.run.path.end() - 1);
      for (const MarkedWord& m : vertices) {
        if (residue(pq(v, m).p() - r, v.n()) != 0) {
          return "p != r at " + format_marked_word(m);
        }
      }
      if (residue(pq(v, out.run.result).q() - r, v.n()) != 0) {
        return "q != r at " + format_marked_word(out.run.result);
      }
      if (!images.insert(out.word).second) {
        return "phi_r is not injective at " + format_word(out.word);
      }
    }
  }
  if (images != expected) return "phi_r misses words of R(Psi^-)";
  return {};
}

std::string check_generalized(const AffinePermutation& v, std::int64_t r) {
  const std::vector<Cover> plus = right_r_covers(v, r);
  const std::vector<Cover> minus_covers = left_r_covers(v, r);
  std::set<AffinePermutation> minus;
  for (const Cover& c : minus_covers) minus.insert(c.element);

  DecompositionCounter counter(v.n());
  const auto degree = static_cast<int>(length(v)) + 1;
  for (const Composition& alpha : compositions(degree, v.n() - 1)) {
    std::int64_t expected_in = 0;
    std::int64_t expected_out = 0;
    for (const Cover& c : plus) expected_in += counter.count(c.element, alpha.parts);
    for (const Cover& c : minus_covers) {
      expected_out += counter.count(c.element, alpha.parts);
    }
    std::int64_t inputs = 0;
    std::set<AlphaDecomposition> outputs;
    for (const Cover& c : plus) {
      for (const AlphaDecomposition& d : alpha_decompositions(c.element, alpha)) {
        ++inputs;
        const AlphaDecomposition e = generalized_little(v, r, d);
        if (e.composition() != alpha.parts) return "alpha changed";
        if (!e.is_valid() || !minus.contains(e.product())) {
          return "image of " + format_decomposition(d) + " left Psi^-";
        }
        if (inverse_generalized_little(v, r, e) != d) {
          return "inverse fails at " + format_decomposition(d);
        }
        if (!outputs.insert(e).second) {
          return "collision at " + format_decomposition(e);
        }
      }
    }
    if (inputs != expected_in ||
        static_cast<std::int64_t>(outputs.size()) != expected_out) {
      return "decomposition counts disagree";
    }
  }
  return {};
}

}  // namespace

std::vector<AffinePermutation> verification_elements(const VerifyOptions& opt) {
  std::vector<AffinePermutation> out =
      elements_up_to_length(opt.n, opt.max_length);
  if (opt.samples <= 0 || opt.n < 2) return out;
  std::set<AffinePermutation> seen(out.begin(), out.end());
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < opt.samples; ++k) {
    const int target = opt.max_length + 1 + static_cast<int>(rng() % 2);
    AffinePermutation w = AffinePermutation::identity(opt.n);
    for (int step = 0; step < target; ++step) {
      std::vector<int> ascents;
      for (int i = 0; i < opt.n; ++i) {
        if (!has_right_descent(w, i)) ascents.push_back(i);
      }
      w = right_multiply_simple(w, ascents[rng() % ascents.size()]);
    }
    if (seen.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

SuiteResult verify_chevalley(const VerifyOptions& opt) {
  return sweep("chevalley", opt,
               [](const AffinePermutation& v, std::int64_t r) -> std::string {
                 return check_chevalley(v, r).holds ? "" : "tables differ";
               });
}

SuiteResult verify_garsia_little(const VerifyOptions& opt) {
  return sweep("garsia-little", opt,
               [](const AffinePermutation& v, std::int64_t r) -> std::string {
                 return check_garsia_little(v, r).holds ? "" : "tables differ";
               });
}

SuiteResult verify_bijection(const VerifyOptions& opt) {
  return sweep("bijection", opt,
               [](const AffinePermutation& v, std::int64_t r) {
                 std::string problem = check_phi_r(v, r);
                 return problem.empty() ? check_generalized(v, r) : problem;
               });
}

std::vector<SuiteResult> run_verification(const std::string& which,
                                          const VerifyOptions& opt) {
  if (opt.n < 2 || opt.max_length < 0) {
    fail(ErrorCode::kBadIndex, "verification needs n >= 2, max length >= 0");
  }
  std::vector<SuiteResult> out;
  const bool all = which == "all";
  if (!all && which != "chevalley" && which != "garsia-little" &&
      which != "bijection") {
    fail(ErrorCode::kParse, "unknown suite '" + which + "'");
  }
  if (all || which == "chevalley") out.push_back(verify_chevalley(opt));
  if (all || which == "garsia-little") out.push_back(verify_garsia_little(opt));
  if (all || which == "bijection") out.push_back(verify_bijection(opt));
  return out;
}

}  // namespace affine
