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

#include "affine_little.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include <json.hpp>

#include "affine/core.hpp"
#include "affine/error.hpp"
#include "affine/little.hpp"
#include "affine/symfunc.hpp"
#include "affine/text.hpp"
#include "affine/verify.hpp"
#include "affine/words.hpp"

struct afl_perm {
  affine::AffinePermutation value;
};

namespace {

using affine::ErrorCode;
using nlohmann::json;

thread_local std::string last_error;

afl_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return AFL_ERR_PARSE;
    case ErrorCode::kBadLength: return AFL_ERR_BAD_LENGTH;
    case ErrorCode::kDuplicateResidue: return AFL_ERR_DUPLICATE_RESIDUE;
    case ErrorCode::kBadSum: return AFL_ERR_BAD_SUM;
    case ErrorCode::kMismatchedPeriod: return AFL_ERR_MISMATCHED_PERIOD;
    case ErrorCode::kBadIndex: return AFL_ERR_BAD_INDEX;
    case ErrorCode::kCongruentPair: return AFL_ERR_CONGRUENT_PAIR;
    case ErrorCode::kNotGrassmannian: return AFL_ERR_NOT_GRASSMANNIAN;
    case ErrorCode::kNotACover: return AFL_ERR_NOT_A_COVER;
    case ErrorCode::kWordIsReduced: return AFL_ERR_WORD_IS_REDUCED;
    case ErrorCode::kMarkNotReduced: return AFL_ERR_MARK_NOT_REDUCED;
    case ErrorCode::kFullSet: return AFL_ERR_FULL_SET;
    case ErrorCode::kMarkAbsent: return AFL_ERR_MARK_ABSENT;
    case ErrorCode::kNotVMarked: return AFL_ERR_NOT_V_MARKED;
    case ErrorCode::kNotReduced: return AFL_ERR_NOT_REDUCED;
    case ErrorCode::kNotRightRCover: return AFL_ERR_NOT_RIGHT_R_COVER;
    case ErrorCode::kNotLeftRCover: return AFL_ERR_NOT_LEFT_R_COVER;
    case ErrorCode::kInvalidDecomposition: return AFL_ERR_INVALID_DECOMPOSITION;
    case ErrorCode::kDegreeMismatch: return AFL_ERR_DEGREE_MISMATCH;
    case ErrorCode::kSymmetryViolation: return AFL_ERR_SYMMETRY_VIOLATION;
    case ErrorCode::kSingularSystem: return AFL_ERR_SINGULAR_SYSTEM;
    case ErrorCode::kIdentityInput: return AFL_ERR_IDENTITY_INPUT;
    case ErrorCode::kInternal: return AFL_ERR_INTERNAL;
  }
  return AFL_ERR_INTERNAL;
}

template <typename Body>
afl_status guarded(Body body) {
  try {
    body();
    last_error.clear();
    return AFL_OK;
  } catch (const affine::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return AFL_ERR_INTERNAL;
  }
}

afl_status null_argument() {
  last_error = "null argument";
  return AFL_ERR_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

afl_perm* wrap(affine::AffinePermutation w) { return new afl_perm{std::move(w)}; }

json covers_to_json(const std::vector<affine::Cover>& covers) {
  json out = json::array();
  for (const affine::Cover& c : covers) {
    out.push_back({{"window", affine::format_window(c.element)},
                   {"reflection", affine::format_reflection(c.reflection)}});
  }
  return out;
}

json table_to_json(const affine::CoefficientTable& t) {
  json out = json::object();
  for (const auto& [lambda, value] : t.entries()) {
    out[affine::format_partition(lambda)] = value;
  }
  return out;
}

json factors_to_json(const affine::AlphaDecomposition& d) {
  json out = json::array();
  for (const affine::CyclicSubset& a : d.factors) {
    out.push_back(affine::format_word(affine::canonical_cd_word(a)));
  }
  return out;
}

}  // namespace

extern "C" {

const char* afl_status_name(afl_status status) {
  switch (status) {
    case AFL_OK: return "OK";
    case AFL_ERR_NULL_ARGUMENT: return "NullArgument";
    default: break;
  }
  if (status < AFL_ERR_PARSE || status > AFL_ERR_INTERNAL) return "Unknown";
  return affine::error_code_name(static_cast<ErrorCode>(status - 1)).data();
}

afl_status_class afl_status_classify(afl_status status) {
  switch (status) {
    case AFL_OK:
      return AFL_CLASS_OK;
    case AFL_ERR_PARSE:
    case AFL_ERR_BAD_LENGTH:
    case AFL_ERR_DUPLICATE_RESIDUE:
    case AFL_ERR_BAD_SUM:
    case AFL_ERR_MISMATCHED_PERIOD:
    case AFL_ERR_BAD_INDEX:
    case AFL_ERR_CONGRUENT_PAIR:
    case AFL_ERR_NULL_ARGUMENT:
      return AFL_CLASS_USAGE;
    case AFL_ERR_SYMMETRY_VIOLATION:
    case AFL_ERR_SINGULAR_SYSTEM:
    case AFL_ERR_INTERNAL:
      return AFL_CLASS_FAILURE;
    default:
      return AFL_CLASS_DOMAIN;
  }
}

const char* afl_last_error(void) { return last_error.c_str(); }

void afl_string_free(char* text) { delete[] text; }

afl_status afl_perm_from_window(int n, const int64_t* values, size_t count,
                                afl_perm** out) {
  if ((values == nullptr && count != 0) || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = wrap(affine::AffinePermutation::from_window(
        n, std::span<const std::int64_t>(values, count)));
  });
}

afl_status afl_perm_parse(int n, const char* window, afl_perm** out) {
  if (window == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = wrap(affine::parse_window(window, n)); });
}

afl_status afl_perm_from_word(int n, const char* word, afl_perm** out) {
  if (word == nullptr || out == nullptr) return null_argument();
  return guarded(
      [&] { *out = wrap(affine::evaluate(affine::parse_word(word, n))); });
}

afl_status afl_perm_identity(int n, afl_perm** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = wrap(affine::AffinePermutation::identity(n)); });
}

void afl_perm_free(afl_perm* w) { delete w; }

int afl_perm_period(const afl_perm* w) { return w == nullptr ? 0 : w->value.n(); }

afl_status afl_perm_window(const afl_perm* w, int64_t* buffer,
                           size_t capacity, size_t* count) {
  if (w == nullptr || count == nullptr || (buffer == nullptr && capacity > 0)) {
    return null_argument();
  }
  const auto& window = w->value.window();
  *count = window.size();
  for (size_t k = 0; k < window.size() && k < capacity; ++k) {
    buffer[k] = window[k];
  }
  return AFL_OK;
}

afl_status afl_perm_length(const afl_perm* w, int64_t* out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = affine::length(w->value); });
}

afl_status afl_perm_to_string(const afl_perm* w, char** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = copy_string(affine::format_window(w->value)); });
}

afl_status afl_perm_multiply(const afl_perm* u, const afl_perm* v,
                             afl_perm** out) {
  if (u == nullptr || v == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = wrap(affine::multiply(u->value, v->value)); });
}

afl_status afl_perm_inverse(const afl_perm* w, afl_perm** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = wrap(affine::inverse(w->value)); });
}

afl_status afl_chevalley_coefficient(const afl_perm* v, const afl_perm* w,
                                     int64_t r, int64_t* out) {
  if (v == nullptr || w == nullptr || out == nullptr) return null_argument();
  return guarded(
      [&] { *out = affine::chevalley_coefficient(v->value, w->value, r); });
}

afl_status afl_covers_json(const afl_perm* v, int has_residue, int64_t r,
                           char** out) {
  if (v == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    json doc{{"n", v->value.n()},
             {"v", affine::format_window(v->value)},
             {"length", affine::length(v->value)}};
    if (has_residue != 0) {
      doc["residue"] = r;
      doc["right"] = covers_to_json(affine::right_r_covers(v->value, r));
      doc["left"] = covers_to_json(affine::left_r_covers(v->value, r));
      json chevalley = json::array();
      for (const affine::Cover& c : affine::covers_above(v->value)) {
        const std::int64_t coefficient =
            affine::chevalley_coefficient(v->value, c.element, r);
        if (coefficient == 0) continue;
        chevalley.push_back(
            {{"window", affine::format_window(c.element)},
             {"reflection", affine::format_reflection(c.reflection)},
             {"coefficient", coefficient}});
      }
      doc["chevalley"] = std::move(chevalley);
    } else {
      doc["residue"] = nullptr;
      doc["covers"] = covers_to_json(affine::covers_above(v->value));
    }
    *out = copy_string(doc.dump());
  });
}

afl_status afl_reduced_words_json(const afl_perm* w, char** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    json words = json::array();
    for (const affine::Word& a : affine::reduced_words(w->value)) {
      words.push_back(affine::format_word(a));
    }
    json doc{{"n", w->value.n()},
             {"window", affine::format_window(w->value)},
             {"length", affine::length(w->value)},
             {"words", std::move(words)}};
    *out = copy_string(doc.dump());
  });
}

afl_status afl_little_trace_json(const afl_perm* v, const char* marked_word,
                                 char** out) {
  if (v == nullptr || marked_word == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    const affine::MarkedWord start =
        affine::parse_marked_word(marked_word, v->value.n());
    const affine::PhiRun run = affine::phi(v->value, start);
    json rows = json::array();
    auto add_row = [&](const affine::MarkedWord& m) {
      const affine::PQPair pair = affine::pq(v->value, m);
      rows.push_back({{"word", affine::format_word(m.word)},
                      {"mark", m.mark},
                      {"p", pair.p()},
                      {"q", pair.q()}});
    };
    add_row(start);
    for (const affine::MarkedWord& m : run.path) add_row(m);
    json doc{{"n", v->value.n()},
             {"v", affine::format_window(v->value)},
             {"rows", std::move(rows)},
             {"result",
              {{"word", affine::format_word(run.result.word)},
               {"mark", run.result.mark},
               {"window",
                affine::format_window(affine::evaluate(run.result.word))}}}};
    *out = copy_string(doc.dump());
  });
}

afl_status afl_generalized_little_json(const afl_perm* v, int64_t r,
                                       const char* decomposition, int inverse,
                                       char** out) {
  if (v == nullptr || decomposition == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    const affine::AlphaDecomposition input =
        affine::parse_decomposition(decomposition, v->value.n());
    const affine::AlphaDecomposition output =
        inverse != 0 ? affine::inverse_generalized_little(v->value, r, input)
                     : affine::generalized_little(v->value, r, input);
    json doc{{"n", v->value.n()},
             {"v", affine::format_window(v->value)},
             {"r", r},
             {"inverse", inverse != 0},
             {"composition", input.composition()},
             {"input",
              {{"factors", factors_to_json(input)},
               {"window", affine::format_window(input.product())}}},
             {"output",
              {{"factors", factors_to_json(output)},
               {"window", affine::format_window(output.product())}}}};
    *out = copy_string(doc.dump());
  });
}

afl_status afl_stanley_table_json(const afl_perm* w, char** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const affine::CoefficientTable table = affine::stanley_table(w->value);
    json doc{{"n", table.n()},
             {"degree", table.degree()},
             {"window", affine::format_window(w->value)},
             {"table", table_to_json(table)}};
    *out = copy_string(doc.dump());
  });
}

afl_status afl_expand_json(const afl_perm* w, char** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const affine::ExpansionResult result =
        affine::expand_in_affine_schur(w->value);
    json coefficients = json::object();
    for (const auto& [lambda, value] : result.coefficients) {
      coefficients[affine::format_partition(lambda)] =
          affine::format_rational(value);
    }
    json doc{{"n", w->value.n()},
             {"degree", affine::length(w->value)},
             {"window", affine::format_window(w->value)},
             {"zero_residual", result.zero_residual},
             {"coefficients", std::move(coefficients)}};
    *out = copy_string(doc.dump());
  });
}

afl_status afl_verify_json(int n, int max_length, const char* which,
                           uint64_t seed, int samples, char** out) {
  if (which == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const affine::VerifyOptions opt{n, max_length, seed, samples};
    bool all_passed = true;
    json suites = json::array();
    for (const affine::SuiteResult& s : affine::run_verification(which, opt)) {
      all_passed = all_passed && s.ok();
      suites.push_back({{"name", s.name},
                        {"instances", s.instances},
                        {"passed", s.passed},
                        {"failures", s.failures}});
    }
    json doc{{"n", n},
             {"max_length", max_length},
             {"seed", seed},
             {"samples", samples},
             {"all_passed", all_passed},
             {"suites", std::move(suites)}};
    *out = copy_string(doc.dump());
  });
}

}  // extern "C"
