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

#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "affine_little.h"

namespace {

using nlohmann::json;

struct Handle {
  afl_perm* p = nullptr;
  ~Handle() { afl_perm_free(p); }
};

json take(char* text) {
  json out = json::parse(text);
  afl_string_free(text);
  return out;
}

TEST(CApi, WindowRoundTrip) {
  Handle v;
  const int64_t values[] = {2, 3, 0, 5};
  ASSERT_EQ(afl_perm_from_window(4, values, 4, &v.p), AFL_OK);
  EXPECT_EQ(afl_perm_period(v.p), 4);
  int64_t buffer[4] = {};
  size_t count = 0;
  ASSERT_EQ(afl_perm_window(v.p, buffer, 4, &count), AFL_OK);
  EXPECT_EQ(count, 4U);
  EXPECT_EQ(buffer[2], 0);
  int64_t l = -1;
  ASSERT_EQ(afl_perm_length(v.p, &l), AFL_OK);
  EXPECT_EQ(l, 3);
  char* text = nullptr;
  ASSERT_EQ(afl_perm_to_string(v.p, &text), AFL_OK);
  EXPECT_STREQ(text, "[2,3,0,5]");
  afl_string_free(text);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  afl_perm* p = nullptr;
  EXPECT_EQ(afl_perm_parse(0, "[2,3,0,4]", &p), AFL_ERR_BAD_SUM);
  EXPECT_EQ(p, nullptr);
  EXPECT_NE(std::string(afl_last_error()), "");
  EXPECT_EQ(afl_perm_parse(0, "[2,3", &p), AFL_ERR_PARSE);
  EXPECT_EQ(afl_perm_parse(0, nullptr, &p), AFL_ERR_NULL_ARGUMENT);
  EXPECT_EQ(afl_perm_from_word(5, "7", &p), AFL_ERR_BAD_INDEX);
  EXPECT_STREQ(afl_status_name(AFL_ERR_BAD_SUM), "BadSum");
  EXPECT_STREQ(afl_status_name(AFL_OK), "OK");
  EXPECT_EQ(afl_status_classify(AFL_OK), AFL_CLASS_OK);
  EXPECT_EQ(afl_status_classify(AFL_ERR_PARSE), AFL_CLASS_USAGE);
  EXPECT_EQ(afl_status_classify(AFL_ERR_NOT_V_MARKED), AFL_CLASS_DOMAIN);
  EXPECT_EQ(afl_status_classify(AFL_ERR_SYMMETRY_VIOLATION), AFL_CLASS_FAILURE);
}

TEST(CApi, Arithmetic) {
  Handle v;
  Handle t;
  Handle w;
  Handle inv;
  Handle id;
  ASSERT_EQ(afl_perm_parse(4, "[2,3,0,5]", &v.p), AFL_OK);
  ASSERT_EQ(afl_perm_parse(4, "[1,4,3,2]", &t.p), AFL_OK);
  ASSERT_EQ(afl_perm_multiply(v.p, t.p, &w.p), AFL_OK);
  char* text = nullptr;
  ASSERT_EQ(afl_perm_to_string(w.p, &text), AFL_OK);
  EXPECT_STREQ(text, "[2,5,0,3]");
  afl_string_free(text);
  int64_t c = 0;
  ASSERT_EQ(afl_chevalley_coefficient(v.p, w.p, 2, &c), AFL_OK);
  EXPECT_EQ(c, 1);
  ASSERT_EQ(afl_perm_inverse(w.p, &inv.p), AFL_OK);
  ASSERT_EQ(afl_perm_identity(3, &id.p), AFL_OK);
  Handle bad;
  EXPECT_EQ(afl_perm_multiply(v.p, id.p, &bad.p), AFL_ERR_MISMATCHED_PERIOD);
}

TEST(CApi, CoversJson) {
  Handle v;
  ASSERT_EQ(afl_perm_parse(4, "[-1,1,4,6]", &v.p), AFL_OK);
  char* text = nullptr;
  ASSERT_EQ(afl_covers_json(v.p, 1, 2, &text), AFL_OK);
  const json doc = take(text);
  EXPECT_EQ(doc["right"].size(), 2U);
  EXPECT_EQ(doc["right"][0]["window"], "[-1,4,1,6]");
  EXPECT_EQ(doc["left"][1]["window"], "[-1,0,5,6]");
  ASSERT_EQ(afl_covers_json(v.p, 0, 0, &text), AFL_OK);
  EXPECT_TRUE(take(text)["residue"].is_null());
}

TEST(CApi, LittleTraceJson) {
  Handle v;
  ASSERT_EQ(afl_perm_from_word(5, "3410321042", &v.p), AFL_OK);
  char* text = nullptr;
  ASSERT_EQ(afl_little_trace_json(v.p, "34102321042@5", &text), AFL_OK);
  const json doc = take(text);
  ASSERT_EQ(doc["rows"].size(), 5U);
  EXPECT_EQ(doc["rows"][4]["p"], -1);
  EXPECT_EQ(doc["rows"][4]["q"], 7);
  EXPECT_EQ(doc["result"]["word"], "34041321041");
  EXPECT_EQ(afl_little_trace_json(v.p, "34102321042@1", &text),
            AFL_ERR_NOT_V_MARKED);
}

TEST(CApi, GeneralizedLittleJson) {
  Handle v;
  ASSERT_EQ(afl_perm_parse(3, "[2,1,3]", &v.p), AFL_OK);
  char* text = nullptr;
  ASSERT_EQ(afl_generalized_little_json(v.p, 1, "21", 0, &text), AFL_OK);
  const json doc = take(text);
  EXPECT_EQ(doc["composition"], json::array({2}));
  EXPECT_EQ(doc["output"]["factors"].size(), 1U);
  ASSERT_EQ(afl_generalized_little_json(
                v.p, 1, doc["output"]["factors"][0].get<std::string>().c_str(),
                1, &text),
            AFL_OK);
  EXPECT_EQ(take(text)["output"]["factors"][0], "21");
  EXPECT_EQ(afl_generalized_little_json(v.p, 1, "12", 0, &text),
            AFL_ERR_INVALID_DECOMPOSITION);
}

TEST(CApi, TablesAndExpansion) {
  Handle w;
  ASSERT_EQ(afl_perm_parse(0, "[-1,4,1,6]", &w.p), AFL_OK);
  char* text = nullptr;
  ASSERT_EQ(afl_expand_json(w.p, &text), AFL_OK);
  const json doc = take(text);
  EXPECT_EQ(doc["coefficients"],
            (json{{"2,1,1", "1/1"}, {"2,2", "1/1"}}));
  EXPECT_TRUE(doc["zero_residual"].get<bool>());
  Handle c;
  ASSERT_EQ(afl_perm_parse(3, "[3,2,1]", &c.p), AFL_OK);
  ASSERT_EQ(afl_stanley_table_json(c.p, &text), AFL_OK);
  EXPECT_EQ(take(text)["table"], (json{{"1,1,1", 2}, {"2,1", 1}}));
}

TEST(CApi, ReducedWordsJson) {
  Handle c;
  ASSERT_EQ(afl_perm_parse(3, "[3,2,1]", &c.p), AFL_OK);
  char* text = nullptr;
  ASSERT_EQ(afl_reduced_words_json(c.p, &text), AFL_OK);
  EXPECT_EQ(take(text)["words"], json::array({"121", "212"}));
}

TEST(CApi, VerifyJson) {
  char* text = nullptr;
  ASSERT_EQ(afl_verify_json(3, 2, "all", 0, 0, &text), AFL_OK);
  const json doc = take(text);
  EXPECT_TRUE(doc["all_passed"].get<bool>());
  EXPECT_EQ(doc["suites"].size(), 3U);
  EXPECT_EQ(afl_verify_json(3, 2, "nonsense", 0, 0, &text), AFL_ERR_PARSE);
  EXPECT_EQ(afl_verify_json(1, 2, "all", 0, 0, &text), AFL_ERR_BAD_INDEX);
}

}  // namespace
