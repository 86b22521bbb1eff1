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

#ifndef AFFINE_LITTLE_H_
#define AFFINE_LITTLE_H_

/*
 * C interface to the affine symmetric group library.
 *
 * Elements are passed around as opaque afl_perm handles. Every fallible
 * call returns an afl_status; on failure afl_last_error() holds a message
 * for the calling thread. Structured results come back as NUL-terminated
 * JSON documents allocated by the library and released with
 * afl_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AFL_API __declspec(dllexport)
#else
#define AFL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct afl_perm afl_perm;

typedef enum afl_status {
  AFL_OK = 0,
  AFL_ERR_PARSE = 1,
  AFL_ERR_BAD_LENGTH = 2,
  AFL_ERR_DUPLICATE_RESIDUE = 3,
  AFL_ERR_BAD_SUM = 4,
  AFL_ERR_MISMATCHED_PERIOD = 5,
  AFL_ERR_BAD_INDEX = 6,
  AFL_ERR_CONGRUENT_PAIR = 7,
  AFL_ERR_NOT_GRASSMANNIAN = 8,
  AFL_ERR_NOT_A_COVER = 9,
  AFL_ERR_WORD_IS_REDUCED = 10,
  AFL_ERR_MARK_NOT_REDUCED = 11,
  AFL_ERR_FULL_SET = 12,
  AFL_ERR_MARK_ABSENT = 13,
  AFL_ERR_NOT_V_MARKED = 14,
  AFL_ERR_NOT_REDUCED = 15,
  AFL_ERR_NOT_RIGHT_R_COVER = 16,
  AFL_ERR_NOT_LEFT_R_COVER = 17,
  AFL_ERR_INVALID_DECOMPOSITION = 18,
  AFL_ERR_DEGREE_MISMATCH = 19,
  AFL_ERR_SYMMETRY_VIOLATION = 20,
  AFL_ERR_SINGULAR_SYSTEM = 21,
  AFL_ERR_IDENTITY_INPUT = 22,
  AFL_ERR_INTERNAL = 23,
  AFL_ERR_NULL_ARGUMENT = 24
} afl_status;

/* Broad class of a status, used for process exit codes. */
typedef enum afl_status_class {
  AFL_CLASS_OK = 0,
  AFL_CLASS_FAILURE = 1, /* internal error or a violated identity */
  AFL_CLASS_USAGE = 2,   /* unparsable or invalid input objects */
  AFL_CLASS_DOMAIN = 3   /* valid objects violating a precondition */
} afl_status_class;

AFL_API const char* afl_status_name(afl_status status);
AFL_API afl_status_class afl_status_classify(afl_status status);
AFL_API const char* afl_last_error(void);

AFL_API void afl_string_free(char* text);

/* ---- elements ---------------------------------------------------------- */

AFL_API afl_status afl_perm_from_window(int n, const int64_t* values,
                                        size_t count, afl_perm** out);
/* "[2,3,0,5]"; n <= 0 takes the period from the window. */
AFL_API afl_status afl_perm_parse(int n, const char* window, afl_perm** out);
/* Product of simple reflections, e.g. "3410321042". */
AFL_API afl_status afl_perm_from_word(int n, const char* word, afl_perm** out);
AFL_API afl_status afl_perm_identity(int n, afl_perm** out);
AFL_API void afl_perm_free(afl_perm* w);

AFL_API int afl_perm_period(const afl_perm* w);
/* Copies up to `capacity` entries; *count receives n. */
AFL_API afl_status afl_perm_window(const afl_perm* w, int64_t* buffer,
                                   size_t capacity, size_t* count);
AFL_API afl_status afl_perm_length(const afl_perm* w, int64_t* out);
AFL_API afl_status afl_perm_to_string(const afl_perm* w, char** out);
AFL_API afl_status afl_perm_multiply(const afl_perm* u, const afl_perm* v,
                                     afl_perm** out);
AFL_API afl_status afl_perm_inverse(const afl_perm* w, afl_perm** out);
AFL_API afl_status afl_chevalley_coefficient(const afl_perm* v,
                                             const afl_perm* w, int64_t r,
                                             int64_t* out);

/* ---- JSON-valued operations -------------------------------------------- */

/*
 * {"n":4,"v":"[..]","length":3,"residue":2|null,
 *  "covers":[{"window":"[..]","reflection":"t(a,b)"}],   (residue null)
 *  "right":[...],"left":[...],                             (residue given)
 *  "chevalley":[{"window":..,"reflection":..,"coefficient":c}]}
 * The chevalley list holds every cover with a nonzero coefficient for r.
 */
AFL_API afl_status afl_covers_json(const afl_perm* v, int has_residue,
                                   int64_t r, char** out);

/* {"n":..,"window":"[..]","length":..,"words":["..",..]} */
AFL_API afl_status afl_reduced_words_json(const afl_perm* w, char** out);

/*
 * Affine Little trace from a reduced v-marked word "word@mark":
 * {"n":..,"v":"[..]","rows":[{"word":"..","mark":k,"p":..,"q":..},..],
 *  "result":{"word":"..","mark":k,"window":"[..]"}}
 * The first row is the input; p and q are literal (not shifted).
 */
AFL_API afl_status afl_little_trace_json(const afl_perm* v,
                                         const char* marked_word, char** out);

/*
 * Generalized Little map on a decomposition "21/2" of a right r-cover of v
 * (or of a left r-cover with inverse != 0):
 * {"n":..,"v":..,"r":..,"input":{"factors":[..],"window":..},
 *  "output":{"factors":[..],"window":..},"composition":[..]}
 */
AFL_API afl_status afl_generalized_little_json(const afl_perm* v, int64_t r,
                                               const char* decomposition,
                                               int inverse, char** out);

/*
 * {"n":..,"degree":..,"window":"[..]","table":{"2,1,1":3,...}}
 */
AFL_API afl_status afl_stanley_table_json(const afl_perm* w, char** out);

/*
 * {"n":..,"degree":..,"window":"[..]","zero_residual":true,
 *  "coefficients":{"2,1,1":"1/1",...}}
 */
AFL_API afl_status afl_expand_json(const afl_perm* w, char** out);

/*
 * which: "chevalley" | "garsia-little" | "bijection" | "all".
 * {"n":..,"max_length":..,"seed":..,"samples":..,"all_passed":bool,
 *  "suites":[{"name":..,"instances":..,"passed":..,"failures":[..]}]}
 */
AFL_API afl_status afl_verify_json(int n, int max_length, const char* which,
                                   uint64_t seed, int samples, char** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  /* AFFINE_LITTLE_H_ */
