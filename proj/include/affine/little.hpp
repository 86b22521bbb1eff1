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

#ifndef AFFINE_LITTLE_HPP_
#define AFFINE_LITTLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "affine/core.hpp"
#include "affine/words.hpp"

namespace affine {

// A word with one distinguished 1-based position. It is v-marked when
// deleting that letter leaves a reduced word for v; v is always passed
// alongside since the same word can be marked for different elements.
struct MarkedWord {
  Word word;
  std::size_t mark = 1;

  friend bool operator==(const MarkedWord&, const MarkedWord&) = default;
  friend auto operator<=>(const MarkedWord&, const MarkedWord&) = default;
};

bool is_v_marked(const AffinePermutation& v, const MarkedWord& m);

// The unique out-edge of the affine Little graph: decrement the marked
// letter mod n, then keep the mark if the word is still reduced, otherwise
// move it to the insertion index. Throws kNotVMarked.
MarkedWord forward_step(const AffinePermutation& v, const MarkedWord& m);

// The unique in-edge, inverse to forward_step. Throws kNotVMarked.
MarkedWord backward_step(const AffinePermutation& v, const MarkedWord& m);

struct PhiRun {
  MarkedWord result;
  std::vector<MarkedWord> path;  // excludes the input, ends with result
};

// Walks forward from a reduced v-marked word to the next reduced one on its
// cycle. Throws kNotVMarked or kNotReduced; kInternal if the walk exceeds
// the number of v-marked words of that length.
PhiRun phi(const AffinePermutation& v, const MarkedWord& m);
// Walks backward to the previous reduced v-marked word; inverse of phi.
PhiRun phi_inverse(const AffinePermutation& v, const MarkedWord& m);

// The pair (p, q) with evaluate(word) = v t_{p,q}. Stored literally;
// comparison is up to simultaneous shift by multiples of n.
class PQPair {
 public:
  PQPair(int n, std::int64_t p, std::int64_t q);

  int n() const noexcept { return n_; }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  // Shifted so that min(p, q) lies in [1, n].
  PQPair canonical() const;

  friend bool operator==(const PQPair& x, const PQPair& y);

 private:
  int n_;
  std::int64_t p_;
  std::int64_t q_;
};

// With y = evaluate(letters after the mark) and t the marked letter:
// p = y^{-1}(t), q = y^{-1}(t+1). Throws kNotVMarked.
PQPair pq(const AffinePermutation& v, const MarkedWord& m);

struct PhiRResult {
  AffinePermutation element;  // lies in Psi^-_r(v)
  Word word;                  // a reduced word of element
  MarkedWord start;           // the input, marked by strong exchange
  PhiRun run;
};

// phi restricted to R(Psi^+_r(v)). Throws kNotRightRCover.
PhiRResult phi_r(const AffinePermutation& v, std::int64_t r, const Word& a);
// Inverse restricted to R(Psi^-_r(v)). Throws kNotLeftRCover.
PhiRResult phi_r_inverse(const AffinePermutation& v, std::int64_t r,
                         const Word& c);

struct MarkedSubset {
  CyclicSubset set;
  int mark = 0;

  friend bool operator==(const MarkedSubset&, const MarkedSubset&) = default;
};

// Let j be maximal with {i, i-1, ..., i-j} in A. Replaces i by i-j-1 and
// marks it. This is phi^{w(A - i)} on cyclically decreasing covers.
// Throws kMarkAbsent.
MarkedSubset cd_cover_step(const MarkedSubset& ms);
// Inverse of cd_cover_step.
MarkedSubset inverse_cd_cover_step(const MarkedSubset& ms);

// A tuple of cyclically decreasing factors w(A_1) ... w(A_m). Valid when the
// lengths add, i.e. the concatenated canonical words form a reduced word.
struct AlphaDecomposition {
  int n = 2;
  std::vector<CyclicSubset> factors;

  std::vector<int> composition() const;
  Word concatenated_word() const;
  AffinePermutation product() const;
  bool is_valid() const;

  friend bool operator==(const AlphaDecomposition&,
                         const AlphaDecomposition&) = default;
  friend auto operator<=>(const AlphaDecomposition&,
                          const AlphaDecomposition&) = default;
};

// The generalized affine Little map from alpha-decompositions over
// Psi^+_r(v) to alpha-decompositions over Psi^-_r(v).
//
// The factor holding the strong-exchange letter takes a cd_cover_step. If
// the factor lengths stop adding, exactly one other (factor, letter) deletes
// back to v; that factor steps next. Repeats until the tuple is reduced.
// Throws kInvalidDecomposition or kNotRightRCover.
AlphaDecomposition generalized_little(const AffinePermutation& v,
                                      std::int64_t r,
                                      const AlphaDecomposition& d);

// Runs the same walk backwards with inverse_cd_cover_step.
// Throws kInvalidDecomposition or kNotLeftRCover.
AlphaDecomposition inverse_generalized_little(const AffinePermutation& v,
                                              std::int64_t r,
                                              const AlphaDecomposition& d);

}  // namespace affine

#endif  // AFFINE_LITTLE_HPP_
