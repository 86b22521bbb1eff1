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

#ifndef AFFINE_WORDS_HPP_
#define AFFINE_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "affine/core.hpp"

namespace affine {

// A word in the simple reflections s_0, ..., s_{n-1}. Letters are residues.
struct Word {
  int n = 2;
  std::vector<int> letters;

  // Throws kBadIndex on a letter outside [0, n-1] or n < 2.
  static Word make(int n, std::vector<int> letters);

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  // 1-based, matching marks.
  int at(std::size_t index) const { return letters.at(index - 1); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

// Removes the letter at a 1-based position.
Word delete_letter(const Word& a, std::size_t index);

AffinePermutation evaluate(const Word& a);
bool is_reduced(const Word& a);

// R(w), sorted lexicographically.
std::vector<Word> reduced_words(const AffinePermutation& w);
// |R(w)| without materializing the list.
std::uint64_t count_reduced_words(const AffinePermutation& w);

// The unique i with a_1 ... (a_i omitted) ... a_l in R(v), for reduced a with
// evaluate(a) covering v. Throws kNotACover otherwise.
std::size_t marked_index(const Word& a, const AffinePermutation& v);

// For non-reduced a whose i-deletion is reduced: the unique j != i whose
// deletion is also reduced. Both deletions evaluate to the same element.
// Throws kWordIsReduced or kMarkNotReduced.
std::size_t insertion_index(const Word& a, std::size_t i);

bool is_cyclically_decreasing(const Word& a);

// A proper subset of Z/nZ, held as a bit mask (n <= 64).
class CyclicSubset {
 public:
  // Throws kBadIndex on out-of-range members and kFullSet if every residue
  // is present.
  static CyclicSubset make(int n, const std::vector<int>& members);
  static CyclicSubset from_mask(int n, std::uint64_t mask);

  int n() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int i) const noexcept;
  int size() const noexcept;
  std::vector<int> members() const;  // increasing

  CyclicSubset with(int i) const;
  CyclicSubset without(int i) const;

  friend bool operator==(const CyclicSubset&, const CyclicSubset&) = default;
  friend auto operator<=>(const CyclicSubset&, const CyclicSubset&) = default;

 private:
  CyclicSubset(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
  int n_ = 2;
  std::uint64_t mask_ = 0;
};

// {first, first+1, ..., first+size-1} mod n.
struct CyclicInterval {
  int first = 0;
  int size = 0;

  std::vector<int> members(int n) const;
  // (first+size-1) ... (first+1) first
  std::vector<int> word(int n) const;

  friend bool operator==(const CyclicInterval&,
                         const CyclicInterval&) = default;
};

// Maximal runs of A, sorted by first element descending.
std::vector<CyclicInterval> maximal_cyclic_intervals(const CyclicSubset& a);

// Interval words concatenated in the order of maximal_cyclic_intervals.
Word canonical_cd_word(const CyclicSubset& a);
// w(A); ell(w(A)) = |A|.
AffinePermutation cd_element(const CyclicSubset& a);
// The letter set A of w = w(A), or nullopt if w is not cyclically decreasing.
std::optional<CyclicSubset> cd_subset(const AffinePermutation& w);

// One reduced word of w, found by peeling the smallest right descent.
Word some_reduced_word(const AffinePermutation& w);

}  // namespace affine

#endif  // AFFINE_WORDS_HPP_
