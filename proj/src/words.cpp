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

#include "affine/words.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace affine {
namespace {

// Prefix products P[k] = s_{a_1} ... s_{a_k}, k = 0..l.
std::vector<AffinePermutation> prefix_products(const Word& a) {
  std::vector<AffinePermutation> out;
  out.reserve(a.size() + 1);
  out.push_back(AffinePermutation::identity(a.n));
  for (int letter : a.letters) {
    out.push_back(right_multiply_simple(out.back(), letter));
  }
  return out;
}

// Suffix products S[k] = s_{a_{k+1}} ... s_{a_l}, k = 0..l.
std::vector<AffinePermutation> suffix_products(const Word& a) {
  std::vector<AffinePermutation> out(a.size() + 1,
                                     AffinePermutation::identity(a.n));
  for (std::size_t k = a.size(); k-- > 0;) {
    out[k] = left_multiply_simple(a.letters[k], out[k + 1]);
  }
  return out;
}

void collect_reduced_words(const AffinePermutation& w, std::vector<int>& suffix,
                           std::vector<Word>& out) {
  if (length(w) == 0) {
    out.push_back(Word{w.n(), {suffix.rbegin(), suffix.rend()}});
    return;
  }
  for (int i = 0; i < w.n(); ++i) {
    if (!has_right_descent(w, i)) continue;
    suffix.push_back(i);
    collect_reduced_words(right_multiply_simple(w, i), suffix, out);
    suffix.pop_back();
  }
}

std::uint64_t count_words_memo(
    const AffinePermutation& w,
    std::unordered_map<AffinePermutation, std::uint64_t>& memo) {
  if (length(w) == 0) return 1;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (int i = 0; i < w.n(); ++i) {
    if (has_right_descent(w, i)) {
      total += count_words_memo(right_multiply_simple(w, i), memo);
    }
  }
  memo.emplace(w, total);
  return total;
}

}  // namespace

Word Word::make(int n, std::vector<int> letters) {
  if (n < 2) fail(ErrorCode::kBadIndex, "words need n >= 2");
  for (int x : letters) {
    if (x < 0 || x >= n) {
      fail(ErrorCode::kBadIndex, "letter " + std::to_string(x) +
                                     " out of range for n = " +
                                     std::to_string(n));
    }
  }
  return Word{n, std::move(letters)};
}

Word delete_letter(const Word& a, std::size_t index) {
  if (index < 1 || index > a.size()) {
    fail(ErrorCode::kBadIndex, "position " + std::to_string(index) +
                                   " outside word of length " +
                                   std::to_string(a.size()));
  }
  Word out = a;
  out.letters.erase(out.letters.begin() +
                    static_cast<std::ptrdiff_t>(index - 1));
  return out;
}

AffinePermutation evaluate(const Word& a) {
  AffinePermutation w = AffinePermutation::identity(a.n);
  for (int letter : a.letters) w = right_multiply_simple(w, letter);
  return w;
}

bool is_reduced(const Word& a) {
  // Each prefix must climb: w s_i > w iff w(i) < w(i+1).
  AffinePermutation w = AffinePermutation::identity(a.n);
  for (int letter : a.letters) {
    if (has_right_descent(w, letter)) return false;
    w = right_multiply_simple(w, letter);
  }
  return true;
}

std::vector<Word> reduced_words(const AffinePermutation& w) {
  std::vector<Word> out;
  std::vector<int> suffix;
  collect_reduced_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_reduced_words(const AffinePermutation& w) {
  std::unordered_map<AffinePermutation, std::uint64_t> memo;
  return count_words_memo(w, memo);
}

std::size_t marked_index(const Word& a, const AffinePermutation& v) {
  if (v.n() != a.n) fail(ErrorCode::kMismatchedPeriod, "period mismatch");
  if (!is_reduced(a) || length(v) + 1 != static_cast<std::int64_t>(a.size())) {
    fail(ErrorCode::kNotACover, "word does not evaluate to a cover of v");
  }
  const auto prefix = prefix_products(a);
  const auto suffix = suffix_products(a);
  std::size_t found = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    if (multiply(prefix[i - 1], suffix[i]) == v) {
      if (found != 0) {
        fail(ErrorCode::kInternal, "strong exchange index is not unique");
      }
      found = i;
    }
  }
  if (found == 0) {
    fail(ErrorCode::kNotACover, "no single deletion of the word yields v");
  }
  return found;
}

std::size_t insertion_index(const Word& a, std::size_t i) {
  if (i < 1 || i > a.size()) {
    fail(ErrorCode::kBadIndex, "mark outside the word");
  }
  if (is_reduced(a)) fail(ErrorCode::kWordIsReduced, "word is reduced");
  const Word marked = delete_letter(a, i);
  if (!is_reduced(marked)) {
    fail(ErrorCode::kMarkNotReduced, "deleting the mark does not give a "
                                     "reduced word");
  }
  std::size_t found = 0;
  for (std::size_t j = 1; j <= a.size(); ++j) {
    if (j == i || !is_reduced(delete_letter(a, j))) continue;
    if (found != 0) {
      fail(ErrorCode::kInternal, "insertion index is not unique");
    }
    found = j;
  }
  if (found == 0 || evaluate(delete_letter(a, found)) != evaluate(marked)) {
    fail(ErrorCode::kInternal, "insertion index missing");
  }
  return found;
}

bool is_cyclically_decreasing(const Word& a) {
  const int n = a.n;
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < a.size(); ++k) {
    int& slot = position[static_cast<std::size_t>(a.letters[k])];
    if (slot >= 0) return false;
    slot = static_cast<int>(k);
  }
  for (int i = 0; i < n; ++i) {
    const int here = position[static_cast<std::size_t>(i)];
    const int next = position[static_cast<std::size_t>((i + 1) % n)];
    // i+1 must precede i.
    if (here >= 0 && next >= 0 && next > here) return false;
  }
  return true;
}

CyclicSubset CyclicSubset::make(int n, const std::vector<int>& members) {
  if (n < 2 || n > 64) fail(ErrorCode::kBadIndex, "n must lie in [2, 64]");
  std::uint64_t mask = 0;
  for (int x : members) {
    if (x < 0 || x >= n) {
      fail(ErrorCode::kBadIndex, "residue " + std::to_string(x) +
                                     " out of range");
    }
    mask |= std::uint64_t{1} << x;
  }
  return from_mask(n, mask);
}

CyclicSubset CyclicSubset::from_mask(int n, std::uint64_t mask) {
  if (n < 2 || n > 64) fail(ErrorCode::kBadIndex, "n must lie in [2, 64]");
  const std::uint64_t full =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if ((mask & ~full) != 0) fail(ErrorCode::kBadIndex, "mask exceeds n");
  if (mask == full) fail(ErrorCode::kFullSet, "subset is all of Z/nZ");
  return CyclicSubset(n, mask);
}

bool CyclicSubset::contains(int i) const noexcept {
  const auto r = static_cast<int>(residue(i, n_));
  return ((mask_ >> r) & 1U) != 0;
}

int CyclicSubset::size() const noexcept { return std::popcount(mask_); }

std::vector<int> CyclicSubset::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

CyclicSubset CyclicSubset::with(int i) const {
  return from_mask(n_, mask_ | (std::uint64_t{1} << residue(i, n_)));
}

CyclicSubset CyclicSubset::without(int i) const {
  return from_mask(n_, mask_ & ~(std::uint64_t{1} << residue(i, n_)));
}

std::vector<int> CyclicInterval::members(int n) const {
  std::vector<int> out;
  for (int k = 0; k < size; ++k) out.push_back((first + k) % n);
  return out;
}

std::vector<int> CyclicInterval::word(int n) const {
  std::vector<int> out = members(n);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<CyclicInterval> maximal_cyclic_intervals(const CyclicSubset& a) {
  const int n = a.n();
  std::vector<CyclicInterval> out;
  for (int i = 0; i < n; ++i) {
    if (!a.contains(i) || a.contains(i - 1)) continue;
    int size = 1;
    while (a.contains(i + size)) ++size;
    out.push_back(CyclicInterval{i, size});
  }
  std::sort(out.begin(), out.end(),
            [](const CyclicInterval& x, const CyclicInterval& y) {
              return x.first > y.first;
            });
  return out;
}

Word canonical_cd_word(const CyclicSubset& a) {
  Word out{a.n(), {}};
  for (const CyclicInterval& interval : maximal_cyclic_intervals(a)) {
    const std::vector<int> part = interval.word(a.n());
    out.letters.insert(out.letters.end(), part.begin(), part.end());
  }
  return out;
}

AffinePermutation cd_element(const CyclicSubset& a) {
  return evaluate(canonical_cd_word(a));
}

Word some_reduced_word(const AffinePermutation& w) {
  std::vector<int> letters;
  AffinePermutation cur = w;
  for (std::int64_t remaining = length(w); remaining > 0; --remaining) {
    int letter = 0;
    while (!has_right_descent(cur, letter)) ++letter;
    letters.push_back(letter);
    cur = right_multiply_simple(cur, letter);
  }
  std::reverse(letters.begin(), letters.end());
  return Word{w.n(), std::move(letters)};
}

std::optional<CyclicSubset> cd_subset(const AffinePermutation& w) {
  if (w.n() < 2 || length(w) >= w.n()) return std::nullopt;
  // Either every reduced word of w is cyclically decreasing or none is.
  const Word a = some_reduced_word(w);
  if (!is_cyclically_decreasing(a)) return std::nullopt;
  return CyclicSubset::make(w.n(), a.letters);
}

}  // namespace affine
