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

#include "affine/little.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace affine {
namespace {

void require_v_marked(const AffinePermutation& v, const MarkedWord& m) {
  if (!is_v_marked(v, m)) {
    fail(ErrorCode::kNotVMarked, "deleting position " +
                                     std::to_string(m.mark) +
                                     " does not give a reduced word for v");
  }
}

int shifted_letter(int letter, int delta, int n) {
  return static_cast<int>(residue(letter + delta, n));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

// Vertices of the affine Little graph with words of length l: a letter
// inserted somewhere into a reduced word of v.
std::uint64_t vertex_bound(const AffinePermutation& v, std::size_t l) {
  std::uint64_t bound = count_reduced_words(v);
  bound = saturating_mul(bound, l);
  bound = saturating_mul(bound, static_cast<std::uint64_t>(v.n()));
  return saturating_mul(bound, l);
}

template <typename Step>
PhiRun walk(const AffinePermutation& v, const MarkedWord& m, Step step) {
  require_v_marked(v, m);
  if (!is_reduced(m.word)) fail(ErrorCode::kNotReduced, "word is not reduced");
  const std::uint64_t cap = vertex_bound(v, m.word.size());
  PhiRun run{m, {}};
  MarkedWord cur = m;
  for (std::uint64_t steps = 1;; ++steps) {
    if (steps > cap) {
      fail(ErrorCode::kInternal, "affine Little walk exceeded its cycle bound");
    }
    cur = step(v, cur);
    run.path.push_back(cur);
    if (is_reduced(cur.word)) break;
  }
  run.result = cur;
  return run;
}

struct Position {
  std::size_t factor;
  int letter;
};

Position locate(const std::vector<CyclicSubset>& factors, std::size_t index) {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Word part = canonical_cd_word(factors[k]);
    if (index <= offset + part.size()) {
      return Position{k, part.at(index - offset)};
    }
    offset += part.size();
  }
  fail(ErrorCode::kInternal, "position outside the decomposition");
}

std::size_t position_of(const std::vector<CyclicSubset>& factors,
                        Position pos) {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < pos.factor; ++k) offset += factors[k].size();
  const Word part = canonical_cd_word(factors[pos.factor]);
  const auto it = std::find(part.letters.begin(), part.letters.end(),
                            pos.letter);
  if (it == part.letters.end()) {
    fail(ErrorCode::kInternal, "marked letter missing from its factor");
  }
  return offset + static_cast<std::size_t>(it - part.letters.begin()) + 1;
}

void validate(const AlphaDecomposition& d) {
  for (const CyclicSubset& a : d.factors) {
    if (a.n() != d.n || a.size() == 0) {
      fail(ErrorCode::kInvalidDecomposition, "factor is empty or has the "
                                             "wrong period");
    }
  }
  if (!d.is_valid()) {
    fail(ErrorCode::kInvalidDecomposition, "factor lengths do not add");
  }
}

std::uint64_t decomposition_bound(const AlphaDecomposition& d) {
  std::uint64_t bound = 1;
  for (const CyclicSubset& a : d.factors) {
    std::uint64_t choose = 1;
    for (int k = 0; k < a.size(); ++k) {
      choose = choose * static_cast<std::uint64_t>(d.n - k) /
               static_cast<std::uint64_t>(k + 1);
    }
    bound = saturating_mul(bound, choose);
  }
  return saturating_mul(bound, d.concatenated_word().size() + 1);
}

template <typename Step>
AlphaDecomposition run_generalized(const AffinePermutation& v,
                                   const AlphaDecomposition& d, Step step) {
  std::vector<CyclicSubset> factors = d.factors;
  Position pos = locate(factors, marked_index(d.concatenated_word(), v));
  const std::uint64_t cap = decomposition_bound(d);
  for (std::uint64_t steps = 1;; ++steps) {
    if (steps > cap) {
      fail(ErrorCode::kInternal, "generalized Little walk did not terminate");
    }
    const MarkedSubset moved = step(MarkedSubset{factors[pos.factor],
                                                 pos.letter});
    factors[pos.factor] = moved.set;
    pos.letter = moved.mark;
    AlphaDecomposition current{d.n, factors};
    const Word word = current.concatenated_word();
    if (is_reduced(word)) return current;
    const Position next =
        locate(factors, insertion_index(word, position_of(factors, pos)));
    if (next.factor == pos.factor) {
      fail(ErrorCode::kInternal, "insertion stayed inside one factor");
    }
    pos = next;
  }
}

}  // namespace

bool is_v_marked(const AffinePermutation& v, const MarkedWord& m) {
  if (m.word.n != v.n() || m.mark < 1 || m.mark > m.word.size()) return false;
  if (length(v) + 1 != static_cast<std::int64_t>(m.word.size())) return false;
  const Word rest = delete_letter(m.word, m.mark);
  return is_reduced(rest) && evaluate(rest) == v;
}

MarkedWord forward_step(const AffinePermutation& v, const MarkedWord& m) {
  require_v_marked(v, m);
  MarkedWord next = m;
  int& letter = next.word.letters[m.mark - 1];
  letter = shifted_letter(letter, -1, v.n());
  if (!is_reduced(next.word)) next.mark = insertion_index(next.word, m.mark);
  return next;
}

MarkedWord backward_step(const AffinePermutation& v, const MarkedWord& m) {
  require_v_marked(v, m);
  const std::size_t k =
      is_reduced(m.word) ? m.mark : insertion_index(m.word, m.mark);
  MarkedWord prev{m.word, k};
  int& letter = prev.word.letters[k - 1];
  letter = shifted_letter(letter, 1, v.n());
  return prev;
}

PhiRun phi(const AffinePermutation& v, const MarkedWord& m) {
  return walk(v, m, forward_step);
}

PhiRun phi_inverse(const AffinePermutation& v, const MarkedWord& m) {
  return walk(v, m, backward_step);
}

PQPair::PQPair(int n, std::int64_t p, std::int64_t q) : n_(n), p_(p), q_(q) {
  if (n < 1 || residue(p - q, n) == 0) {
    fail(ErrorCode::kCongruentPair, "p and q are congruent mod n");
  }
}

PQPair PQPair::canonical() const {
  const std::int64_t low = std::min(p_, q_);
  std::int64_t k = (low - 1) / n_;
  if ((low - 1) % n_ < 0) --k;
  return PQPair(n_, p_ - k * n_, q_ - k * n_);
}

bool operator==(const PQPair& x, const PQPair& y) {
  if (x.n_ != y.n_) return false;
  const PQPair a = x.canonical();
  const PQPair b = y.canonical();
  return a.p_ == b.p_ && a.q_ == b.q_;
}

PQPair pq(const AffinePermutation& v, const MarkedWord& m) {
  require_v_marked(v, m);
  Word tail{m.word.n, {m.word.letters.begin() +
                           static_cast<std::ptrdiff_t>(m.mark),
                       m.word.letters.end()}};
  const AffinePermutation y_inv = inverse(evaluate(tail));
  const int t = m.word.at(m.mark);
  return PQPair(v.n(), y_inv(t), y_inv(t + 1));
}

PhiRResult phi_r(const AffinePermutation& v, std::int64_t r, const Word& a) {
  if (a.n != v.n() || !is_reduced(a)) {
    fail(ErrorCode::kNotRightRCover, "word is not a reduced word of a cover");
  }
  const AffinePermutation w = evaluate(a);
  const auto t = cover_reflection(v, w);
  if (!t || residue(t->a - r, v.n()) != 0) {
    fail(ErrorCode::kNotRightRCover,
         "word does not evaluate to a right " + std::to_string(r) +
             "-cover of v");
  }
  MarkedWord start{a, marked_index(a, v)};
  PhiRun run = phi(v, start);
  return PhiRResult{evaluate(run.result.word), run.result.word,
                    std::move(start), std::move(run)};
}

PhiRResult phi_r_inverse(const AffinePermutation& v, std::int64_t r,
                         const Word& c) {
  if (c.n != v.n() || !is_reduced(c)) {
    fail(ErrorCode::kNotLeftRCover, "word is not a reduced word of a cover");
  }
  const AffinePermutation u = evaluate(c);
  const auto t = cover_reflection(v, u);
  if (!t || residue(t->b - r, v.n()) != 0) {
    fail(ErrorCode::kNotLeftRCover,
         "word does not evaluate to a left " + std::to_string(r) +
             "-cover of v");
  }
  MarkedWord start{c, marked_index(c, v)};
  PhiRun run = phi_inverse(v, start);
  return PhiRResult{evaluate(run.result.word), run.result.word,
                    std::move(start), std::move(run)};
}

MarkedSubset cd_cover_step(const MarkedSubset& ms) {
  const CyclicSubset& a = ms.set;
  if (!a.contains(ms.mark)) {
    fail(ErrorCode::kMarkAbsent, "mark is not in the subset");
  }
  int run = 0;
  while (a.contains(ms.mark - run - 1)) ++run;
  const int fresh = static_cast<int>(residue(ms.mark - run - 1, a.n()));
  return MarkedSubset{a.without(ms.mark).with(fresh), fresh};
}

MarkedSubset inverse_cd_cover_step(const MarkedSubset& ms) {
  const CyclicSubset& a = ms.set;
  if (!a.contains(ms.mark)) {
    fail(ErrorCode::kMarkAbsent, "mark is not in the subset");
  }
  int run = 0;
  while (a.contains(ms.mark + run + 1)) ++run;
  const int fresh = static_cast<int>(residue(ms.mark + run + 1, a.n()));
  return MarkedSubset{a.without(ms.mark).with(fresh), fresh};
}

std::vector<int> AlphaDecomposition::composition() const {
  std::vector<int> out;
  for (const CyclicSubset& a : factors) out.push_back(a.size());
  return out;
}

Word AlphaDecomposition::concatenated_word() const {
  Word out{n, {}};
  for (const CyclicSubset& a : factors) {
    const Word part = canonical_cd_word(a);
    out.letters.insert(out.letters.end(), part.letters.begin(),
                       part.letters.end());
  }
  return out;
}

AffinePermutation AlphaDecomposition::product() const {
  return evaluate(concatenated_word());
}

bool AlphaDecomposition::is_valid() const {
  return std::all_of(factors.begin(), factors.end(),
                     [&](const CyclicSubset& a) { return a.n() == n; }) &&
         is_reduced(concatenated_word());
}

AlphaDecomposition generalized_little(const AffinePermutation& v,
                                      std::int64_t r,
                                      const AlphaDecomposition& d) {
  validate(d);
  const auto t = cover_reflection(v, d.product());
  if (!t || residue(t->a - r, v.n()) != 0) {
    fail(ErrorCode::kNotRightRCover,
         "decomposition is not of a right " + std::to_string(r) +
             "-cover of v");
  }
  return run_generalized(v, d, cd_cover_step);
}

AlphaDecomposition inverse_generalized_little(const AffinePermutation& v,
                                              std::int64_t r,
                                              const AlphaDecomposition& d) {
  validate(d);
  const auto t = cover_reflection(v, d.product());
  if (!t || residue(t->b - r, v.n()) != 0) {
    fail(ErrorCode::kNotLeftRCover,
         "decomposition is not of a left " + std::to_string(r) +
             "-cover of v");
  }
  return run_generalized(v, d, inverse_cd_cover_step);
}

}  // namespace affine
