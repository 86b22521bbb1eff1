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

#ifndef AFFINE_CORE_HPP_
#define AFFINE_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affine/error.hpp"

namespace affine {

// An element of the affine symmetric group, stored by its window
// [w(1), ..., w(n)]. The rest of the bijection Z -> Z is implied by
// w(i + kn) = w(i) + kn. Instances are always valid: the residues of the
// window are distinct mod n and the window sums to n(n+1)/2.
class AffinePermutation {
 public:
  static AffinePermutation identity(int n);

  // Throws kBadLength, kDuplicateResidue or kBadSum.
  static AffinePermutation from_window(int n,
                                       std::span<const std::int64_t> values);

  int n() const noexcept { return n_; }
  const std::vector<std::int64_t>& window() const noexcept { return window_; }

  std::int64_t operator()(std::int64_t i) const noexcept;

  friend bool operator==(const AffinePermutation&,
                         const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&,
                          const AffinePermutation&) = default;

 private:
  AffinePermutation(int n, std::vector<std::int64_t> window)
      : n_(n), window_(std::move(window)) {}

  int n_ = 1;
  std::vector<std::int64_t> window_;

  friend AffinePermutation multiply(const AffinePermutation&,
                                    const AffinePermutation&);
  friend AffinePermutation inverse(const AffinePermutation&);
  friend AffinePermutation right_multiply_simple(const AffinePermutation&,
                                                 int);
  friend AffinePermutation transposition_element(int, std::int64_t,
                                                 std::int64_t);
};

// Canonical transposition t_{a,b}: a < b, b != a (mod n), a in [1, n].
struct Reflection {
  int n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  // Accepts any (r, s) with s != r (mod n), in either order.
  static Reflection make(int n, std::int64_t r, std::int64_t s);

  friend bool operator==(const Reflection&, const Reflection&) = default;
  friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int degree() const;
  static Partition from_parts(std::vector<int> parts);  // sorts, drops zeros

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

struct Cover {
  AffinePermutation element;
  Reflection reflection;
};

// Floor-mod into [0, n).
inline std::int64_t residue(std::int64_t x, int n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t apply(const AffinePermutation& w, std::int64_t i);

// (uv)(i) = u(v(i)). Throws kMismatchedPeriod.
AffinePermutation multiply(const AffinePermutation& u,
                           const AffinePermutation& v);
AffinePermutation inverse(const AffinePermutation& w);

// s_i = t_{i,i+1}; throws kBadIndex unless 0 <= i < n (and n >= 2).
AffinePermutation simple(int n, int i);

// w * s_i without building s_i.
AffinePermutation right_multiply_simple(const AffinePermutation& w, int i);
AffinePermutation left_multiply_simple(int i, const AffinePermutation& w);

// Throws kCongruentPair when s == r (mod n).
AffinePermutation transposition_element(int n, std::int64_t r, std::int64_t s);
AffinePermutation reflection_element(const Reflection& t);

// Number of inversions (i, j) with 1 <= i <= n, j > i, w(i) > w(j).
std::int64_t length(const AffinePermutation& w);

// ell(w s_i) < ell(w), i.e. w(i) > w(i+1).
bool has_right_descent(const AffinePermutation& w, int i);
// ell(s_i w) < ell(w).
bool has_left_descent(const AffinePermutation& w, int i);

// All covers w = v t_{a,b} of v, ordered by (a, b).
std::vector<Cover> covers_above(const AffinePermutation& v);
// Psi^+_r(v): covers with a == r (mod n).
std::vector<Cover> right_r_covers(const AffinePermutation& v, std::int64_t r);
// Psi^-_r(v): covers with b == r (mod n).
std::vector<Cover> left_r_covers(const AffinePermutation& v, std::int64_t r);

// The reflection t with w = v t, provided w covers v.
std::optional<Reflection> cover_reflection(const AffinePermutation& v,
                                           const AffinePermutation& w);

// c^w_{s_r, v}: zero unless w covers v; otherwise, for w = v t_{a,b}, the
// number of integers in [a, b-1] congruent to r mod n.
std::int64_t chevalley_coefficient(const AffinePermutation& v,
                                   const AffinePermutation& w, std::int64_t r);

// Minimal length coset representative for the finite S_n (increasing window).
bool is_grassmannian(const AffinePermutation& w);

// theta: Grassmannian element -> (n-1)-bounded partition of ell(w).
//
// The element acts on the empty partition through any reduced word, read
// right to left; s_i adds every addable box whose residue (col - row) mod n
// is i, which grows an n-core. Row k of the bounded partition counts the
// boxes of core row k with hook length below n. With this orientation
// [-2,1,4,7] -> (2,1,1) and [-1,0,5,6] -> (2,2) for n = 4.
// Throws kNotGrassmannian.
Partition grassmannian_to_partition(const AffinePermutation& w);

// Breadth-first enumeration of every element of length <= max_length,
// sorted by (length, window).
std::vector<AffinePermutation> elements_up_to_length(int n, int max_length);
std::vector<AffinePermutation> elements_of_length(int n, int length);

}  // namespace affine

template <>
struct std::hash<affine::AffinePermutation> {
  std::size_t operator()(const affine::AffinePermutation& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.n());
    for (std::int64_t x : w.window()) {
      h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

#endif  // AFFINE_CORE_HPP_
