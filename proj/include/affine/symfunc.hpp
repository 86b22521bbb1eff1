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

#ifndef AFFINE_SYMFUNC_HPP_
#define AFFINE_SYMFUNC_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "affine/core.hpp"
#include "affine/little.hpp"
#include "affine/words.hpp"

namespace affine {

using Rational = boost::multiprecision::cpp_rational;

struct Composition {
  std::vector<int> parts;  // positive

  int degree() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// Compositions / partitions of `degree` with every part <= max_part.
std::vector<Composition> compositions(int degree, int max_part);
std::vector<Partition> partitions(int degree, int max_part);

// Monomial coefficients of a degree-homogeneous symmetric function, one
// entry per partition of `degree` with parts <= n-1. Monomials with a part
// >= n are zero in this quotient, so they are not stored.
class CoefficientTable {
 public:
  static CoefficientTable zero(int n, int degree);

  int n() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const std::map<Partition, std::int64_t>& entries() const noexcept {
    return entries_;
  }

  // Throws kBadIndex if the partition is not a key of this table.
  std::int64_t at(const Partition& lambda) const;
  void set(const Partition& lambda, std::int64_t value);

  // Same n and degree required (kMismatchedPeriod / kDegreeMismatch).
  CoefficientTable& add(const CoefficientTable& other,
                        std::int64_t scale = 1);

  friend bool operator==(const CoefficientTable&,
                         const CoefficientTable&) = default;

 private:
  CoefficientTable(int n, int degree) : n_(n), degree_(degree) {}
  int n_;
  int degree_;
  std::map<Partition, std::int64_t> entries_;
};

// Counts alpha-decompositions by peeling cyclically decreasing factors off
// the right, memoized on (element, remaining prefix of alpha). One instance
// per job; not thread-safe.
class DecompositionCounter {
 public:
  explicit DecompositionCounter(int n);

  std::int64_t count(const AffinePermutation& w, std::span<const int> alpha);

 private:
  struct Factor {
    CyclicSubset set;
    AffinePermutation inverse;
  };

  int n_;
  std::vector<std::vector<Factor>> by_size_;
  std::map<std::pair<AffinePermutation, std::vector<int>>, std::int64_t> memo_;
};

// Every alpha-decomposition of w, sorted. Throws kDegreeMismatch.
std::vector<AlphaDecomposition> alpha_decompositions(const AffinePermutation& w,
                                                     const Composition& alpha);
// [x^alpha] F_w. Throws kDegreeMismatch.
std::int64_t coefficient(const AffinePermutation& w, const Composition& alpha);

// F_w as a table. Every composition is counted and rearrangements must
// agree; kSymmetryViolation otherwise.
CoefficientTable stanley_table(const AffinePermutation& w);

// s_1 * F, computed monomial-wise: the coefficient at beta sums the input
// coefficients at beta minus one box in each position.
CoefficientTable multiply_by_s1(const CoefficientTable& t);

struct IdentityReport {
  CoefficientTable lhs;
  CoefficientTable rhs;
  bool holds = false;
};

// lhs = sum over Psi^-_r(v), rhs = sum over Psi^+_r(v); pure counting.
IdentityReport check_garsia_little(const AffinePermutation& v, std::int64_t r);
// lhs = s_1 F_v, rhs = sum over covers w of c^w_{s_r,v} F_w.
IdentityReport check_chevalley(const AffinePermutation& v, std::int64_t r);

struct BasisElement {
  AffinePermutation element;
  Partition label;
  CoefficientTable table;
};

// Grassmannian elements of length l with their theta labels, sorted by label.
std::vector<BasisElement> affine_schur_basis(int n, int l);

struct ExpansionResult {
  std::map<Partition, Rational> coefficients;  // nonzero entries only
  bool zero_residual = false;
};

// Solves F_w = sum_lambda a^lambda F_lambda over the affine Schur basis of
// degree ell(w) with exact rational elimination. Throws kSingularSystem.
ExpansionResult expand_in_affine_schur(const AffinePermutation& w);

// Lascoux-Schutzenberger data of a finite permutation in one-line notation
// (values 1..n). Positions are 1-based.
struct LsData {
  int r = 0;
  int s = 0;
  std::vector<int> indices;  // I
};

// Throws kIdentityInput for the identity, kBadIndex for a non-permutation.
LsData ls_data(const std::vector<int>& sigma);
// Children pi t_{i,r} for i in I with pi = sigma t_{r,s}, or the single
// child 1 (x) sigma when I is empty.
std::vector<std::vector<int>> ls_children(const std::vector<int>& sigma);

}  // namespace affine

#endif  // AFFINE_SYMFUNC_HPP_
