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

#include "affine/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace affine {
namespace {

void extend_compositions(int remaining, int max_part, std::vector<int>& prefix,
                         std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(Composition{prefix});
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    prefix.push_back(part);
    extend_compositions(remaining - part, max_part, prefix, out);
    prefix.pop_back();
  }
}

void extend_partitions(int remaining, int max_part, std::vector<int>& prefix,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<CyclicSubset> proper_subsets_of_size(int n, int size) {
  std::vector<CyclicSubset> out;
  if (size >= n || size < 0) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) == size) {
      out.push_back(CyclicSubset::from_mask(n, mask));
    }
  }
  return out;
}

void require_degree(const AffinePermutation& w, const Composition& alpha) {
  if (alpha.degree() != length(w)) {
    fail(ErrorCode::kDegreeMismatch,
         "composition of " + std::to_string(alpha.degree()) +
             " for an element of length " + std::to_string(length(w)));
  }
}

void peel_left(const AffinePermutation& w, std::span<const int> alpha,
               std::vector<CyclicSubset>& prefix,
               std::vector<AlphaDecomposition>& out) {
  if (alpha.empty()) {
    if (length(w) == 0) out.push_back(AlphaDecomposition{w.n(), prefix});
    return;
  }
  const int size = alpha.front();
  const std::int64_t target = length(w) - size;
  for (const CyclicSubset& a : proper_subsets_of_size(w.n(), size)) {
    AffinePermutation rest = multiply(inverse(cd_element(a)), w);
    if (length(rest) != target) continue;
    prefix.push_back(a);
    peel_left(rest, alpha.subspan(1), prefix, out);
    prefix.pop_back();
  }
}

std::string describe(const Partition& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    if (k != 0) s += ",";
    s += std::to_string(p.parts[k]);
  }
  return s + ")";
}

// Solves m x = b exactly; m is square.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> m,
                                  std::vector<Rational> b) {
  const std::size_t size = b.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot][col] == 0) ++pivot;
    if (pivot == size) {
      fail(ErrorCode::kSingularSystem, "affine Schur tables are dependent");
    }
    std::swap(m[pivot], m[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < size; ++k) m[row][k] -= factor * m[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(size);
  for (std::size_t k = 0; k < size; ++k) x[k] = b[k] / m[k][k];
  return x;
}

}  // namespace

int Composition::degree() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<Composition> compositions(int degree, int max_part) {
  std::vector<Composition> out;
  std::vector<int> prefix;
  if (degree >= 0) extend_compositions(degree, max_part, prefix, out);
  return out;
}

std::vector<Partition> partitions(int degree, int max_part) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (degree >= 0) extend_partitions(degree, max_part, prefix, out);
  return out;
}

CoefficientTable CoefficientTable::zero(int n, int degree) {
  CoefficientTable t(n, degree);
  for (Partition& p : partitions(degree, n - 1)) t.entries_.emplace(p, 0);
  return t;
}

std::int64_t CoefficientTable::at(const Partition& lambda) const {
  const auto it = entries_.find(lambda);
  if (it == entries_.end()) {
    fail(ErrorCode::kBadIndex, describe(lambda) + " is not a key of this "
                                                  "table");
  }
  return it->second;
}

void CoefficientTable::set(const Partition& lambda, std::int64_t value) {
  const auto it = entries_.find(lambda);
  if (it == entries_.end()) {
    fail(ErrorCode::kBadIndex, describe(lambda) + " is not a key of this "
                                                  "table");
  }
  it->second = value;
}

CoefficientTable& CoefficientTable::add(const CoefficientTable& other,
                                        std::int64_t scale) {
  if (other.n_ != n_) fail(ErrorCode::kMismatchedPeriod, "period mismatch");
  if (other.degree_ != degree_) {
    fail(ErrorCode::kDegreeMismatch, "degree mismatch");
  }
  for (auto& [lambda, value] : entries_) value += scale * other.at(lambda);
  return *this;
}

DecompositionCounter::DecompositionCounter(int n) : n_(n) {
  by_size_.resize(static_cast<std::size_t>(std::max(n, 1)));
  for (int size = 1; size < n; ++size) {
    for (const CyclicSubset& a : proper_subsets_of_size(n, size)) {
      by_size_[static_cast<std::size_t>(size)].push_back(
          Factor{a, inverse(cd_element(a))});
    }
  }
}

std::int64_t DecompositionCounter::count(const AffinePermutation& w,
                                         std::span<const int> alpha) {
  if (alpha.empty()) return length(w) == 0 ? 1 : 0;
  const int last = alpha.back();
  if (last < 1 || last >= n_) return 0;
  std::pair<AffinePermutation, std::vector<int>> key{
      w, std::vector<int>(alpha.begin(), alpha.end())};
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

  const std::int64_t target = length(w) - last;
  std::int64_t total = 0;
  if (target >= 0) {
    for (const Factor& f : by_size_[static_cast<std::size_t>(last)]) {
      const AffinePermutation rest = multiply(w, f.inverse);
      if (length(rest) == target) {
        total += count(rest, alpha.first(alpha.size() - 1));
      }
    }
  }
  memo_.emplace(std::move(key), total);
  return total;
}

std::vector<AlphaDecomposition> alpha_decompositions(
    const AffinePermutation& w, const Composition& alpha) {
  require_degree(w, alpha);
  std::vector<AlphaDecomposition> out;
  if (w.n() < 2) return out;
  std::vector<CyclicSubset> prefix;
  peel_left(w, alpha.parts, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t coefficient(const AffinePermutation& w, const Composition& alpha) {
  require_degree(w, alpha);
  DecompositionCounter counter(w.n());
  return counter.count(w, alpha.parts);
}

CoefficientTable stanley_table(const AffinePermutation& w) {
  const int n = w.n();
  const auto degree = static_cast<int>(length(w));
  CoefficientTable table = CoefficientTable::zero(n, degree);
  DecompositionCounter counter(n);
  std::set<Partition> seen;
  for (const Composition& alpha : compositions(degree, n - 1)) {
    const std::int64_t value = counter.count(w, alpha.parts);
    const Partition lambda = Partition::from_parts(alpha.parts);
    if (seen.insert(lambda).second) {
      table.set(lambda, value);
    } else if (table.at(lambda) != value) {
      fail(ErrorCode::kSymmetryViolation,
           "coefficients disagree across rearrangements of " +
               describe(lambda));
    }
  }
  return table;
}

CoefficientTable multiply_by_s1(const CoefficientTable& t) {
  CoefficientTable out = CoefficientTable::zero(t.n(), t.degree() + 1);
  for (const auto& [beta, unused] : out.entries()) {
    std::int64_t total = 0;
    for (std::size_t k = 0; k < beta.parts.size(); ++k) {
      std::vector<int> smaller = beta.parts;
      --smaller[k];
      total += t.at(Partition::from_parts(std::move(smaller)));
    }
    out.set(beta, total);
  }
  return out;
}

IdentityReport check_garsia_little(const AffinePermutation& v,
                                   std::int64_t r) {
  const auto degree = static_cast<int>(length(v)) + 1;
  IdentityReport report{CoefficientTable::zero(v.n(), degree),
                        CoefficientTable::zero(v.n(), degree), false};
  for (const Cover& c : left_r_covers(v, r)) {
    report.lhs.add(stanley_table(c.element));
  }
  for (const Cover& c : right_r_covers(v, r)) {
    report.rhs.add(stanley_table(c.element));
  }
  report.holds = report.lhs == report.rhs;
  return report;
}

IdentityReport check_chevalley(const AffinePermutation& v, std::int64_t r) {
  const auto degree = static_cast<int>(length(v)) + 1;
  IdentityReport report{multiply_by_s1(stanley_table(v)),
                        CoefficientTable::zero(v.n(), degree), false};
  for (const Cover& c : covers_above(v)) {
    const std::int64_t weight = chevalley_coefficient(v, c.element, r);
    if (weight != 0) report.rhs.add(stanley_table(c.element), weight);
  }
  report.holds = report.lhs == report.rhs;
  return report;
}

std::vector<BasisElement> affine_schur_basis(int n, int l) {
  // Grassmannian elements are closed under dropping left factors, so they
  // grow one left multiplication at a time.
  std::set<AffinePermutation> level{AffinePermutation::identity(n)};
  for (int k = 0; k < l && n >= 2; ++k) {
    std::set<AffinePermutation> next;
    for (const AffinePermutation& w : level) {
      for (int i = 0; i < n; ++i) {
        if (has_left_descent(w, i)) continue;
        AffinePermutation u = left_multiply_simple(i, w);
        if (is_grassmannian(u)) next.insert(std::move(u));
      }
    }
    level = std::move(next);
  }
  if (l < 0) level.clear();
  std::vector<BasisElement> out;
  for (const AffinePermutation& w : level) {
    out.push_back(BasisElement{w, grassmannian_to_partition(w),
                               stanley_table(w)});
  }
  std::sort(out.begin(), out.end(),
            [](const BasisElement& x, const BasisElement& y) {
              return x.label < y.label;
            });
  return out;
}

ExpansionResult expand_in_affine_schur(const AffinePermutation& w) {
  const CoefficientTable target = stanley_table(w);
  const std::vector<BasisElement> basis =
      affine_schur_basis(w.n(), target.degree());
  std::vector<Partition> keys;
  for (const auto& [lambda, unused] : target.entries()) keys.push_back(lambda);
  if (basis.size() != keys.size()) {
    fail(ErrorCode::kSingularSystem,
         std::to_string(basis.size()) + " basis elements for " +
             std::to_string(keys.size()) + " monomials");
  }

  std::vector<std::vector<Rational>> m(keys.size(),
                                       std::vector<Rational>(basis.size()));
  std::vector<Rational> b(keys.size());
  for (std::size_t row = 0; row < keys.size(); ++row) {
    for (std::size_t col = 0; col < basis.size(); ++col) {
      m[row][col] = basis[col].table.at(keys[row]);
    }
    b[row] = target.at(keys[row]);
  }
  const std::vector<Rational> x = solve_exact(m, b);

  ExpansionResult result;
  bool exact = true;
  for (std::size_t row = 0; row < keys.size(); ++row) {
    Rational sum = 0;
    for (std::size_t col = 0; col < basis.size(); ++col) {
      sum += m[row][col] * x[col];
    }
    exact = exact && sum == b[row];
  }
  for (std::size_t col = 0; col < basis.size(); ++col) {
    if (x[col] != 0) result.coefficients.emplace(basis[col].label, x[col]);
  }
  result.zero_residual = exact;
  return result;
}

LsData ls_data(const std::vector<int>& sigma) {
  const auto n = static_cast<int>(sigma.size());
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (sorted[static_cast<std::size_t>(k)] != k + 1) {
      fail(ErrorCode::kBadIndex, "not a permutation of 1..n");
    }
  }
  auto at = [&](int i) { return sigma[static_cast<std::size_t>(i - 1)]; };
  LsData data;
  for (int i = 1; i < n; ++i) {
    if (at(i) > at(i + 1)) data.r = i;
  }
  if (data.r == 0) fail(ErrorCode::kIdentityInput, "identity has no children");
  for (int i = data.r + 1; i <= n; ++i) {
    if (at(i) < at(data.r)) data.s = i;
  }
  const int low_cap = at(data.s);
  for (int i = 1; i < data.r; ++i) {
    if (at(i) >= low_cap) continue;
    bool clear = true;
    for (int j = i + 1; j < data.r; ++j) {
      if (at(j) > at(i) && at(j) < low_cap) clear = false;
    }
    if (clear) data.indices.push_back(i);
  }
  return data;
}

std::vector<std::vector<int>> ls_children(const std::vector<int>& sigma) {
  const LsData data = ls_data(sigma);
  std::vector<std::vector<int>> out;
  if (data.indices.empty()) {
    std::vector<int> shifted{1};
    for (int x : sigma) shifted.push_back(x + 1);
    out.push_back(std::move(shifted));
    return out;
  }
  std::vector<int> pi = sigma;
  std::swap(pi[static_cast<std::size_t>(data.r - 1)],
            pi[static_cast<std::size_t>(data.s - 1)]);
  for (int i : data.indices) {
    std::vector<int> child = pi;
    std::swap(child[static_cast<std::size_t>(i - 1)],
              child[static_cast<std::size_t>(data.r - 1)]);
    out.push_back(std::move(child));
  }
  return out;
}

}  // namespace affine
