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

#include "affine/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace affine {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_same_period(const AffinePermutation& u,
                         const AffinePermutation& v) {
  if (u.n() != v.n()) {
    fail(ErrorCode::kMismatchedPeriod,
         "period mismatch: " + std::to_string(u.n()) + " vs " +
             std::to_string(v.n()));
  }
}

void require_letter(int n, int i) {
  if (n < 2 || i < 0 || i >= n) {
    fail(ErrorCode::kBadIndex, "simple reflection index " + std::to_string(i) +
                                   " out of range for n = " +
                                   std::to_string(n));
  }
}

}  // namespace

AffinePermutation AffinePermutation::identity(int n) {
  if (n < 1) fail(ErrorCode::kBadLength, "period must be positive");
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  std::iota(window.begin(), window.end(), std::int64_t{1});
  return AffinePermutation(n, std::move(window));
}

AffinePermutation AffinePermutation::from_window(
    int n, std::span<const std::int64_t> values) {
  if (n < 1 || values.size() != static_cast<std::size_t>(n)) {
    fail(ErrorCode::kBadLength, "window has " + std::to_string(values.size()) +
                                    " entries, expected " + std::to_string(n));
  }
  std::int64_t sum = 0;
  for (std::int64_t x : values) sum += x;
  const std::int64_t expected = std::int64_t{n} * (n + 1) / 2;
  if (sum != expected) {
    fail(ErrorCode::kBadSum, "window sums to " + std::to_string(sum) +
                                 ", expected " + std::to_string(expected));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::int64_t x : values) {
    const auto r = static_cast<std::size_t>(residue(x, n));
    if (seen[r]) {
      fail(ErrorCode::kDuplicateResidue,
           "two window entries are congruent to " + std::to_string(r) +
               " mod " + std::to_string(n));
    }
    seen[r] = true;
  }
  return AffinePermutation(n, {values.begin(), values.end()});
}

std::int64_t AffinePermutation::operator()(std::int64_t i) const noexcept {
  const std::int64_t shift = floor_div(i - 1, n_);
  return window_[static_cast<std::size_t>(i - 1 - shift * n_)] + shift * n_;
}

Reflection Reflection::make(int n, std::int64_t r, std::int64_t s) {
  if (n < 1 || residue(s - r, n) == 0) {
    fail(ErrorCode::kCongruentPair, "t(" + std::to_string(r) + "," +
                                        std::to_string(s) +
                                        ") has congruent entries mod " +
                                        std::to_string(n));
  }
  std::int64_t a = std::min(r, s);
  std::int64_t b = std::max(r, s);
  const std::int64_t k = floor_div(a - 1, n);
  a -= k * n;
  b -= k * n;
  return Reflection{n, a, b};
}

int Partition::degree() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::erase_if(parts, [](int p) { return p <= 0; });
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition{std::move(parts)};
}

std::int64_t apply(const AffinePermutation& w, std::int64_t i) { return w(i); }

AffinePermutation multiply(const AffinePermutation& u,
                           const AffinePermutation& v) {
  require_same_period(u, v);
  std::vector<std::int64_t> window(v.window_.size());
  for (std::size_t k = 0; k < window.size(); ++k) window[k] = u(v.window_[k]);
  return AffinePermutation(u.n_, std::move(window));
}

AffinePermutation inverse(const AffinePermutation& w) {
  const int n = w.n_;
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    // w(i) = j + kn with j in [1, n] gives w^{-1}(j) = i - kn.
    const std::int64_t value = w.window_[static_cast<std::size_t>(i - 1)];
    const std::int64_t k = floor_div(value - 1, n);
    window[static_cast<std::size_t>(value - k * n - 1)] = i - k * n;
  }
  return AffinePermutation(n, std::move(window));
}

AffinePermutation simple(int n, int i) {
  require_letter(n, i);
  return transposition_element(n, i, i + 1);
}

AffinePermutation right_multiply_simple(const AffinePermutation& w, int i) {
  const int n = w.n_;
  require_letter(n, i);
  std::vector<std::int64_t> window = w.window_;
  if (i == 0) {
    window.front() = w.window_.back() - n;
    window.back() = w.window_.front() + n;
  } else {
    std::swap(window[static_cast<std::size_t>(i - 1)],
              window[static_cast<std::size_t>(i)]);
  }
  return AffinePermutation(n, std::move(window));
}

AffinePermutation left_multiply_simple(int i, const AffinePermutation& w) {
  return multiply(simple(w.n(), i), w);
}

AffinePermutation transposition_element(int n, std::int64_t r,
                                        std::int64_t s) {
  if (n < 1 || residue(s - r, n) == 0) {
    fail(ErrorCode::kCongruentPair, "t(" + std::to_string(r) + "," +
                                        std::to_string(s) +
                                        ") has congruent entries mod " +
                                        std::to_string(n));
  }
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    std::int64_t image = i;
    if (residue(i - r, n) == 0) {
      image = i + (s - r);
    } else if (residue(i - s, n) == 0) {
      image = i + (r - s);
    }
    window[static_cast<std::size_t>(i - 1)] = image;
  }
  return AffinePermutation(n, std::move(window));
}

AffinePermutation reflection_element(const Reflection& t) {
  return transposition_element(t.n, t.a, t.b);
}

std::int64_t length(const AffinePermutation& w) {
  // For each pair of window positions (i, j), count the shifts k >= 0 with
  // j + kn > i and w(j) + kn < w(i).
  const int n = w.n();
  const auto& win = w.window();
  std::int64_t total = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      const std::int64_t gap = win[static_cast<std::size_t>(i - 1)] -
                               win[static_cast<std::size_t>(j - 1)];
      const std::int64_t lo = std::max<std::int64_t>(0, floor_div(i - j, n) + 1);
      const std::int64_t hi = floor_div(gap - 1, n);
      if (hi >= lo) total += hi - lo + 1;
    }
  }
  return total;
}

bool has_right_descent(const AffinePermutation& w, int i) {
  require_letter(w.n(), i);
  return w(i) > w(i + 1);
}

bool has_left_descent(const AffinePermutation& w, int i) {
  return has_right_descent(inverse(w), i);
}

std::vector<Cover> covers_above(const AffinePermutation& v) {
  const int n = v.n();
  std::vector<Cover> out;
  if (n < 2) return out;
  const std::int64_t target = length(v) + 1;
  // ell(t_{a,b}) > 2 ell(v) + 1 once b - a exceeds (ell(v) + 1) n, so this
  // range is generous.
  const std::int64_t reach = std::int64_t{n} * (target + 1);
  for (std::int64_t a = 1; a <= n; ++a) {
    for (std::int64_t b = a + 1; b <= a + reach; ++b) {
      if (residue(b - a, n) == 0) continue;
      AffinePermutation w = multiply(v, transposition_element(n, a, b));
      if (length(w) == target) {
        out.push_back(Cover{std::move(w), Reflection{n, a, b}});
      }
    }
  }
  return out;
}

std::vector<Cover> right_r_covers(const AffinePermutation& v, std::int64_t r) {
  std::vector<Cover> out = covers_above(v);
  std::erase_if(out, [&](const Cover& c) {
    return residue(c.reflection.a - r, v.n()) != 0;
  });
  return out;
}

std::vector<Cover> left_r_covers(const AffinePermutation& v, std::int64_t r) {
  std::vector<Cover> out = covers_above(v);
  std::erase_if(out, [&](const Cover& c) {
    return residue(c.reflection.b - r, v.n()) != 0;
  });
  return out;
}

std::optional<Reflection> cover_reflection(const AffinePermutation& v,
                                           const AffinePermutation& w) {
  require_same_period(v, w);
  const int n = v.n();
  if (length(w) != length(v) + 1) return std::nullopt;
  const AffinePermutation t = multiply(inverse(v), w);
  std::vector<std::int64_t> moved;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (t(i) != i) moved.push_back(i);
  }
  if (moved.size() != 2) return std::nullopt;
  const std::int64_t image = t(moved[0]);
  if (residue(image - moved[1], n) != 0) return std::nullopt;
  if (transposition_element(n, moved[0], image) != t) return std::nullopt;
  return Reflection::make(n, moved[0], image);
}

std::int64_t chevalley_coefficient(const AffinePermutation& v,
                                   const AffinePermutation& w,
                                   std::int64_t r) {
  const std::optional<Reflection> t = cover_reflection(v, w);
  if (!t) return 0;
  const int n = v.n();
  // Integers x in [a, b-1] with x == r (mod n).
  const std::int64_t first = t->a + residue(r - t->a, n);
  if (first > t->b - 1) return 0;
  return (t->b - 1 - first) / n + 1;
}

bool is_grassmannian(const AffinePermutation& w) {
  const auto& win = w.window();
  return std::is_sorted(win.begin(), win.end()) &&
         std::adjacent_find(win.begin(), win.end()) == win.end();
}

Partition grassmannian_to_partition(const AffinePermutation& w) {
  if (!is_grassmannian(w)) {
    fail(ErrorCode::kNotGrassmannian, "window is not increasing");
  }
  const int n = w.n();
  // Peeling right descents yields the letters of a reduced word from the
  // right, which is exactly the order in which they act on the core.
  std::vector<int> rows;
  AffinePermutation cur = w;
  std::int64_t remaining = length(w);
  while (remaining > 0) {
    int letter = -1;
    for (int i = 0; i < n; ++i) {
      if (has_right_descent(cur, i)) {
        letter = i;
        break;
      }
    }
    if (letter < 0) fail(ErrorCode::kInternal, "no descent on nonidentity");
    cur = right_multiply_simple(cur, letter);
    --remaining;

    std::vector<std::size_t> addable;
    for (std::size_t r = 0; r <= rows.size(); ++r) {
      const int col = r < rows.size() ? rows[r] : 0;
      const bool corner = r == 0 || rows[r - 1] > col;
      if (corner && residue(col - static_cast<int>(r), n) == letter) {
        addable.push_back(r);
      }
    }
    if (addable.empty()) {
      fail(ErrorCode::kInternal, "core action added no box");
    }
    for (std::size_t r : addable) {
      if (r < rows.size()) {
        ++rows[r];
      } else {
        rows.push_back(1);
      }
    }
  }

  std::vector<int> columns(rows.empty() ? 0 : rows.front(), 0);
  for (int len : rows) {
    for (int c = 0; c < len; ++c) ++columns[static_cast<std::size_t>(c)];
  }
  std::vector<int> bounded;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int count = 0;
    for (int c = 0; c < rows[r]; ++c) {
      const int hook = (rows[r] - c - 1) +
                       (columns[static_cast<std::size_t>(c)] -
                        static_cast<int>(r) - 1) +
                       1;
      if (hook < n) ++count;
    }
    bounded.push_back(count);
  }
  Partition result = Partition::from_parts(std::move(bounded));
  if (result.degree() != length(w)) {
    fail(ErrorCode::kInternal, "bounded partition has the wrong size");
  }
  return result;
}

std::vector<AffinePermutation> elements_up_to_length(int n, int max_length) {
  std::vector<AffinePermutation> out;
  if (max_length < 0) return out;
  std::vector<AffinePermutation> level{AffinePermutation::identity(n)};
  for (int l = 0;; ++l) {
    out.insert(out.end(), level.begin(), level.end());
    if (l == max_length || n < 2) break;
    std::set<AffinePermutation> next;
    for (const AffinePermutation& w : level) {
      for (int i = 0; i < n; ++i) {
        if (!has_right_descent(w, i)) next.insert(right_multiply_simple(w, i));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return out;
}

std::vector<AffinePermutation> elements_of_length(int n, int len) {
  std::vector<AffinePermutation> all = elements_up_to_length(n, len);
  std::erase_if(all, [&](const AffinePermutation& w) {
    return length(w) != len;
  });
  return all;
}

}  // namespace affine
