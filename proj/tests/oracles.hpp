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

// Slow, independent reference computations. Nothing here calls the
// library's arithmetic, length, word or decomposition routines; elements
// cross the boundary only as raw windows.

#ifndef AFFINE_TESTS_ORACLES_HPP_
#define AFFINE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "affine/core.hpp"
#include "affine/words.hpp"

namespace oracle {

using Window = std::vector<std::int64_t>;

inline std::int64_t mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t floor_div(std::int64_t x, std::int64_t n) {
  return (x - mod(x, n)) / n;
}

inline std::int64_t at(const Window& w, std::int64_t i) {
  const auto n = static_cast<std::int64_t>(w.size());
  return w[mod(i - 1, n)] + n * floor_div(i - 1, n);
}

inline Window identity(int n) {
  Window w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return w;
}

// (uv)(i) = u(v(i)).
inline Window compose(const Window& u, const Window& v) {
  Window out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    out[i] = at(u, at(v, static_cast<std::int64_t>(i) + 1));
  }
  return out;
}

inline Window invert(const Window& w) {
  const auto n = static_cast<std::int64_t>(w.size());
  Window out(n);
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t image = at(w, i);
    // w(i) = image  =>  w^{-1}(image - kn) = i - kn with image - kn in [1, n].
    const std::int64_t k = floor_div(image - 1, n);
    out[image - k * n - 1] = i - k * n;
  }
  return out;
}

// The map swapping the classes of r and s as the periodic extension of
// r <-> s.
inline Window swap(int n, std::int64_t r, std::int64_t s) {
  Window w = identity(n);
  for (std::int64_t i = 1; i <= n; ++i) {
    if (mod(i - r, n) == 0) w[i - 1] = i + (s - r);
    if (mod(i - s, n) == 0) w[i - 1] = i + (r - s);
  }
  return w;
}

inline Window simple(int n, int i) { return swap(n, i, i + 1); }

inline Window word_window(int n, const std::vector<int>& letters) {
  Window w = identity(n);
  for (int a : letters) w = compose(w, simple(n, a));
  return w;
}

// Inversion count by direct scanning of the pairs (i, j), 1 <= i <= n < ...
inline std::int64_t inversions(const Window& w) {
  const auto n = static_cast<std::int64_t>(w.size());
  std::int64_t spread = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    spread = std::max(spread, std::abs(at(w, i) - i));
  }
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = i + 1; j <= i + 2 * spread + n; ++j) {
      if (at(w, i) > at(w, j)) ++count;
    }
  }
  return count;
}

// Word length by breadth-first search in the Cayley graph.
class LengthBall {
 public:
  LengthBall(int n, int radius) : n_(n) {
    std::queue<Window> frontier;
    dist_[identity(n)] = 0;
    frontier.push(identity(n));
    while (!frontier.empty()) {
      const Window w = frontier.front();
      frontier.pop();
      const int d = dist_[w];
      if (d == radius) continue;
      for (int i = 0; i < n; ++i) {
        const Window next = compose(w, simple(n, i));
        if (dist_.emplace(next, d + 1).second) frontier.push(next);
      }
    }
  }

  std::optional<int> length(const Window& w) const {
    const auto it = dist_.find(w);
    if (it == dist_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Window> of_length(int l) const {
    std::vector<Window> out;
    for (const auto& [w, d] : dist_) {
      if (d == l) out.push_back(w);
    }
    return out;
  }

  int n() const { return n_; }

 private:
  int n_;
  std::map<Window, int> dist_;
};

inline bool reduced(int n, const std::vector<int>& letters) {
  return inversions(word_window(n, letters)) ==
         static_cast<std::int64_t>(letters.size());
}

// Every word of the given length over n letters.
inline std::vector<std::vector<int>> all_words(int n, int length) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < length; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out) {
      for (int a = 0; a < n; ++a) {
        next.push_back(w);
        next.back().push_back(a);
      }
    }
    out = std::move(next);
  }
  return out;
}

// Reduced words by filtering all words of the right length.
inline std::set<std::vector<int>> reduced_words(const Window& w) {
  const int n = static_cast<int>(w.size());
  const auto l = static_cast<int>(inversions(w));
  std::set<std::vector<int>> out;
  for (const auto& a : all_words(n, l)) {
    if (word_window(n, a) == w) out.insert(a);
  }
  return out;
}

// Bruhat interval below w: products of all subwords of one reduced word.
inline std::set<Window> bruhat_below(int n, const std::vector<int>& reduced) {
  std::set<Window> out;
  const std::size_t l = reduced.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < l; ++k) {
      if ((mask >> k) & 1U) sub.push_back(reduced[k]);
    }
    out.insert(word_window(n, sub));
  }
  return out;
}

// Some reduced word, found by greedy search over a BFS ball.
inline std::vector<int> any_reduced_word(const Window& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> out;
  Window cur = w;
  while (inversions(cur) > 0) {
    for (int i = 0; i < n; ++i) {
      const Window next = compose(cur, simple(n, i));
      if (inversions(next) < inversions(cur)) {
        out.insert(out.begin(), i);
        cur = next;
        break;
      }
    }
  }
  return out;
}

// Maximal cyclic runs of a proper subset given as a membership vector.
// Each run is reported as its decreasing word (top ... bottom).
inline std::vector<std::vector<int>> interval_words(int n,
                                                    const std::vector<bool>& in) {
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (!in[start] || in[mod(start - 1, n)]) continue;
    std::vector<int> run;
    for (int k = start; in[mod(k, n)]; ++k) run.push_back(static_cast<int>(mod(k, n)));
    std::reverse(run.begin(), run.end());
    out.push_back(run);
  }
  return out;
}

// All interleavings of several words preserving each word's order.
inline std::set<std::vector<int>> shuffles(
    const std::vector<std::vector<int>>& words) {
  std::set<std::vector<int>> out;
  std::vector<std::size_t> pos(words.size(), 0);
  std::vector<int> current;
  std::size_t total = 0;
  for (const auto& w : words) total += w.size();
  auto rec = [&](auto&& self) -> void {
    if (current.size() == total) {
      out.insert(current);
      return;
    }
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (pos[k] == words[k].size()) continue;
      current.push_back(words[k][pos[k]++]);
      self(self);
      --pos[k];
      current.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Distinct letters, and i+1 precedes i whenever both occur (mod n).
inline bool cyclically_decreasing(int n, const std::vector<int>& a) {
  std::vector<int> position(n, -1);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (position[a[k]] != -1) return false;
    position[a[k]] = static_cast<int>(k);
  }
  for (int i = 0; i < n; ++i) {
    const int up = static_cast<int>(mod(i + 1, n));
    if (position[i] != -1 && position[up] != -1 && position[up] > position[i]) {
      return false;
    }
  }
  return true;
}

// Cyclically decreasing element of a proper subset via its run words.
inline Window cd_window(int n, const std::vector<bool>& in) {
  std::vector<int> word;
  for (const auto& run : interval_words(n, in)) {
    word.insert(word.end(), run.begin(), run.end());
  }
  return word_window(n, word);
}

inline std::vector<bool> membership(int n, std::uint64_t mask) {
  std::vector<bool> in(n);
  for (int i = 0; i < n; ++i) in[i] = ((mask >> i) & 1U) != 0;
  return in;
}

// Number of tuples of proper subsets (A_1, ..., A_m), |A_k| = alpha_k, whose
// cyclically decreasing elements multiply to w.
inline std::int64_t count_decompositions(const Window& w,
                                         const std::vector<int>& alpha) {
  const int n = static_cast<int>(w.size());
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::vector<Window>> by_size(n + 1);
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    by_size[__builtin_popcountll(mask)].push_back(
        cd_window(n, membership(n, mask)));
  }
  // Prefixes whose lengths stop adding can never reach w.
  std::int64_t count = 0;
  auto rec = [&](auto&& self, std::size_t k, const Window& prefix,
                 std::int64_t used) -> void {
    if (k == alpha.size()) {
      if (prefix == w) ++count;
      return;
    }
    if (alpha[k] >= n) return;
    for (const Window& f : by_size[alpha[k]]) {
      const Window next = compose(prefix, f);
      if (inversions(next) != used + alpha[k]) continue;
      self(self, k + 1, next, used + alpha[k]);
    }
  };
  rec(rec, 0, identity(n), 0);
  return count;
}

// The reflection t_j with (a with letter j deleted) = a t_j, for each j.
inline std::vector<Window> deletion_reflections(int n,
                                                const std::vector<int>& a) {
  std::vector<Window> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::vector<int> suffix(a.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                                  a.end());
    const Window y = word_window(n, suffix);
    out[j] = compose(compose(invert(y), simple(n, a[j])), y);
  }
  return out;
}

inline std::vector<int> erase_at(std::vector<int> a, std::size_t index1) {
  a.erase(a.begin() + static_cast<std::ptrdiff_t>(index1) - 1);
  return a;
}

// Bridges to library values.
inline Window window_of(const affine::AffinePermutation& w) {
  return w.window();
}

inline affine::AffinePermutation element(const Window& w) {
  return affine::AffinePermutation::from_window(static_cast<int>(w.size()), w);
}

}  // namespace oracle

#endif  // AFFINE_TESTS_ORACLES_HPP_
