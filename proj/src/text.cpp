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

#include "affine/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <vector>

namespace affine {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void parse_error(std::string_view what, std::string_view text) {
  fail(ErrorCode::kParse,
       "malformed " + std::string(what) + ": '" + std::string(text) + "'");
}

std::int64_t parse_int(std::string_view token, std::string_view what,
                       std::string_view whole) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    parse_error(what, whole);
  }
  return value;
}

std::vector<std::int64_t> parse_list(std::string_view body,
                                     std::string_view what,
                                     std::string_view whole) {
  std::vector<std::int64_t> out;
  if (trim(body).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    out.push_back(parse_int(body.substr(start, comma - start), what, whole));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k != 0) s += ",";
    s += std::to_string(xs[k]);
  }
  return s;
}

}  // namespace

AffinePermutation parse_window(std::string_view text, int n) {
  const std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    parse_error("window", text);
  }
  const std::vector<std::int64_t> values =
      parse_list(s.substr(1, s.size() - 2), "window", text);
  if (values.empty()) parse_error("window", text);
  if (n <= 0) n = static_cast<int>(values.size());
  return AffinePermutation::from_window(n, values);
}

std::string format_window(const AffinePermutation& w) {
  return "[" + join(w.window()) + "]";
}

Reflection parse_reflection(std::string_view text, int n) {
  const std::string_view s = trim(text);
  if (s.size() < 4 || s.substr(0, 2) != "t(" || s.back() != ')') {
    parse_error("reflection", text);
  }
  const auto values = parse_list(s.substr(2, s.size() - 3), "reflection", text);
  if (values.size() != 2) parse_error("reflection", text);
  return Reflection::make(n, values[0], values[1]);
}

std::string format_reflection(const Reflection& t) {
  return "t(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
}

Word parse_word(std::string_view text, int n) {
  const std::string_view s = trim(text);
  std::vector<int> letters;
  if (s.find(',') != std::string_view::npos || n > 10) {
    for (std::int64_t x : parse_list(s, "word", text)) {
      letters.push_back(static_cast<int>(x));
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') parse_error("word", text);
      letters.push_back(c - '0');
    }
  }
  return Word::make(n, std::move(letters));
}

std::string format_word(const Word& a) {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.n > 10 && k != 0) s += ",";
    s += std::to_string(a.letters[k]);
  }
  return s;
}

MarkedWord parse_marked_word(std::string_view text, int n) {
  const std::string_view s = trim(text);
  const std::size_t at = s.rfind('@');
  if (at == std::string_view::npos) parse_error("marked word", text);
  const std::int64_t mark = parse_int(s.substr(at + 1), "marked word", text);
  Word word = parse_word(s.substr(0, at), n);
  if (mark < 1 || static_cast<std::size_t>(mark) > word.size()) {
    fail(ErrorCode::kBadIndex, "mark " + std::to_string(mark) +
                                   " outside word of length " +
                                   std::to_string(word.size()));
  }
  return MarkedWord{std::move(word), static_cast<std::size_t>(mark)};
}

std::string format_marked_word(const MarkedWord& m) {
  return format_word(m.word) + "@" + std::to_string(m.mark);
}

AlphaDecomposition parse_decomposition(std::string_view text, int n) {
  const std::string_view s = trim(text);
  AlphaDecomposition d{n, {}};
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = s.find('/', start);
    const Word factor = parse_word(s.substr(start, slash - start), n);
    if (factor.empty() || !is_cyclically_decreasing(factor)) {
      fail(ErrorCode::kInvalidDecomposition,
           "factor '" + format_word(factor) + "' is not cyclically decreasing");
    }
    d.factors.push_back(CyclicSubset::make(n, factor.letters));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return d;
}

std::string format_decomposition(const AlphaDecomposition& d) {
  std::string s;
  for (std::size_t k = 0; k < d.factors.size(); ++k) {
    if (k != 0) s += "/";
    s += format_word(canonical_cd_word(d.factors[k]));
  }
  return s;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  for (std::int64_t x : parse_list(text, "partition", text)) {
    if (x <= 0) parse_error("partition", text);
    parts.push_back(static_cast<int>(x));
  }
  Partition p = Partition::from_parts(parts);
  if (p.parts != parts) parse_error("partition", text);
  return p;
}

std::string format_partition(const Partition& p) {
  std::string s;
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    if (k != 0) s += ",";
    s += std::to_string(p.parts[k]);
  }
  return s;
}

std::string format_rational(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

}  // namespace affine
