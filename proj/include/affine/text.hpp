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

#ifndef AFFINE_TEXT_HPP_
#define AFFINE_TEXT_HPP_

#include <string>
#include <string_view>

#include "affine/core.hpp"
#include "affine/little.hpp"
#include "affine/symfunc.hpp"
#include "affine/words.hpp"

// Text forms shared by the CLI and the C API:
//   window            [2,3,0,5]
//   reflection        t(2,7)
//   word              3410321042 for n <= 10, otherwise 10,3,0
//   marked word       34102321042@5
//   decomposition     21/2   (cyclically decreasing factor words)
//   partition         2,1,1
// Parse failures throw Error(kParse); well-formed text that names an invalid
// object throws the domain code (kBadSum, kBadIndex, ...).
namespace affine {

// n <= 0 infers the period from the number of entries.
AffinePermutation parse_window(std::string_view text, int n = 0);
std::string format_window(const AffinePermutation& w);

Reflection parse_reflection(std::string_view text, int n);
std::string format_reflection(const Reflection& t);

Word parse_word(std::string_view text, int n);
std::string format_word(const Word& a);

MarkedWord parse_marked_word(std::string_view text, int n);
std::string format_marked_word(const MarkedWord& m);

AlphaDecomposition parse_decomposition(std::string_view text, int n);
std::string format_decomposition(const AlphaDecomposition& d);

Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

// "p/q" with q > 0 (integers as "k/1").
std::string format_rational(const Rational& x);

}  // namespace affine

#endif  // AFFINE_TEXT_HPP_
