// Copyright 2026 The fluxwire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLUXWIRE_RS_HPP_
#define FLUXWIRE_RS_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fluxwire/gf.hpp"

namespace fluxwire {

// Word lists are indexed by polynomial degree: element i is the coefficient
// of x^i. Message and parity files use the same order.
using WordPoly = std::vector<FieldElement>;

// prod_{i=1..num_parity} (x + alpha^i), lowest degree first, monic.
WordPoly generator_poly(const FieldContext& field, int num_parity);

// Evaluates poly at x (Horner).
FieldElement poly_eval(const FieldContext& field, std::span<const FieldElement> poly,
                       FieldElement x);

struct RSParams {
  FieldContext field;
  int n = 0;
  int k = 0;
  WordPoly generator;

  // Throws kInvalidConfig unless 0 < k < n <= 2^a - 1. Odd n - k is allowed
  // for toy codes.
  static RSParams create(FieldContext field, int n, int k);
  // RS(12, 8) over GF(2^4), p(x) = 1 + x + x^4.
  static RSParams rs12_8();

  int num_parity() const { return n - k; }
  int correction_capability() const { return (n - k) / 2; }
};

// Parity p_0 .. p_{n-k-1}: remainder of m(x) * x^(n-k) divided by g(x).
WordPoly rs_encode(const RSParams& params, std::span<const FieldElement> message);

// Systematic codeword message ++ parity, i.e. c(x) = m(x) x^(n-k) + p(x)
// with both halves in degree order.
WordPoly systematic_codeword(const RSParams& params,
                             std::span<const FieldElement> message);

// s_i = c(alpha^i) for i = 1 .. n-k, codeword given as message ++ parity.
WordPoly syndromes(const RSParams& params, std::span<const FieldElement> codeword);

// Word files: one a-bit binary word per line, streams separated by blank
// lines. '#' starts a comment.
std::vector<WordPoly> parse_word_streams(const FieldContext& field,
                                         std::string_view text);
std::string format_word_streams(const FieldContext& field,
                                const std::vector<WordPoly>& streams);
// "1010 1010 0001 0001"
std::string format_words_inline(const FieldContext& field, const WordPoly& words);

}  // namespace fluxwire

#endif  // FLUXWIRE_RS_HPP_
