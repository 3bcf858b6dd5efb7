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

#include "fluxwire/rs.hpp"

#include "fluxwire/error.hpp"
#include "text_io.hpp"

namespace fluxwire {

WordPoly generator_poly(const FieldContext& field, int num_parity) {
  if (num_parity < 1 || num_parity > field.order() - 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "number of parity words must be in [1, " +
                    std::to_string(field.order() - 1) + "]");
  }
  WordPoly g{FieldElement{1}};
  for (int i = 1; i <= num_parity; ++i) {
    const FieldElement root = field.alpha_pow(i);
    WordPoly next(g.size() + 1);
    for (std::size_t j = 0; j < g.size(); ++j) {
      next[j + 1] = next[j + 1] + g[j];
      next[j] = next[j] + field.mul(g[j], root);
    }
    g = std::move(next);
  }
  return g;
}

FieldElement poly_eval(const FieldContext& field, std::span<const FieldElement> poly,
                       FieldElement x) {
  FieldElement acc{};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = field.mul(acc, x) + *it;
  }
  return acc;
}

RSParams RSParams::create(FieldContext field, int n, int k) {
  if (k < 1 || n <= k || n > field.order()) {
    throw Error(ErrorCode::kInvalidConfig,
                "invalid RS(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  WordPoly g = generator_poly(field, n - k);
  return RSParams{std::move(field), n, k, std::move(g)};
}

RSParams RSParams::rs12_8() { return create(FieldContext::gf16(), 12, 8); }

WordPoly rs_encode(const RSParams& params, std::span<const FieldElement> message) {
  if (message.size() != static_cast<std::size_t>(params.k)) {
    throw Error(ErrorCode::kArityMismatch,
                "message must have " + std::to_string(params.k) + " words, got " +
                    std::to_string(message.size()));
  }
  const std::size_t p = static_cast<std::size_t>(params.num_parity());
  WordPoly work(p, FieldElement{});
  work.insert(work.end(), message.begin(), message.end());
  // Long division by the monic g(x), highest degree first.
  for (std::size_t d = work.size() - 1; d >= p; --d) {
    const FieldElement lead = work[d];
    if (lead.bits == 0) continue;
    for (std::size_t j = 0; j <= p; ++j) {
      work[d - p + j] = work[d - p + j] + params.field.mul(lead, params.generator[j]);
    }
  }
  work.resize(p);
  return work;
}

WordPoly systematic_codeword(const RSParams& params,
                             std::span<const FieldElement> message) {
  WordPoly codeword(message.begin(), message.end());
  WordPoly parity = rs_encode(params, message);
  codeword.insert(codeword.end(), parity.begin(), parity.end());
  return codeword;
}

WordPoly syndromes(const RSParams& params, std::span<const FieldElement> codeword) {
  if (codeword.size() != static_cast<std::size_t>(params.n)) {
    throw Error(ErrorCode::kArityMismatch,
                "codeword must have " + std::to_string(params.n) + " words");
  }
  const std::size_t k = static_cast<std::size_t>(params.k);
  // Back to degree order: parity occupies x^0 .. x^(n-k-1).
  WordPoly c(codeword.begin() + static_cast<std::ptrdiff_t>(k), codeword.end());
  c.insert(c.end(), codeword.begin(), codeword.begin() + static_cast<std::ptrdiff_t>(k));
  WordPoly out;
  for (int i = 1; i <= params.num_parity(); ++i) {
    out.push_back(poly_eval(params.field, c, params.field.alpha_pow(i)));
  }
  return out;
}

std::vector<WordPoly> parse_word_streams(const FieldContext& field,
                                         std::string_view text) {
  std::vector<WordPoly> streams;
  WordPoly current;
  for (std::string_view line : text_io::lines(text)) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = text_io::trim(line);
    if (line.empty()) {
      if (!current.empty()) streams.push_back(std::move(current));
      current.clear();
      continue;
    }
    current.push_back(field.parse(line));
  }
  if (!current.empty()) streams.push_back(std::move(current));
  return streams;
}

std::string format_word_streams(const FieldContext& field,
                                const std::vector<WordPoly>& streams) {
  std::string out;
  for (std::size_t s = 0; s < streams.size(); ++s) {
    if (s > 0) out += "\n";
    for (const auto& w : streams[s]) out += field.format(w) + "\n";
  }
  return out;
}

std::string format_words_inline(const FieldContext& field, const WordPoly& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + field.format(w);
  return out;
}

}  // namespace fluxwire
