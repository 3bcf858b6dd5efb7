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

#include "fluxwire/gf.hpp"

#include <bit>

#include "fluxwire/error.hpp"

namespace fluxwire {

BitMatrix BitMatrix::identity(int size) {
  BitMatrix m{size, std::vector<std::uint32_t>(static_cast<std::size_t>(size), 0)};
  for (int i = 0; i < size; ++i) m.rows[static_cast<std::size_t>(i)] = 1u << i;
  return m;
}

std::uint32_t BitMatrix::apply(std::uint32_t x) const {
  std::uint32_t y = 0;
  for (int i = 0; i < size; ++i) {
    y |= static_cast<std::uint32_t>(std::popcount(rows[static_cast<std::size_t>(i)] & x) & 1)
         << i;
  }
  return y;
}

int BitMatrix::row_weight(int row) const {
  return std::popcount(rows[static_cast<std::size_t>(row)]);
}

int BitMatrix::column_weight(int column) const {
  int w = 0;
  for (auto row : rows) w += static_cast<int>((row >> column) & 1u);
  return w;
}

BitMatrix operator*(const BitMatrix& l, const BitMatrix& r) {
  BitMatrix out{l.size, std::vector<std::uint32_t>(l.rows.size(), 0)};
  for (int i = 0; i < l.size; ++i) {
    std::uint32_t acc = 0;
    for (int k = 0; k < l.size; ++k) {
      if ((l.rows[static_cast<std::size_t>(i)] >> k) & 1u) acc ^= r.rows[static_cast<std::size_t>(k)];
    }
    out.rows[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

FieldContext FieldContext::create(int width, std::uint32_t primitive_poly) {
  if (width < 2 || width > 8) {
    throw Error(ErrorCode::kInvalidPolynomial, "field width must be in [2, 8]");
  }
  if ((primitive_poly >> width) != 1u || (primitive_poly & 1u) == 0) {
    throw Error(ErrorCode::kInvalidPolynomial,
                "polynomial must have degree " + std::to_string(width) +
                    " and a constant term");
  }
  FieldContext ctx;
  ctx.width_ = width;
  ctx.poly_ = primitive_poly;
  ctx.order_ = (1 << width) - 1;
  ctx.exp_.resize(static_cast<std::size_t>(ctx.order_));
  ctx.log_.assign(static_cast<std::size_t>(1) << width, -1);
  std::uint32_t x = 1;
  for (int i = 0; i < ctx.order_; ++i) {
    if (i > 0 && x == 1) {
      throw Error(ErrorCode::kNotPrimitive,
                  "alpha has order " + std::to_string(i) + " < " +
                      std::to_string(ctx.order_));
    }
    ctx.exp_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
    ctx.log_[x] = i;
    x <<= 1;
    if (x >> width) x ^= primitive_poly;
  }
  if (x != 1) {
    throw Error(ErrorCode::kNotPrimitive, "polynomial is not irreducible");
  }
  return ctx;
}

FieldContext FieldContext::gf16() { return create(4, 0x13); }

FieldElement FieldContext::alpha_pow(long long exponent) const {
  long long e = exponent % order_;
  if (e < 0) e += order_;
  return {exp_[static_cast<std::size_t>(e)]};
}

int FieldContext::log(FieldElement x) const {
  if (x.bits == 0 || !contains(x)) {
    throw Error(ErrorCode::kInvalidArgument, "log of zero or out-of-field element");
  }
  return log_[x.bits];
}

FieldElement FieldContext::mul(FieldElement x, FieldElement y) const {
  if (x.bits == 0 || y.bits == 0) return {};
  return alpha_pow(static_cast<long long>(log(x)) + log(y));
}

FieldElement FieldContext::div(FieldElement x, FieldElement y) const {
  if (y.bits == 0) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  if (x.bits == 0) return {};
  return alpha_pow(static_cast<long long>(log(x)) - log(y));
}

FieldElement FieldContext::pow(FieldElement x, long long n) const {
  if (n == 0) return {1};
  if (x.bits == 0) {
    if (n < 0) throw Error(ErrorCode::kDivisionByZero, "negative power of zero");
    return {};
  }
  return alpha_pow(static_cast<long long>(log(x)) * (n % order_));
}

FieldElement FieldContext::inverse(FieldElement x) const { return div({1}, x); }

BitMatrix FieldContext::mul_matrix(FieldElement c) const {
  BitMatrix m{width_, std::vector<std::uint32_t>(static_cast<std::size_t>(width_), 0)};
  for (int j = 0; j < width_; ++j) {
    const std::uint32_t column = mul(c, alpha_pow(j)).bits;
    for (int i = 0; i < width_; ++i) {
      if ((column >> i) & 1u) m.rows[static_cast<std::size_t>(i)] |= 1u << j;
    }
  }
  return m;
}

std::vector<TableRow> FieldContext::table_rows() const {
  auto monomial = [](int e) -> std::string {
    if (e == 0) return "1";
    if (e == 1) return "α";
    return "α^" + std::to_string(e);
  };
  std::vector<TableRow> rows;
  rows.push_back({"0", "0", format({})});
  for (int i = 0; i < order_; ++i) {
    const FieldElement x = alpha_pow(i);
    std::string poly;
    for (int j = 0; j < width_; ++j) {
      if ((x.bits >> j) & 1) poly += (poly.empty() ? "" : "+") + monomial(j);
    }
    rows.push_back({monomial(i), poly, format(x)});
  }
  return rows;
}

std::string FieldContext::format(FieldElement x) const {
  std::string out(static_cast<std::size_t>(width_), '0');
  for (int j = 0; j < width_; ++j) {
    if ((x.bits >> j) & 1) out[static_cast<std::size_t>(j)] = '1';
  }
  return out;
}

FieldElement FieldContext::parse(std::string_view text) const {
  if (text.size() != static_cast<std::size_t>(width_)) {
    throw Error(ErrorCode::kParse, "expected a " + std::to_string(width_) +
                                       "-bit word, got '" + std::string(text) + "'");
  }
  std::uint8_t bits = 0;
  for (int j = 0; j < width_; ++j) {
    const char c = text[static_cast<std::size_t>(j)];
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kParse, "invalid binary word '" + std::string(text) + "'");
    }
    if (c == '1') bits = static_cast<std::uint8_t>(bits | (1u << j));
  }
  return {bits};
}

}  // namespace fluxwire
