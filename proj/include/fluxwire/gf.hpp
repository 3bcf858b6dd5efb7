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

#ifndef FLUXWIRE_GF_HPP_
#define FLUXWIRE_GF_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fluxwire/error.hpp"

namespace fluxwire {

// Element of GF(2^a) in binary form: bit j is the coefficient of alpha^j.
struct FieldElement {
  std::uint8_t bits = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
  friend FieldElement operator+(FieldElement x, FieldElement y) {
    return {static_cast<std::uint8_t>(x.bits ^ y.bits)};
  }
};

inline FieldElement gf_add(FieldElement x, FieldElement y) { return x + y; }

// a x a matrix over GF(2); rows[i] bit j is entry (i, j).
struct BitMatrix {
  int size = 0;
  std::vector<std::uint32_t> rows;

  static BitMatrix identity(int size);
  std::uint32_t apply(std::uint32_t x) const;
  int row_weight(int row) const;
  int column_weight(int column) const;
  friend BitMatrix operator*(const BitMatrix& l, const BitMatrix& r);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

struct TableRow {
  std::string power;
  std::string polynomial;
  std::string binary;
};

class FieldContext {
 public:
  // `primitive_poly` bit i is the coefficient of x^i; 1 + x + x^4 is 0x13.
  // Throws kInvalidPolynomial (wrong degree, no constant term, bad width)
  // or kNotPrimitive.
  static FieldContext create(int width, std::uint32_t primitive_poly);
  // GF(2^4) with p(x) = 1 + x + x^4.
  static FieldContext gf16();

  int width() const { return width_; }
  std::uint32_t primitive_poly() const { return poly_; }
  // Multiplicative group order, 2^a - 1.
  int order() const { return order_; }
  std::size_t size() const { return std::size_t{1} << width_; }

  FieldElement alpha_pow(long long exponent) const;
  // Discrete log of a nonzero element; throws kInvalidArgument on zero.
  int log(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement div(FieldElement x, FieldElement y) const;
  FieldElement pow(FieldElement x, long long n) const;
  FieldElement inverse(FieldElement x) const;

  // Column j holds the bits of c * alpha^j, so M.apply(x) == mul(c, x).
  BitMatrix mul_matrix(FieldElement c) const;

  // Zero row then alpha^0 .. alpha^(2^a - 2).
  std::vector<TableRow> table_rows() const;

  // Binary text, lowest coefficient first ("1000" is the element 1).
  std::string format(FieldElement x) const;
  FieldElement parse(std::string_view text) const;
  bool contains(FieldElement x) const { return x.bits < size(); }

 private:
  FieldContext() = default;

  int width_ = 0;
  std::uint32_t poly_ = 0;
  int order_ = 0;
  std::vector<std::uint8_t> exp_;
  std::vector<int> log_;
};

}  // namespace fluxwire

#endif  // FLUXWIRE_GF_HPP_
