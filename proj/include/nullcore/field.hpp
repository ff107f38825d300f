// Copyright 2026 The nullcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Finite fields F_p, F_p[t]/(g) and towers of such quotients, with elements
// addressed by a canonical integer code.
//
// The code of an element is the base-p positional value of its flattened
// ascending coefficient digits: an element c0 + c1*x + ... of an extension of
// a field with Q elements has code code(c0) + Q*code(c1) + Q^2*code(c2) + ...
// Zero and one always have codes 0 and 1.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nullcore {

using Code = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Largest cardinality accepted; exp/log tables are sized by it.
  static constexpr std::uint32_t kMaxCardinality = 1u << 20;

  static FieldPtr prime(std::uint32_t p);
  /// Quotient base[x]/(modulus). The modulus is given as ascending codes
  /// over `base`, must be monic of degree >= 2 and irreducible over `base`.
  static FieldPtr extension(FieldPtr base, std::vector<Code> modulus);
  /// F_q for a prime power q. Prime powers use the least irreducible monic
  /// modulus in code order.
  static FieldPtr of_order(std::uint32_t q);
  static FieldPtr from_tower(std::uint32_t p,
                             const std::vector<std::vector<Code>>& tower);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t cardinality() const noexcept { return size_; }
  /// Degree over the immediate subfield (1 for a prime field).
  std::uint32_t degree() const noexcept { return degree_; }
  /// Cardinality of the immediate subfield; p for a prime field.
  std::uint32_t base_cardinality() const noexcept { return base_size_; }
  bool is_prime() const noexcept { return base_ == nullptr; }
  const FieldPtr& base() const noexcept { return base_; }
  const std::vector<Code>& modulus() const noexcept { return modulus_; }
  /// Moduli from the bottom of the tower up; empty for F_p.
  const std::vector<std::vector<Code>>& tower() const noexcept {
    return tower_;
  }

  /// Structural equality: same p and same tower.
  bool same_as(const Field& other) const noexcept;
  /// True when `sub` is structurally the immediate subfield of this field.
  bool extends(const Field& sub) const noexcept;

  bool contains(Code a) const noexcept { return a < size_; }

  Code add(Code a, Code b) const noexcept;
  Code sub(Code a, Code b) const noexcept;
  Code neg(Code a) const noexcept;
  Code mul(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws DivZero on a == 0.
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const noexcept;
  /// z^(Q^i) where Q is base_cardinality().
  Code frobenius(Code z, unsigned i) const noexcept;

  /// Coefficients over the immediate subfield (length degree()).
  std::vector<Code> coefficients(Code a) const;
  Code from_coefficients(std::span<const Code> coeffs) const;

  /// Generator of the multiplicative group used for the exp/log tables.
  Code primitive_element() const noexcept { return generator_; }

  std::string describe() const;

 private:
  Field() = default;
  void build_tables();
  Code slow_mul(Code a, Code b) const;

  std::uint32_t p_ = 0;
  std::uint32_t size_ = 0;
  std::uint32_t degree_ = 1;
  std::uint32_t base_size_ = 0;
  FieldPtr base_;
  std::vector<Code> modulus_;
  std::vector<std::vector<Code>> tower_;

  Code generator_ = 0;
  std::vector<Code> exp_;  // length 2*(size-1)
  std::vector<std::uint32_t> log_;
  std::vector<Code> neg_;
  std::vector<Code> add_table_;  // size^2 when small
};

/// A field element carrying its field. Value type.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Code code);

  const FieldPtr& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
    return a.code_ == b.code_ && a.field_->same_as(*b.field_);
  }

 private:
  FieldPtr field_;
  Code code_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Throws SpecMismatch for elements of different fields, DivZero on b == 0.
FieldElem ff_arith(const FieldElem& a, const FieldElem& b, ArithOp op);

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  return ff_arith(a, b, ArithOp::Add);
}
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  return ff_arith(a, b, ArithOp::Sub);
}
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  return ff_arith(a, b, ArithOp::Mul);
}
inline FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  return ff_arith(a, b, ArithOp::Div);
}

/// z^(Q^i), Q the cardinality of the field directly below z's field.
FieldElem frobenius(const FieldElem& z, unsigned i);

/// Constant-coefficient inclusion of z into an extension K of z's field.
FieldElem embed(const FieldElem& z, const FieldPtr& extension);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace nullcore
