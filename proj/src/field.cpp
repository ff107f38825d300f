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

#include "nullcore/field.hpp"

#include <sstream>

#include "nullcore/error.hpp"
#include "nullcore/upoly.hpp"

namespace nullcore {

namespace {

constexpr std::uint32_t kAddTableLimit = 256;

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DivZero: return "DivZero";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldPtr Field::prime(std::uint32_t p) {
  if (!nullcore::is_prime(p)) fail(ErrorCode::BadInput, "characteristic must be prime");
  if (p > kMaxCardinality) fail(ErrorCode::SizeGuard, "prime too large");
  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->size_ = p;
  f->degree_ = 1;
  f->base_size_ = p;
  f->build_tables();
  return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Code> modulus) {
  require(base != nullptr, ErrorCode::BadInput, "extension needs a base field");
  UPoly g(base, modulus);
  if (g.degree() < 2 || g.coefficients().size() != modulus.size()) {
    fail(ErrorCode::BadInput, "modulus must have degree >= 2 and no trailing zeros");
  }
  require(g.is_monic(), ErrorCode::BadInput, "modulus must be monic");
  require(is_irreducible(g), ErrorCode::BadInput, "modulus must be irreducible");

  std::uint64_t size = 1;
  for (int i = 0; i < g.degree(); ++i) {
    size *= base->cardinality();
    if (size > kMaxCardinality) fail(ErrorCode::SizeGuard, "field too large");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = base->characteristic();
  f->size_ = static_cast<std::uint32_t>(size);
  f->degree_ = static_cast<std::uint32_t>(g.degree());
  f->base_size_ = base->cardinality();
  f->tower_ = base->tower();
  f->tower_.push_back(modulus);
  f->modulus_ = std::move(modulus);
  f->base_ = std::move(base);
  f->build_tables();
  return f;
}

FieldPtr Field::of_order(std::uint32_t q) {
  if (q < 2) fail(ErrorCode::BadInput, "field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) fail(ErrorCode::BadInput, "field order must be a prime power");
  FieldPtr base = prime(p);
  if (k == 1) return base;
  return extension(base, least_irreducible(base, static_cast<int>(k)).coefficients());
}

FieldPtr Field::from_tower(std::uint32_t p,
                           const std::vector<std::vector<Code>>& tower) {
  FieldPtr f = prime(p);
  for (const auto& modulus : tower) f = extension(f, modulus);
  return f;
}

bool Field::same_as(const Field& other) const noexcept {
  return this == &other || (p_ == other.p_ && tower_ == other.tower_);
}

bool Field::extends(const Field& sub) const noexcept {
  return base_ != nullptr && base_->same_as(sub);
}

Code Field::add(Code a, Code b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (base_ == nullptr) {
    Code s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  Code result = 0;
  Code scale = 1;
  while (a != 0 || b != 0) {
    result += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return result;
}

Code Field::neg(Code a) const noexcept { return neg_[a]; }

Code Field::sub(Code a, Code b) const noexcept { return add(a, neg_[b]); }

Code Field::inv(Code a) const {
  if (a == 0) fail(ErrorCode::DivZero, "inverse of zero");
  const std::uint32_t order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

Code Field::pow(Code a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

Code Field::frobenius(Code z, unsigned i) const noexcept {
  if (z == 0) return 0;
  const std::uint64_t order = size_ - 1;
  std::uint64_t e = 1;
  for (unsigned k = 0; k < i; ++k) e = (e * base_size_) % order;
  return exp_[(static_cast<std::uint64_t>(log_[z]) * e) % order];
}

std::vector<Code> Field::coefficients(Code a) const {
  std::vector<Code> out(degree_);
  for (auto& c : out) {
    c = a % base_size_;
    a /= base_size_;
  }
  return out;
}

Code Field::from_coefficients(std::span<const Code> coeffs) const {
  Code a = 0;
  Code scale = 1;
  for (std::size_t i = 0; i < coeffs.size() && i < degree_; ++i) {
    a += coeffs[i] * scale;
    scale *= base_size_;
  }
  return a;
}

Code Field::slow_mul(Code a, Code b) const {
  if (base_ == nullptr) {
    return static_cast<Code>(static_cast<std::uint64_t>(a) * b % p_);
  }
  const Field& k = *base_;
  auto ca = coefficients(a);
  auto cb = coefficients(b);
  std::vector<Code> prod(2 * degree_ - 1, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < degree_; ++j) {
      prod[i + j] = k.add(prod[i + j], k.mul(ca[i], cb[j]));
    }
  }
  // reduce by the monic modulus, top down
  for (std::size_t top = prod.size() - 1; top >= degree_; --top) {
    const Code lead = prod[top];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= degree_; ++i) {
      const std::size_t idx = top - degree_ + i;
      prod[idx] = k.sub(prod[idx], k.mul(lead, modulus_[i]));
    }
  }
  prod.resize(degree_);
  return from_coefficients(prod);
}

void Field::build_tables() {
  neg_.resize(size_);
  for (Code a = 0; a < size_; ++a) {
    Code r = 0;
    Code scale = 1;
    for (Code t = a; t != 0; t /= p_) {
      r += ((p_ - t % p_) % p_) * scale;
      scale *= p_;
    }
    neg_[a] = r;
  }

  if (base_ != nullptr && p_ != 2 && size_ <= kAddTableLimit) {
    add_table_.resize(static_cast<std::size_t>(size_) * size_);
    for (Code a = 0; a < size_; ++a) {
      for (Code b = 0; b < size_; ++b) {
        Code r = 0;
        Code scale = 1;
        for (Code x = a, y = b; x != 0 || y != 0; x /= p_, y /= p_) {
          r += ((x % p_ + y % p_) % p_) * scale;
          scale *= p_;
        }
        add_table_[a * size_ + b] = r;
      }
    }
  }

  const std::uint32_t order = size_ - 1;
  std::vector<Code> powers;
  powers.reserve(order);
  for (Code g = (size_ == 2 ? 1 : 2); g < size_; ++g) {
    powers.clear();
    Code x = 1;
    do {
      powers.push_back(x);
      x = slow_mul(x, g);
    } while (x != 1 && powers.size() <= order);
    if (powers.size() == order) {
      generator_ = g;
      break;
    }
  }
  if (generator_ == 0) fail(ErrorCode::BadInput, "no primitive element; modulus not irreducible");

  exp_.resize(2 * static_cast<std::size_t>(order));
  log_.assign(size_, 0);
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = powers[i];
    exp_[i + order] = powers[i];
    log_[powers[i]] = i;
  }
}

std::string Field::describe() const {
  if (base_ == nullptr) return "GF(" + std::to_string(p_) + ")";
  std::ostringstream out;
  out << "GF(" << size_ << ") = " << base_->describe() << "[x]/("
      << UPoly(base_, modulus_).to_string() << ")";
  return out.str();
}

FieldElem::FieldElem(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  require(field_ != nullptr, ErrorCode::BadInput, "element needs a field");
  require(field_->contains(code_), ErrorCode::BadInput, "element code out of range");
}

FieldElem ff_arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
  if (!a.field()->same_as(*b.field())) {
    fail(ErrorCode::SpecMismatch, "operands belong to different fields");
  }
  const Field& f = *a.field();
  switch (op) {
    case ArithOp::Add: return {a.field(), f.add(a.code(), b.code())};
    case ArithOp::Sub: return {a.field(), f.sub(a.code(), b.code())};
    case ArithOp::Mul: return {a.field(), f.mul(a.code(), b.code())};
    case ArithOp::Div:
      if (b.is_zero()) fail(ErrorCode::DivZero, "division by zero");
      return {a.field(), f.div(a.code(), b.code())};
  }
  fail(ErrorCode::BadInput, "unknown arithmetic operation");
}

FieldElem frobenius(const FieldElem& z, unsigned i) {
  return {z.field(), z.field()->frobenius(z.code(), i)};
}

FieldElem embed(const FieldElem& z, const FieldPtr& extension) {
  for (const Field* f = extension.get(); f != nullptr; f = f->base().get()) {
    if (f->same_as(*z.field())) return {extension, z.code()};
  }
  fail(ErrorCode::SpecMismatch, "target is not an extension of the element's field");
}

}  // namespace nullcore
