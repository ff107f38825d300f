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

#include "nullcore/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "nullcore/error.hpp"

namespace nullcore {

namespace {

void trim(std::vector<Code>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void check_same(const UPoly& a, const UPoly& b) {
  if (!a.field()->same_as(*b.field())) {
    fail(ErrorCode::SpecMismatch, "polynomials over different fields");
  }
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-|F| digits of `index`.
UPoly monic_from_index(const FieldPtr& f, int degree, std::uint64_t index) {
  std::vector<Code> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) {
    c[i] = static_cast<Code>(index % f->cardinality());
    index /= f->cardinality();
  }
  c[degree] = 1;
  return UPoly(f, std::move(c));
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

UPoly::UPoly(FieldPtr field, std::vector<Code> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  require(field_ != nullptr, ErrorCode::BadInput, "polynomial needs a field");
  for (Code c : coeffs_) {
    require(field_->contains(c), ErrorCode::BadInput, "coefficient code out of range");
  }
  trim(coeffs_);
}

UPoly UPoly::linear(FieldPtr field, Code root) {
  Code c0 = field->neg(root);
  return UPoly(std::move(field), {c0, 1});
}

Code UPoly::evaluate(Code x) const noexcept {
  Code acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_->add(field_->mul(acc, x), *it);
  }
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Code inv = field_->inv(leading());
  std::vector<Code> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->mul(coeffs_[i], inv);
  return UPoly(field_, std::move(c));
}

std::uint64_t UPoly::sort_key() const noexcept {
  std::uint64_t key = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    key = key * field_->cardinality() + *it;
  }
  return key;
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Code c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << "*";
    out << "x";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  check_same(a, b);
  std::vector<Code> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_->add(a.coeff(i), b.coeff(i));
  return UPoly(a.field_, std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  check_same(a, b);
  std::vector<Code> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_->sub(a.coeff(i), b.coeff(i));
  return UPoly(a.field_, std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return UPoly::zero(a.field_);
  const Field& f = *a.field_;
  std::vector<Code> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return UPoly(a.field_, std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  check_same(a, b);
  if (b.is_zero()) fail(ErrorCode::DivZero, "polynomial division by zero");
  const Field& f = *a.field();
  std::vector<Code> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly::zero(a.field()), a};
  std::vector<Code> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const Code lead_inv = f.inv(b.leading());
  for (int top = a.degree(); top >= db; --top) {
    const Code c = f.mul(rem[top], lead_inv);
    quot[top - db] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) {
      rem[top - db + i] = f.sub(rem[top - db + i], f.mul(c, b.coeff(i)));
    }
  }
  return {UPoly(a.field(), std::move(quot)), UPoly(a.field(), std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly::zero(a.field());
  return divmod(a * b, gcd(a, b)).first.monic();
}

bool has_root(const UPoly& f) {
  for (Code x = 0; x < f.field()->cardinality(); ++x) {
    if (f.evaluate(x) == 0) return true;
  }
  return false;
}

bool is_irreducible(const UPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FieldPtr& field = f.field();
  for (int d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(field->cardinality(), d);
    for (std::uint64_t i = 0; i < count; ++i) {
      if (divmod(f, monic_from_index(field, d, i)).second.is_zero()) return false;
    }
  }
  return true;
}

std::vector<UPoly> irreducible_cubics(const FieldPtr& field) {
  std::vector<UPoly> out;
  const std::uint64_t count = ipow(field->cardinality(), 3);
  for (std::uint64_t i = 0; i < count; ++i) {
    UPoly m = monic_from_index(field, 3, i);
    // a cubic with no root has no linear factor, hence is irreducible
    if (!has_root(m)) out.push_back(std::move(m));
  }
  return out;
}

UPoly least_irreducible(const FieldPtr& field, int degree) {
  require(degree >= 1, ErrorCode::BadInput, "degree must be positive");
  const std::uint64_t count = ipow(field->cardinality(), degree);
  for (std::uint64_t i = 0; i < count; ++i) {
    UPoly g = monic_from_index(field, degree, i);
    if (is_irreducible(g)) return g;
  }
  fail(ErrorCode::BadInput, "no irreducible polynomial found");
}

}  // namespace nullcore
