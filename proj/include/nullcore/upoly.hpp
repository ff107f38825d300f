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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nullcore/field.hpp"

namespace nullcore {

/// Univariate polynomial over a finite field, ascending coefficient codes.
/// The coefficient list never carries trailing zeros.
class UPoly {
 public:
  UPoly(FieldPtr field, std::vector<Code> coeffs);

  static UPoly zero(FieldPtr field) { return UPoly(std::move(field), {}); }
  static UPoly constant(FieldPtr field, Code c) {
    return UPoly(std::move(field), {c});
  }
  /// x - root
  static UPoly linear(FieldPtr field, Code root);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Code>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !is_zero() && coeffs_.back() == 1; }
  Code coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  Code leading() const noexcept { return is_zero() ? 0 : coeffs_.back(); }

  Code evaluate(Code x) const noexcept;
  UPoly monic() const;

  /// Sum of code_i * |F|^i; orders polynomials of equal field by code.
  std::uint64_t sort_key() const noexcept;
  std::string to_string() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) noexcept {
    return a.coeffs_ == b.coeffs_ && a.field_->same_as(*b.field_);
  }

 private:
  FieldPtr field_;
  std::vector<Code> coeffs_;
};

/// Quotient and remainder; throws DivZero for a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Monic lcm.
UPoly lcm(const UPoly& a, const UPoly& b);

bool has_root(const UPoly& f);
/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const UPoly& f);

/// All monic irreducible cubics over `field`, in code order.
std::vector<UPoly> irreducible_cubics(const FieldPtr& field);
/// Least monic irreducible polynomial of the given degree, in code order.
UPoly least_irreducible(const FieldPtr& field, int degree);

}  // namespace nullcore
