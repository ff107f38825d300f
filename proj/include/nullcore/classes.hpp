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

// The conjugacy class C(m) of 3x3 matrices with an irreducible cubic
// characteristic polynomial m, and the sets derived from a base point A:
//
//   E_{A,v} = {B in C(m) : vB = vA}            (v a nonzero row vector)
//   D_A     = {B in C(m) : B - A invertible}
//   U_A     = {U in GL(3,q) : [U,A] invertible}
//   B_A     = {[U,A] : U in U_A}
//   S_A     = {[U,A] A [U,A]^-1 : U in U_A}

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nullcore/linalg.hpp"

namespace nullcore {

class ClassInventory {
 public:
  ClassInventory(UPoly m, std::vector<Matrix> members);

  const UPoly& m() const noexcept { return m_; }
  const FieldPtr& field() const noexcept { return m_.field(); }
  const std::vector<Matrix>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Matrix& operator[](std::size_t i) const { return members_[i]; }
  std::optional<std::size_t> find(const Matrix& a) const;
  bool contains(const Matrix& a) const { return find(a).has_value(); }

 private:
  UPoly m_;
  std::vector<Matrix> members_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

enum class EnumerationMethod { Auto, Filter, OrbitClosure };

/// Auto filters all q^9 matrices when q <= 3 and closes the conjugation
/// orbit of companion(m) under generators of GL(3,q) otherwise.
ClassInventory enumerate_class(const UPoly& m, EnumerationMethod method = EnumerationMethod::Auto);

/// Visits every invertible 3x3 matrix over `field` in code order. The
/// matrix reference is only valid during the call.
void for_each_gl3(const FieldPtr& field, const std::function<void(const Matrix&)>& visit);
std::uint64_t gl3_order(std::uint64_t q);

/// Nonzero row vectors of length n whose first nonzero entry is 1.
std::vector<Matrix> projective_vectors(const FieldPtr& field, std::size_t n = 3);
/// First nonzero coordinate scaled to 1. Throws BadInput for v = 0.
Matrix canonical_projective(const Matrix& v);

std::vector<Matrix> e_set(const ClassInventory& cls, const Matrix& a, const Matrix& v);

struct DerivedSets {
  Matrix base;
  std::vector<std::pair<Matrix, std::vector<Matrix>>> e_sets;  // keyed by projective v
  std::vector<Matrix> d;
  std::vector<Matrix> u;
  std::vector<Matrix> b;
  std::vector<Matrix> s;
};

DerivedSets derived_sets(const ClassInventory& cls, const Matrix& a);
/// U_A alone, by streaming GL(3,q).
std::vector<Matrix> invertible_commutator_set(const Matrix& a);

struct CountCheck {
  std::string name;
  std::uint64_t enumerated;
  std::uint64_t formula;
  bool match;
};

struct CountReport {
  std::vector<CountCheck> counts;
  /// Structural identities: pairwise E intersections and the complement of D.
  std::vector<std::pair<std::string, bool>> structure;
  bool all_match() const;
};

struct ClosedForms {
  std::uint64_t class_size, e_set, d, u, b, s, complement_degree;
};
ClosedForms closed_forms(std::uint64_t q);

/// Enumerates every set for the base point (companion(m) by default) and
/// compares with the closed forms.
CountReport verify_counts(const ClassInventory& cls, const std::optional<Matrix>& base = std::nullopt);

/// B in F[A]: vec(B) lies in the span of vec(I), vec(A), ..., vec(A^(n-1)).
bool in_polynomial_algebra(const Matrix& a, const Matrix& b);

/// Compares the enumerated U_A and U_B. Requires an irreducible cubic
/// minimal polynomial for A and B in F[A] nonscalar (BadInput otherwise).
bool ua_equals_ub(const Matrix& a, const Matrix& b);

}  // namespace nullcore
