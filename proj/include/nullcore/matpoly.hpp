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

// Polynomials with matrix coefficients under right evaluation, and the
// core decision for finite sets of matrices.
//
// For f = sum_i a_i x^i and a matrix A, f(A) = sum_i a_i A^i: coefficients
// stay on the left of the powers. Stacking [a_0 ... a_(d-1)] against the
// block Vandermonde matrix of S gives the values f(A) for every A in S, so
// the left nullspace of that matrix is exactly the set of null polynomials
// of degree < d. S is core iff that space is zero for d = deg lcm{min polys}.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nullcore/linalg.hpp"

namespace nullcore {

class MatPoly {
 public:
  /// Trailing zero coefficients are dropped.
  MatPoly(FieldPtr field, std::size_t n, std::vector<Matrix> coeffs);
  /// The polynomial with coefficients f_i * I.
  static MatPoly from_scalar(const UPoly& f, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  const std::vector<Matrix>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const MatPoly& a, const MatPoly& b) noexcept {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Matrix> coeffs_;
};

Matrix right_evaluate(const MatPoly& f, const Matrix& a);

/// Sorted by row-major code list, duplicates removed. Validates that the
/// set is nonempty and that all members are square over one field.
std::vector<Matrix> canonical_set(std::span<const Matrix> s);
/// FNV-1a 64 over field tower and the canonical member codes, as hex.
std::string set_digest(std::span<const Matrix> s);

/// Monic lcm of the minimal polynomials. Throws BadInput on an empty set.
UPoly phi_of(std::span<const Matrix> s);

/// (n*d) x (n*|S|) matrix whose column block j is [I; A_j; ...; A_j^(d-1)].
Matrix stacked_vandermonde(std::span<const Matrix> s, std::size_t d);

/// Basis of the null polynomials of degree < deg(phi_S). Each left null
/// vector (w_0 | ... | w_(d-1)) of the stacked Vandermonde matrix becomes
/// the polynomial whose coefficient i has first row w_i and zeros below.
std::vector<MatPoly> low_degree_null_basis(std::span<const Matrix> s);

struct CoreDecision {
  UPoly phi;
  std::size_t degree;
  std::size_t rank;
  std::size_t n;
  bool core;
};

/// Rank test only; what the campaigns use.
CoreDecision decide_core(std::span<const Matrix> s);

struct CoreReport {
  std::string digest;
  std::size_t set_size;
  CoreDecision decision;
  /// Core witness: d members (canonical order) with invertible Vandermonde
  /// matrix, if one exists among the first `tuple_search_limit` tuples.
  std::vector<Matrix> invertible_tuple;
  /// Columns of the stacked matrix holding its pivots; always present for
  /// core sets and certifies full row rank on its own.
  std::vector<std::size_t> pivot_columns;
  /// Non-core witness: nonzero polynomial of degree < d vanishing on S.
  std::optional<MatPoly> null_polynomial;

  bool core() const noexcept { return decision.core; }
};

CoreReport is_core(std::span<const Matrix> s, std::size_t tuple_search_limit = 20000);

/// Polynomial of degree <= 2 vanishing at both A and B. Throws BadInput
/// when A == B.
MatPoly pair_annihilator(const Matrix& a, const Matrix& b);

}  // namespace nullcore
