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

// Dense exact linear algebra over a finite field. Vectors are row vectors
// (1 x n matrices) unless a function says otherwise.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nullcore/field.hpp"
#include "nullcore/upoly.hpp"

namespace nullcore {

class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> entries);

  static Matrix zero(FieldPtr field, std::size_t n) { return {std::move(field), n, n}; }
  static Matrix identity(FieldPtr field, std::size_t n) { return scalar(std::move(field), n, 1); }
  static Matrix scalar(FieldPtr field, std::size_t n, Code lambda);
  static Matrix diagonal(FieldPtr field, std::span<const Code> diag);
  static Matrix row_vector(FieldPtr field, std::vector<Code> entries);
  /// Standard basis row vector e_i (0-based).
  static Matrix unit_vector(FieldPtr field, std::size_t n, std::size_t i);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Code>& entries() const noexcept { return a_; }

  Code operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }
  Code& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * cols_ + c]; }

  bool is_zero() const noexcept;
  Matrix transpose() const;
  Matrix row(std::size_t r) const;
  Matrix scaled(Code lambda) const;
  /// Same entries read in an extension field of this matrix's field.
  Matrix embedded(const FieldPtr& extension) const;

  /// Lexicographic on the row-major code list; fields must agree.
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) noexcept {
    return a.a_ <=> b.a_;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ &&
           a.field_->same_as(*b.field_);
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> a_;
};

enum class MatOp { Add, Sub, Mul };

/// Throws SpecMismatch on field or shape mismatch.
Matrix mat_arith(const Matrix& a, const Matrix& b, MatOp op);
Matrix mat_pow(const Matrix& a, std::uint64_t k);

inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_arith(a, b, MatOp::Add); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return mat_arith(a, b, MatOp::Sub); }
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_arith(a, b, MatOp::Mul); }

/// A + lambda*I
Matrix add_scalar(const Matrix& a, Code lambda);
/// [X, Y] = XY - YX
Matrix commutator(const Matrix& x, const Matrix& y);
/// Horizontal [a | b] and vertical [a ; b] concatenation.
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;  // reduced row echelon form, pivots normalized to 1
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form: first nonzero pivot in column order, rows
/// scaled to pivot 1, full upward reduction.
Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
Code det(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
/// Throws BadInput when singular.
Matrix inverse_or_throw(const Matrix& a);
bool is_invertible(const Matrix& a);

struct RankDetInv {
  std::size_t rank;
  Code det;
  std::optional<Matrix> inverse;
};
RankDetInv rank_det_inv(const Matrix& a);

enum class Orientation { RowSpace, LeftNull, RightNull };

/// Subspace of F^n kept as a canonical reduced echelon basis. Right-null
/// spaces hold column vectors, stored here transposed as rows.
class Subspace {
 public:
  /// Spanning rows may be dependent; they are reduced on construction.
  Subspace(const Matrix& spanning_rows, Orientation orientation = Orientation::RowSpace);
  static Subspace zero(FieldPtr field, std::size_t ambient, Orientation o = Orientation::RowSpace);

  const FieldPtr& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  Orientation orientation() const noexcept { return orientation_; }

  bool contains(const Matrix& vector) const;
  bool contains(const Subspace& other) const;
  /// Image {v M} of a row-oriented space; for right-null spaces {M w}.
  Subspace image(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.basis_ == b.basis_;
  }

 private:
  Subspace(Matrix basis, Orientation o, bool) : basis_(std::move(basis)), orientation_(o) {}
  Matrix basis_;
  Orientation orientation_;
};

Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace row_space(const Matrix& a);

struct Nullspaces {
  Subspace left;   // {v : v A = 0}
  Subspace right;  // {w : A w^T = 0}
};
Nullspaces nullspaces(const Matrix& a);
Subspace left_nullspace(const Matrix& a);
Subspace right_nullspace(const Matrix& a);

/// x^3 - tr(A) x^2 + c2(A) x - det(A); 3x3 only.
UPoly char_poly3(const Matrix& a);
/// Least k with A^k dependent on I..A^(k-1); n <= 4.
UPoly min_poly(const Matrix& a);
/// [[0,0,-c],[1,0,-b],[0,1,-a]] for m = x^3 + a x^2 + b x + c.
Matrix companion(const UPoly& m);
bool is_scalar(const Matrix& a);
/// f(A) with scalar coefficients.
Matrix evaluate(const UPoly& f, const Matrix& a);

/// Row-major code list packed base |F| into one integer, first entry most
/// significant, so key order matches matrix order. Requires |F|^(rows*cols)
/// to fit in 64 bits.
std::uint64_t pack_key(const Matrix& a);
Matrix unpack_key(const FieldPtr& field, std::size_t n, std::uint64_t key);

}  // namespace nullcore
