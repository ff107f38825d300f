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

#include "nullcore/linalg.hpp"

#include <utility>

#include "nullcore/error.hpp"

namespace nullcore {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  require(field_ != nullptr, ErrorCode::BadInput, "matrix needs a field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  require(field_ != nullptr, ErrorCode::BadInput, "matrix needs a field");
  require(a_.size() == rows_ * cols_, ErrorCode::BadInput, "entry count does not match shape");
  for (Code c : a_) require(field_->contains(c), ErrorCode::BadInput, "matrix entry out of range");
}

Matrix Matrix::scalar(FieldPtr field, std::size_t n, Code lambda) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda;
  return m;
}

Matrix Matrix::diagonal(FieldPtr field, std::span<const Code> diag) {
  Matrix m(std::move(field), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::row_vector(FieldPtr field, std::vector<Code> entries) {
  const std::size_t n = entries.size();
  return Matrix(std::move(field), 1, n, std::move(entries));
}

Matrix Matrix::unit_vector(FieldPtr field, std::size_t n, std::size_t i) {
  Matrix v(std::move(field), 1, n);
  v(0, i) = 1;
  return v;
}

bool Matrix::is_zero() const noexcept {
  for (Code c : a_) {
    if (c != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::row(std::size_t r) const {
  Matrix v(field_, 1, cols_);
  for (std::size_t c = 0; c < cols_; ++c) v(0, c) = (*this)(r, c);
  return v;
}

Matrix Matrix::scaled(Code lambda) const {
  Matrix m = *this;
  for (Code& c : m.a_) c = field_->mul(c, lambda);
  return m;
}

Matrix Matrix::embedded(const FieldPtr& extension) const {
  bool ok = false;
  for (const Field* f = extension.get(); f != nullptr && !ok; f = f->base().get()) {
    ok = f->same_as(*field_);
  }
  if (!ok) fail(ErrorCode::SpecMismatch, "target is not an extension of the matrix field");
  Matrix m(extension, rows_, cols_);
  m.a_ = a_;
  return m;
}

Matrix mat_arith(const Matrix& a, const Matrix& b, MatOp op) {
  if (!a.field()->same_as(*b.field())) fail(ErrorCode::SpecMismatch, "matrices over different fields");
  const Field& f = *a.field();
  if (op == MatOp::Mul) {
    if (a.cols() != b.rows()) fail(ErrorCode::SpecMismatch, "inner dimensions differ");
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Code x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
        }
      }
    }
    return out;
  }
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::SpecMismatch, "shapes differ");
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = op == MatOp::Add ? f.add(a(i, j), b(i, j)) : f.sub(a(i, j), b(i, j));
    }
  }
  return out;
}

Matrix mat_pow(const Matrix& a, std::uint64_t k) {
  require(a.is_square(), ErrorCode::SpecMismatch, "power of a non-square matrix");
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Matrix add_scalar(const Matrix& a, Code lambda) {
  require(a.is_square(), ErrorCode::SpecMismatch, "scalar shift of a non-square matrix");
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i) m(i, i) = a.field()->add(m(i, i), lambda);
  return m;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Matrix hconcat(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorCode::SpecMismatch, "row counts differ");
  if (!a.field()->same_as(*b.field())) fail(ErrorCode::SpecMismatch, "matrices over different fields");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), ErrorCode::SpecMismatch, "column counts differ");
  if (!a.field()->same_as(*b.field())) fail(ErrorCode::SpecMismatch, "matrices over different fields");
  std::vector<Code> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(e));
}

Echelon rref(const Matrix& a) {
  const Field& f = *a.field();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Code inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Code factor = m(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(m), r, std::move(pivots)};
}

std::size_t rank(const Matrix& a) {
  // forward elimination only; no need for the reduced form
  const Field& f = *a.field();
  Matrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Code inv = f.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Code factor = f.mul(m(i, c), inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
    }
    ++r;
  }
  return r;
}

Code det(const Matrix& a) {
  require(a.is_square(), ErrorCode::SpecMismatch, "determinant of a non-square matrix");
  const Field& f = *a.field();
  Matrix m = a;
  const std::size_t n = m.rows();
  Code d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(c, c));
    const Code inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Code factor = f.mul(m(i, c), inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return d;
}

bool is_invertible(const Matrix& a) { return det(a) != 0; }

std::optional<Matrix> inverse(const Matrix& a) {
  require(a.is_square(), ErrorCode::SpecMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Echelon e = rref(hconcat(a, Matrix::identity(a.field(), n)));
  if (e.rank < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

Matrix inverse_or_throw(const Matrix& a) {
  auto inv = inverse(a);
  if (!inv) fail(ErrorCode::BadInput, "matrix is singular");
  return *std::move(inv);
}

RankDetInv rank_det_inv(const Matrix& a) {
  require(a.is_square(), ErrorCode::SpecMismatch, "rank_det_inv needs a square matrix");
  RankDetInv out{rank(a), det(a), inverse(a)};
  if ((out.det != 0) != out.inverse.has_value()) {
    fail(ErrorCode::VerificationFailed, "determinant and inverse disagree");
  }
  if (out.inverse && *out.inverse * a != Matrix::identity(a.field(), a.rows())) {
    fail(ErrorCode::VerificationFailed, "inverse check failed");
  }
  return out;
}

Subspace::Subspace(const Matrix& spanning_rows, Orientation orientation)
    : basis_(spanning_rows.field(), 0, spanning_rows.cols()), orientation_(orientation) {
  Echelon e = rref(spanning_rows);
  std::vector<Code> rows(e.reduced.entries().begin(),
                         e.reduced.entries().begin() + static_cast<std::ptrdiff_t>(e.rank * spanning_rows.cols()));
  basis_ = Matrix(spanning_rows.field(), e.rank, spanning_rows.cols(), std::move(rows));
}

Subspace Subspace::zero(FieldPtr field, std::size_t ambient, Orientation o) {
  return Subspace(Matrix(std::move(field), 0, ambient), o, true);
}

bool Subspace::contains(const Matrix& vector) const {
  require(vector.rows() == 1 && vector.cols() == ambient_dim(), ErrorCode::SpecMismatch,
          "vector does not match the ambient space");
  return rank(vconcat(basis_, vector)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_dim() == ambient_dim(), ErrorCode::SpecMismatch, "ambient dimensions differ");
  return rank(vconcat(basis_, other.basis_)) == dim();
}

Subspace Subspace::image(const Matrix& m) const {
  if (dim() == 0) return Subspace::zero(field(), m.rows(), orientation_);
  if (orientation_ == Orientation::RightNull) return Subspace(basis_ * m.transpose(), orientation_);
  return Subspace(basis_ * m, orientation_);
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  return Subspace(vconcat(a.basis(), b.basis()), a.orientation());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), ErrorCode::SpecMismatch, "ambient dimensions differ");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.field(), a.ambient_dim(), a.orientation());
  Matrix neg_b = b.basis().scaled(a.field()->neg(1));
  Subspace coeffs = left_nullspace(vconcat(a.basis(), neg_b));
  if (coeffs.dim() == 0) return Subspace::zero(a.field(), a.ambient_dim(), a.orientation());
  Matrix x(a.field(), coeffs.dim(), a.dim());
  for (std::size_t r = 0; r < coeffs.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) x(r, c) = coeffs.basis()(r, c);
  }
  return Subspace(x * a.basis(), a.orientation());
}

Subspace row_space(const Matrix& a) { return Subspace(a, Orientation::RowSpace); }

namespace {

// Column-vector solutions of M w = 0, returned as rows.
Matrix right_null_rows(const Matrix& m) {
  const Field& f = *m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  Matrix out(m.field(), m.cols() - e.rank, m.cols());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(k, free) = 1;
    for (std::size_t i = 0; i < e.rank; ++i) out(k, e.pivot_cols[i]) = f.neg(e.reduced(i, free));
    ++k;
  }
  return out;
}

}  // namespace

Subspace right_nullspace(const Matrix& a) {
  Matrix rows = right_null_rows(a);
  if (rows.rows() == 0) return Subspace::zero(a.field(), a.cols(), Orientation::RightNull);
  return Subspace(rows, Orientation::RightNull);
}

Subspace left_nullspace(const Matrix& a) {
  Matrix rows = right_null_rows(a.transpose());
  if (rows.rows() == 0) return Subspace::zero(a.field(), a.rows(), Orientation::LeftNull);
  return Subspace(rows, Orientation::LeftNull);
}

Nullspaces nullspaces(const Matrix& a) {
  require(a.is_square(), ErrorCode::SpecMismatch, "nullspaces needs a square matrix");
  return Nullspaces{left_nullspace(a), right_nullspace(a)};
}

UPoly char_poly3(const Matrix& a) {
  require(a.rows() == 3 && a.cols() == 3, ErrorCode::BadInput, "char_poly3 needs a 3x3 matrix");
  const Field& f = *a.field();
  auto minor = [&](std::size_t i, std::size_t j) {
    return f.sub(f.mul(a(i, i), a(j, j)), f.mul(a(i, j), a(j, i)));
  };
  const Code tr = f.add(f.add(a(0, 0), a(1, 1)), a(2, 2));
  const Code c2 = f.add(f.add(minor(0, 1), minor(0, 2)), minor(1, 2));
  return UPoly(a.field(), {f.neg(det(a)), c2, f.neg(tr), 1});
}

UPoly min_poly(const Matrix& a) {
  require(a.is_square(), ErrorCode::BadInput, "min_poly needs a square matrix");
  const std::size_t n = a.rows();
  require(n >= 1 && n <= 4, ErrorCode::BadInput, "min_poly supports n <= 4");
  std::vector<Code> krylov;  // rows vec(A^0), vec(A^1), ...
  Matrix power = Matrix::identity(a.field(), n);
  for (std::size_t k = 0; k <= n; ++k) {
    krylov.insert(krylov.end(), power.entries().begin(), power.entries().end());
    if (k > 0) {
      Matrix stack(a.field(), k + 1, n * n, krylov);
      Subspace null = left_nullspace(stack);
      if (null.dim() > 0) {
        // I..A^(k-1) are independent, so the relation is unique up to scale
        Matrix rel = null.basis().row(0);
        const Code lead_inv = a.field()->inv(rel(0, k));
        std::vector<Code> coeffs(k + 1);
        for (std::size_t i = 0; i <= k; ++i) coeffs[i] = a.field()->mul(rel(0, i), lead_inv);
        return UPoly(a.field(), std::move(coeffs));
      }
    }
    power = power * a;
  }
  fail(ErrorCode::VerificationFailed, "no annihilating polynomial of degree <= n");
}

Matrix companion(const UPoly& m) {
  if (m.degree() != 3 || !m.is_monic()) fail(ErrorCode::BadInput, "companion needs a monic cubic");
  const Field& f = *m.field();
  Matrix c(m.field(), 3, 3);
  c(0, 2) = f.neg(m.coeff(0));
  c(1, 0) = 1;
  c(1, 2) = f.neg(m.coeff(1));
  c(2, 1) = 1;
  c(2, 2) = f.neg(m.coeff(2));
  return c;
}

bool is_scalar(const Matrix& a) {
  require(a.is_square(), ErrorCode::BadInput, "is_scalar needs a square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j && a(i, j) != 0) return false;
      if (i == j && a(i, i) != a(0, 0)) return false;
    }
  }
  return true;
}

Matrix evaluate(const UPoly& f, const Matrix& a) {
  require(a.is_square(), ErrorCode::BadInput, "evaluate needs a square matrix");
  if (!f.field()->same_as(*a.field())) fail(ErrorCode::SpecMismatch, "polynomial and matrix fields differ");
  Matrix acc = Matrix::zero(a.field(), a.rows());
  for (int i = f.degree(); i >= 0; --i) acc = add_scalar(acc * a, f.coeff(static_cast<std::size_t>(i)));
  return acc;
}

std::uint64_t pack_key(const Matrix& a) {
  const std::uint64_t q = a.field()->cardinality();
  std::uint64_t key = 0;
  std::uint64_t limit = UINT64_MAX / q;
  for (Code c : a.entries()) {
    if (key > limit) fail(ErrorCode::SizeGuard, "matrix key does not fit in 64 bits");
    key = key * q + c;
  }
  return key;
}

Matrix unpack_key(const FieldPtr& field, std::size_t n, std::uint64_t key) {
  const std::uint64_t q = field->cardinality();
  std::vector<Code> e(n * n);
  for (std::size_t i = e.size(); i-- > 0;) {
    e[i] = static_cast<Code>(key % q);
    key /= q;
  }
  return Matrix(field, n, n, std::move(e));
}

}  // namespace nullcore
