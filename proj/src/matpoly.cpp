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

#include "nullcore/matpoly.hpp"

#include <algorithm>
#include <cstdio>

#include "nullcore/error.hpp"

namespace nullcore {

MatPoly::MatPoly(FieldPtr field, std::size_t n, std::vector<Matrix> coeffs)
    : field_(std::move(field)), n_(n), coeffs_(std::move(coeffs)) {
  for (const Matrix& c : coeffs_) {
    require(c.rows() == n_ && c.cols() == n_, ErrorCode::SpecMismatch, "coefficient shape mismatch");
    if (!c.field()->same_as(*field_)) fail(ErrorCode::SpecMismatch, "coefficient field mismatch");
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

MatPoly MatPoly::from_scalar(const UPoly& f, std::size_t n) {
  std::vector<Matrix> c;
  for (Code x : f.coefficients()) c.push_back(Matrix::scalar(f.field(), n, x));
  return MatPoly(f.field(), n, std::move(c));
}

Matrix right_evaluate(const MatPoly& f, const Matrix& a) {
  if (!f.field()->same_as(*a.field())) fail(ErrorCode::SpecMismatch, "polynomial and matrix fields differ");
  if (a.rows() != f.dim() || a.cols() != f.dim()) fail(ErrorCode::SpecMismatch, "dimension mismatch");
  Matrix acc = Matrix::zero(a.field(), f.dim());
  Matrix power = Matrix::identity(a.field(), f.dim());
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    if (i > 0) power = power * a;
    acc = acc + f.coefficients()[i] * power;
  }
  return acc;
}

std::vector<Matrix> canonical_set(std::span<const Matrix> s) {
  require(!s.empty(), ErrorCode::BadInput, "matrix set is empty");
  const std::size_t n = s.front().rows();
  for (const Matrix& m : s) {
    require(m.is_square() && m.rows() == n && n > 0, ErrorCode::BadInput,
            "set members must be square of equal dimension");
    if (!m.field()->same_as(*s.front().field())) fail(ErrorCode::BadInput, "set members over different fields");
  }
  std::vector<Matrix> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string set_digest(std::span<const Matrix> s) {
  std::vector<Matrix> sorted = canonical_set(s);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  const Field& f = *sorted.front().field();
  mix(f.characteristic());
  for (const auto& modulus : f.tower()) {
    mix(modulus.size());
    for (Code c : modulus) mix(c);
  }
  mix(sorted.front().rows());
  for (const Matrix& m : sorted) {
    for (Code c : m.entries()) mix(c);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

UPoly phi_of(std::span<const Matrix> s) {
  require(!s.empty(), ErrorCode::BadInput, "phi of an empty set");
  UPoly acc = min_poly(s.front());
  for (std::size_t i = 1; i < s.size(); ++i) {
    UPoly mu = min_poly(s[i]);
    if (divmod(acc, mu).second.is_zero()) continue;
    acc = lcm(acc, mu);
  }
  return acc;
}

Matrix stacked_vandermonde(std::span<const Matrix> s, std::size_t d) {
  require(d >= 1, ErrorCode::BadInput, "Vandermonde degree must be positive");
  require(!s.empty(), ErrorCode::BadInput, "Vandermonde of an empty set");
  const std::size_t n = s.front().rows();
  Matrix v(s.front().field(), n * d, n * s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    require(s[j].rows() == n && s[j].cols() == n, ErrorCode::BadInput, "members must share a dimension");
    Matrix power = Matrix::identity(s.front().field(), n);
    for (std::size_t i = 0; i < d; ++i) {
      if (i > 0) power = power * s[j];
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) v(i * n + r, j * n + c) = power(r, c);
      }
    }
  }
  return v;
}

namespace {

MatPoly poly_from_null_vector(const Matrix& basis, std::size_t row, std::size_t n, std::size_t d) {
  std::vector<Matrix> coeffs;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix c(basis.field(), n, n);
    for (std::size_t k = 0; k < n; ++k) c(0, k) = basis(row, i * n + k);
    coeffs.push_back(std::move(c));
  }
  return MatPoly(basis.field(), n, std::move(coeffs));
}

void check_vanishes(const MatPoly& f, std::span<const Matrix> s) {
  for (const Matrix& a : s) {
    if (!right_evaluate(f, a).is_zero()) {
      fail(ErrorCode::VerificationFailed, "null polynomial does not vanish on the set");
    }
  }
}

}  // namespace

std::vector<MatPoly> low_degree_null_basis(std::span<const Matrix> s) {
  std::vector<Matrix> set = canonical_set(s);
  const std::size_t n = set.front().rows();
  const std::size_t d = static_cast<std::size_t>(phi_of(set).degree());
  if (d == 0) return {};
  Subspace null = left_nullspace(stacked_vandermonde(set, d));
  std::vector<MatPoly> out;
  for (std::size_t r = 0; r < null.dim(); ++r) {
    MatPoly f = poly_from_null_vector(null.basis(), r, n, d);
    check_vanishes(f, set);
    out.push_back(std::move(f));
  }
  return out;
}

CoreDecision decide_core(std::span<const Matrix> s) {
  require(!s.empty(), ErrorCode::BadInput, "matrix set is empty");
  const std::size_t n = s.front().rows();
  UPoly phi = phi_of(s);
  const std::size_t d = static_cast<std::size_t>(phi.degree());
  const std::size_t r = d == 0 ? 0 : rank(stacked_vandermonde(s, d));
  return CoreDecision{std::move(phi), d, r, n, r == n * d};
}

CoreReport is_core(std::span<const Matrix> s, std::size_t tuple_search_limit) {
  std::vector<Matrix> set = canonical_set(s);
  CoreReport report{set_digest(set), set.size(), decide_core(set), {}, {}, std::nullopt};
  const std::size_t n = report.decision.n;
  const std::size_t d = report.decision.degree;

  if (!report.core()) {
    std::vector<MatPoly> basis = low_degree_null_basis(set);
    if (basis.empty()) fail(ErrorCode::VerificationFailed, "rank deficit without a null polynomial");
    report.null_polynomial = std::move(basis.front());
    return report;
  }

  Echelon e = rref(stacked_vandermonde(set, d));
  report.pivot_columns = e.pivot_cols;

  if (set.size() < d) return report;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  for (std::size_t tried = 0; tried < tuple_search_limit; ++tried) {
    std::vector<Matrix> tuple;
    for (std::size_t i : idx) tuple.push_back(set[i]);
    if (rank(stacked_vandermonde(tuple, d)) == n * d) {
      report.invertible_tuple = std::move(tuple);
      break;
    }
    // next combination in lexicographic order
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == set.size() - d + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return report;
}

MatPoly pair_annihilator(const Matrix& a, const Matrix& b) {
  if (a == b) fail(ErrorCode::BadInput, "pair_annihilator needs distinct matrices");
  require(a.is_square() && a.rows() == b.rows() && b.is_square(), ErrorCode::BadInput,
          "pair_annihilator needs square matrices of equal size");
  const std::size_t n = a.rows();
  const FieldPtr& f = a.field();
  const Matrix diff = b - a;
  std::vector<Matrix> coeffs;
  if (auto u = inverse(diff)) {
    // [0 0 I] * (block row ops clearing the first column, then the second)
    const Matrix a2 = a * a;
    const Matrix w = (b * b - a2) * *u;
    coeffs = {w * a - a2, Matrix::zero(f, n) - w, Matrix::identity(f, n)};
  } else {
    Subspace left = left_nullspace(diff);
    Matrix alpha1(f, n, n);
    for (std::size_t k = 0; k < n; ++k) alpha1(0, k) = left.basis()(0, k);
    coeffs = {Matrix::zero(f, n) - alpha1 * a, alpha1};
  }
  MatPoly out(f, n, std::move(coeffs));
  if (!right_evaluate(out, a).is_zero() || !right_evaluate(out, b).is_zero()) {
    fail(ErrorCode::VerificationFailed, "pair annihilator does not vanish");
  }
  return out;
}

}  // namespace nullcore
