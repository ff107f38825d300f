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

#include "doctest.h"

#include "nullcore/classes.hpp"
#include "nullcore/error.hpp"
#include "nullcore/matpoly.hpp"
#include "nullcore/rng.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace nullcore;
using testutil::c2;
using testutil::f2;
using testutil::f3;
using testutil::mat;

namespace {

oracle::M3 to_m3(const Matrix& a) {
  oracle::M3 out{};
  for (int i = 0; i < 9; ++i) out[i] = static_cast<int>(a.entries()[i]);
  return out;
}

// E_11 x - E_11 C
MatPoly first_row_poly(const Matrix& c) {
  Matrix e11(c.field(), 3, 3);
  e11(0, 0) = 1;
  return MatPoly(c.field(), 3, {Matrix::zero(c.field(), 3) - e11 * c, e11});
}

Matrix random_invertible(const FieldPtr& f, Rng& rng) {
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= f->cardinality();
  for (;;) {
    Matrix u = unpack_key(f, 3, rng.below(total));
    if (det(u) != 0) return u;
  }
}

}  // namespace

TEST_CASE("right evaluation") {
  const ClassInventory cls = enumerate_class(testutil::m2());
  const MatPoly m = MatPoly::from_scalar(testutil::m2(), 3);
  for (const Matrix& a : cls.members()) CHECK(right_evaluate(m, a).is_zero());
  const MatPoly x(f2(), 3, {Matrix::zero(f2(), 3), Matrix::identity(f2(), 3)});
  for (const Matrix& a : cls.members()) CHECK(right_evaluate(x, a) == a);
  // every matrix with first row (0,0,1), in the class or not
  const MatPoly f = first_row_poly(c2());
  for (std::uint64_t tail = 0; tail < 64; ++tail) {
    Matrix b = unpack_key(f2(), 3, (1u << 6) | tail);
    CHECK(right_evaluate(f, b).is_zero());
  }
  CHECK_THROWS_AS(right_evaluate(f, Matrix::identity(f3(), 3)), Error);
}

TEST_CASE("phi of a set") {
  const ClassInventory cls = enumerate_class(testutil::m2());
  CHECK(phi_of(cls.members()) == testutil::m2());
  const std::vector<Matrix> scalar{Matrix::scalar(f3(), 3, 2)};
  CHECK(phi_of(scalar) == UPoly::linear(f3(), 2));
  const std::vector<Matrix> mixed{c2(), Matrix::identity(f2(), 3)};
  const UPoly phi = phi_of(mixed);
  CHECK(phi.degree() == 4);
  CHECK(phi == testutil::m2() * UPoly::linear(f2(), 1));
  CHECK_THROWS_AS(phi_of(std::vector<Matrix>{}), Error);
}

TEST_CASE("stacked Vandermonde") {
  const Matrix c = c2();
  const std::vector<Matrix> s{c, c * c, c * c + c};
  CHECK(rank(stacked_vandermonde(s, 1)) == 3);
  const Matrix v = stacked_vandermonde(s, 3);
  CHECK(v.rows() == 9);
  CHECK(v.cols() == 9);
  CHECK(rank(v) == 9);
  // block (i, j) is A_j^i
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) {
      const Matrix p = mat_pow(s[j], i);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t col = 0; col < 3; ++col) CHECK(v(3 * i + r, 3 * j + col) == p(r, col));
    }
}

TEST_CASE("null polynomials of small sets") {
  const ClassInventory cls = enumerate_class(testutil::m2());
  CHECK(low_degree_null_basis(cls.members()).empty());

  const Matrix c = c2();
  const auto family = e_set(cls, c, Matrix::unit_vector(f2(), 3, 0));
  REQUIRE(family.size() == 4);
  const auto basis = low_degree_null_basis(family);
  REQUIRE_FALSE(basis.empty());
  // the null space contains the vector (-e1 C | e1 | 0)
  Matrix rows(f2(), basis.size(), 9);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto& coeffs = basis[r].coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (std::size_t k = 0; k < 3; ++k) rows(r, 3 * i + k) = coeffs[i](0, k);
  }
  const Matrix e1 = Matrix::unit_vector(f2(), 3, 0);
  const Matrix target = hconcat(hconcat(Matrix(f2(), 1, 3) - e1 * c, e1), Matrix(f2(), 1, 3));
  CHECK(Subspace(rows).contains(target));
  for (const MatPoly& f : basis) {
    CHECK(f.degree() < 3);
    for (const Matrix& b : family) CHECK(right_evaluate(f, b).is_zero());
  }

  const std::vector<Matrix> single{c};
  CHECK_FALSE(low_degree_null_basis(single).empty());
}

TEST_CASE("core decisions on named sets") {
  const Matrix c = c2();
  const std::vector<Matrix> triple{c, c * c, c * c + c};
  const CoreReport core = is_core(triple);
  CHECK(core.core());
  CHECK(core.decision.rank == 9);
  CHECK(core.invertible_tuple.size() == 3);
  CHECK(core.pivot_columns.size() == 9);
  CHECK_FALSE(core.null_polynomial.has_value());

  const ClassInventory cls = enumerate_class(testutil::m2());
  const auto family = e_set(cls, c, Matrix::unit_vector(f2(), 3, 0));
  const CoreReport non = is_core(family);
  CHECK_FALSE(non.core());
  REQUIRE(non.null_polynomial.has_value());
  for (const Matrix& b : family) CHECK(right_evaluate(*non.null_polynomial, b).is_zero());

  CHECK(is_core(std::vector<Matrix>{Matrix::identity(f2(), 3)}).core());
  CHECK_THROWS_AS(is_core(std::vector<Matrix>{}), Error);
  CHECK_THROWS_AS(is_core(std::vector<Matrix>{c, Matrix::identity(f3(), 3)}), Error);
  // digest is independent of order and duplicates
  const std::vector<Matrix> shuffled{c * c + c, c, c * c, c};
  CHECK(set_digest(shuffled) == core.digest);
}

TEST_CASE("core fractions at q = 2 match the brute-force oracle") {
  const ClassInventory cls = enumerate_class(testutil::m2());
  const std::size_t n = cls.size();
  std::size_t core2 = 0, core3 = 0, core4 = 0, total3 = 0, total4 = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      core2 += decide_core(std::vector<Matrix>{cls[a], cls[b]}).core;
      for (std::size_t c = b + 1; c < n; ++c) {
        ++total3;
        const bool k3 = decide_core(std::vector<Matrix>{cls[a], cls[b], cls[c]}).core;
        core3 += k3;
        if (total3 % 97 == 0) {
          const std::vector<oracle::M3> s{to_m3(cls[a]), to_m3(cls[b]), to_m3(cls[c])};
          CHECK(k3 == !oracle::has_null_vector(s, 3, 2));
        }
        for (std::size_t d = c + 1; d < n; ++d) {
          ++total4;
          core4 += decide_core(std::vector<Matrix>{cls[a], cls[b], cls[c], cls[d]}).core;
        }
      }
    }
  CHECK(core2 == 0);
  CHECK(total3 == 2024);
  CHECK(core3 == 1856);
  CHECK(total4 == 10626);
  CHECK(core4 == 10584);
}

TEST_CASE("core verdict is invariant under simultaneous conjugation") {
  Rng rng(23);
  for (const UPoly& m : {testutil::m2(), testutil::m3()}) {
    const ClassInventory cls = enumerate_class(m);
    for (int i = 0; i < 50; ++i) {
      const std::size_t size = 2 + rng.below(4);
      std::vector<Matrix> s;
      for (std::size_t k = 0; k < size; ++k) s.push_back(cls[rng.below(cls.size())]);
      const Matrix u = random_invertible(m.field(), rng);
      const Matrix u_inv = inverse_or_throw(u);
      std::vector<Matrix> t;
      for (const Matrix& a : s) t.push_back(u * a * u_inv);
      CHECK(decide_core(canonical_set(s)).core == decide_core(canonical_set(t)).core);
    }
  }
}

TEST_CASE("rank is monotone in the set") {
  Rng rng(29);
  const ClassInventory cls = enumerate_class(testutil::m3());
  for (int i = 0; i < 50; ++i) {
    std::vector<Matrix> s{cls[rng.below(cls.size())]};
    std::size_t last = 0;
    for (int k = 0; k < 6; ++k) {
      const std::size_t r = rank(stacked_vandermonde(s, 3));
      CHECK(r >= last);
      last = r;
      s.push_back(cls[rng.below(cls.size())]);
    }
  }
}

TEST_CASE("pair annihilator") {
  const Matrix c = c2();
  const MatPoly f = pair_annihilator(c, c * c);
  CHECK(f.degree() == 2);
  CHECK(f.coefficients().back() == Matrix::identity(f2(), 3));
  CHECK(right_evaluate(f, c).is_zero());
  CHECK(right_evaluate(f, c * c).is_zero());

  const ClassInventory cls = enumerate_class(testutil::m2());
  for (const Matrix& b : e_set(cls, c, Matrix::unit_vector(f2(), 3, 0))) {
    if (b == c) continue;
    const MatPoly g = pair_annihilator(c, b);
    CHECK(g.degree() == 1);
    CHECK(rank(g.coefficients()[1]) == 1);
    CHECK(g.coefficients()[1].row(0) == Matrix::unit_vector(f2(), 3, 0));
  }
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j)
      if (i != j) CHECK(pair_annihilator(cls[i], cls[j]).degree() <= 2);
  CHECK_THROWS_AS(pair_annihilator(c, c), Error);
}
