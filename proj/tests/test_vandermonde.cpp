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

#include <algorithm>
#include <set>

#include "nullcore/classes.hpp"
#include "nullcore/error.hpp"
#include "nullcore/matpoly.hpp"
#include "nullcore/rng.hpp"
#include "nullcore/vandermonde.hpp"
#include "test_util.hpp"

using namespace nullcore;
using testutil::c2;
using testutil::f2;
using testutil::f3;

namespace {

Matrix random_matrix(const FieldPtr& f, Rng& rng) {
  Matrix out(f, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = static_cast<Code>(rng.below(f->cardinality()));
  return out;
}

bool contains(const std::vector<Matrix>& sorted, const Matrix& a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

std::vector<Matrix> others(const std::vector<Matrix>& s, const Matrix& skip) {
  std::vector<Matrix> out;
  for (const Matrix& b : s)
    if (b != skip) out.push_back(b);
  return out;
}

}  // namespace

TEST_CASE("pair analysis") {
  const Matrix c = c2();
  const PairAnalysis inv = pair_analysis(c, c * c);
  CHECK_FALSE(inv.singular);
  CHECK(inv.null_diff.dim() == 0);
  CHECK(inv.null_sq_diff.dim() == 0);
  CHECK_FALSE(inv.null_sum.has_value());

  const ClassInventory cls = enumerate_class(testutil::m2());
  const Matrix e1 = Matrix::unit_vector(f2(), 3, 0);
  for (const Matrix& b : others(e_set(cls, c, e1), c)) {
    const PairAnalysis pa = pair_analysis(c, b);
    CHECK(pa.singular);
    CHECK(pa.null_diff == Subspace(e1));
    REQUIRE(pa.null_sum.has_value());
    // a = 0 for x^3 + x + 1
    CHECK(*pa.null_sum == Subspace(vconcat(e1, e1 * c)));
    CHECK(pa.row_meet.dim() == 1);
  }
  // every singular pair at q = 2 and q = 3 passes the internal checks
  for (const UPoly& m : {testutil::m2(), testutil::m3()}) {
    const ClassInventory k = enumerate_class(m);
    std::size_t singular = 0;
    for (std::size_t j = 1; j < k.size(); ++j) singular += pair_analysis(k[0], k[j]).singular;
    const std::uint64_t q = m.field()->cardinality();
    CHECK(singular == k.size() - 1 - closed_forms(q).d);
  }
  CHECK_THROWS_AS(pair_analysis(c, c), Error);
  CHECK_THROWS_AS(pair_analysis(c, Matrix::identity(f2(), 3)), Error);
}

TEST_CASE("singular difference equivalence, exhaustive over pairs") {
  for (const UPoly& m : {testutil::m2(), testutil::m3()}) {
    const ClassInventory cls = enumerate_class(m);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = 0; j < cls.size(); ++j)
        if (i != j && !inv_diff_equivalence(cls[i], cls[j])) ++violations;
    CHECK(violations == 0);
  }
  CHECK(inv_diff_equivalence(c2(), c2()));
}

TEST_CASE("mixed combination is invertible or zero") {
  const Matrix c = c2();
  const auto el = [](const FieldPtr& f, Code x) { return FieldElem(f, x); };
  for (Code a1 = 0; a1 < 2; ++a1)
    for (Code a2 = 0; a2 < 2; ++a2)
      for (Code a3 = 0; a3 < 2; ++a3) {
        const Matrix m = mixed_M(c, c * c, el(f2(), a1), el(f2(), a2), el(f2(), a3));
        if (a1 == 0 && a2 == 0 && a3 == 0) {
          CHECK(m.is_zero());
        } else {
          CHECK(det(m) != 0);
        }
      }
  Rng rng(53);
  const ClassInventory cls = enumerate_class(testutil::m3());
  int done = 0;
  while (done < 1000) {
    const Matrix& a = cls[rng.below(cls.size())];
    const Matrix& b = cls[rng.below(cls.size())];
    if (det(b - a) == 0) continue;
    const Matrix m = mixed_M(a, b, el(f3(), static_cast<Code>(rng.below(3))), el(f3(), static_cast<Code>(rng.below(3))),
                             el(f3(), static_cast<Code>(rng.below(3))));
    CHECK((m.is_zero() || det(m) != 0));
    ++done;
  }
  const Matrix e1 = Matrix::unit_vector(f2(), 3, 0);
  const Matrix b = others(e_set(enumerate_class(testutil::m2()), c, e1), c).front();
  CHECK_THROWS_AS(mixed_M(c, b, el(f2(), 1), el(f2(), 0), el(f2(), 0)), Error);
}

TEST_CASE("triple classification examples") {
  const Matrix c = c2();
  const TripleClassification t = classify_triple(c, c * c, c * c + c);
  CHECK(t.tag == TripleCase::BothInvertible);
  CHECK(t.v_invertible);
  REQUIRE(t.q_b.has_value());
  CHECK(*t.q_b == c * c);
  CHECK(*t.q_c == c * c + c);
  CHECK(t.q_equal == false);
  CHECK(std::string(to_string(t.tag)) == "both-invertible");

  const ClassInventory cls = enumerate_class(testutil::m2());
  const auto fam = others(e_set(cls, c, Matrix::unit_vector(f2(), 3, 0)), c);
  const TripleClassification s = classify_triple(c, fam[0], fam[1]);
  CHECK(s.tag == TripleCase::BothSingular);
  CHECK_FALSE(s.v_invertible);
  CHECK(s.same_nullspace == true);

  const TripleClassification mx = classify_triple(c, c * c, fam[0]);
  CHECK(mx.tag == TripleCase::Mixed);
  CHECK(mx.v_invertible);
  CHECK_THROWS_AS(classify_triple(c, c, c * c), Error);
}

TEST_CASE("triple classification, exhaustive at q = 2") {
  const ClassInventory cls = enumerate_class(testutil::m2());
  std::size_t total = 0, invertible = 0;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j)
      for (std::size_t k = 0; k < cls.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        const TripleClassification t = classify_triple(cls[i], cls[j], cls[k]);
        ++total;
        invertible += t.v_invertible;
        if (t.tag == TripleCase::Mixed) CHECK(t.v_invertible);
      }
  CHECK(total == 24 * 23 * 22);
  // 1856 of the 2024 unordered triples are core
  CHECK(invertible == 1856 * 6);
}

TEST_CASE("triple classification, sampled at q = 3") {
  Rng rng(59);
  const ClassInventory cls = enumerate_class(testutil::m3());
  std::set<TripleCase> seen;
  for (int n = 0; n < 3000;) {
    const std::size_t i = rng.below(cls.size()), j = rng.below(cls.size()), k = rng.below(cls.size());
    if (i == j || j == k || i == k) continue;
    seen.insert(classify_triple(cls[i], cls[j], cls[k]).tag);
    ++n;
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("q_of lands in S_A") {
  const Matrix c = c2();
  CHECK(q_of(c, c * c) == c * c);
  CHECK_THROWS_AS(q_of(c, c), Error);
  for (const UPoly& m : {testutil::m2(), testutil::m3()}) {
    const ClassInventory cls = enumerate_class(m);
    const Matrix a = companion(m);
    const DerivedSets sets = derived_sets(cls, a);
    std::vector<Matrix> seen;
    for (const Matrix& b : sets.d) {
      const Matrix q = q_of(a, b);
      CHECK(contains(sets.s, q));
      seen.push_back(q);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    CHECK(seen == sets.s);
  }
}

TEST_CASE("invertible differences in S_A") {
  for (const UPoly& m : {testutil::m2(), testutil::m3()}) {
    const ClassInventory cls = enumerate_class(m);
    const DerivedSets sets = derived_sets(cls, companion(m));
    CHECK(idp_check(sets.s));
    for (const auto& [v, fam] : sets.e_sets) {
      REQUIRE(fam.size() >= 2);
      CHECK_FALSE(idp_check(fam));
    }
  }
}

TEST_CASE("commutator bridge over GL(3,2)") {
  std::size_t count = 0, invertible = 0;
  for_each_gl3(f2(), [&](const Matrix& u) {
    CHECK(commutator_bridge(u, c2()));
    ++count;
    invertible += det(commutator(u, c2())) != 0;
  });
  CHECK(count == 168);
  CHECK(invertible == 14);
}

TEST_CASE("splitting field context") {
  const ExtensionContext ctx = extension_context(testutil::m2());
  CHECK(ctx.alpha == 2);
  CHECK(ctx.alpha_q == 4);
  CHECK(ctx.alpha_q2 == 6);
  CHECK(ctx.det_p < 2);
  CHECK(ctx.det_p != 0);
  CHECK(ctx.d(0, 0) != ctx.d(1, 1));
  CHECK(ctx.d(1, 1) != ctx.d(2, 2));
  CHECK(ctx.d(0, 0) != ctx.d(2, 2));
  for (const UPoly& m : irreducible_cubics(f3())) {
    const ExtensionContext k = extension_context(m);
    CHECK(k.det_p < 3);
    CHECK(k.delta != 0);
  }
  CHECK_THROWS_AS(extension_context(UPoly(f2(), {1, 1, 1, 1})), Error);
}

TEST_CASE("conjugated entries follow the Frobenius pattern") {
  const ExtensionContext ctx2 = extension_context(testutil::m2());
  CHECK(xentries_check(Matrix::identity(f2(), 3), ctx2));
  for (std::uint64_t code = 0; code < 512; ++code) CHECK(xentries_check(unpack_key(f2(), 3, code), ctx2));
  const ExtensionContext ctx3 = extension_context(testutil::m3());
  Rng rng(61);
  for (int i = 0; i < 1000; ++i) CHECK(xentries_check(random_matrix(f3(), rng), ctx3));
  // a generic matrix over K does not have the pattern
  CHECK_FALSE(xentries_check(Matrix(ctx2.k, 3, 3, {2, 0, 0, 0, 2, 0, 0, 0, 2}), ctx2));
}

TEST_CASE("canonical forms of U_A") {
  for (const UPoly& m : {testutil::m2(), testutil::m3()}) {
    const ExtensionContext ctx = extension_context(m);
    std::set<FormTag> tags;
    for (const Matrix& u : invertible_commutator_set(ctx.companion)) {
      const CanonicalForm form = canonical_form(u, ctx);
      const Matrix x1 = ctx.p * u.embedded(ctx.k) * ctx.p_inv;
      if (x1(0, 2) == 0) CHECK(form.tag == FormTag::I);
      else if (x1(0, 1) == 0) CHECK(form.tag == FormTag::II);
      else {
        CHECK(form.tag == FormTag::III);
        CHECK(form.x != 0);
      }
      tags.insert(form.tag);
    }
    // two classes of forms suffice for |S_A| = 2
    CHECK(tags.count(FormTag::III) == (m.field()->cardinality() > 2 ? 1u : 0u));
  }
  const ExtensionContext ctx = extension_context(testutil::m2());
  CHECK_THROWS_AS(canonical_form(Matrix::identity(f2(), 3), ctx), Error);
}

TEST_CASE("closed-form determinant of S_A differences") {
  for (const UPoly& m : {testutil::m2(), testutil::m3()}) {
    const ExtensionContext ctx = extension_context(m);
    const auto ua = invertible_commutator_set(ctx.companion);
    Rng rng(67);
    auto lift = [&](const Matrix& u) { return ctx.p * u.embedded(ctx.k) * ctx.p_inv; };
    for (int i = 0; i < 500; ++i) {
      const Matrix& u = ua[rng.below(ua.size())];
      const Matrix& v = ua[rng.below(ua.size())];
      const Matrix qu = commutator_conjugate(lift(u), ctx);
      const Matrix qv = commutator_conjugate(lift(v), ctx);
      const FieldElem d = sdiff_det(lift(u), lift(v), ctx);
      CHECK((d.code() == 0) == (qu == qv));
    }
    CHECK(sdiff_det(lift(ua.front()), lift(ua.front()), ctx).code() == 0);
  }
}

TEST_CASE("closed-form determinant for arbitrary matrices over K") {
  const ExtensionContext ctx = extension_context(testutil::m3());
  Rng rng(71);
  int done = 0;
  while (done < 500) {
    const Matrix x = random_matrix(ctx.k, rng);
    const Matrix y = random_matrix(ctx.k, rng);
    if (det(commutator(x, ctx.d)) == 0 || det(commutator(y, ctx.d)) == 0) {
      CHECK_THROWS_AS(sdiff_det(x, y, ctx), Error);
      continue;
    }
    CHECK_NOTHROW(sdiff_det(x, y, ctx));
    ++done;
  }
}

TEST_CASE("form III parameters separate S_A at q = 3") {
  const ExtensionContext ctx = extension_context(testutil::m3());
  std::vector<CanonicalForm> forms;
  for (const Matrix& u : invertible_commutator_set(ctx.companion)) {
    CanonicalForm f = canonical_form(u, ctx);
    if (f.tag == FormTag::III) forms.push_back(std::move(f));
  }
  REQUIRE(forms.size() == 4732);
  Rng rng(71);
  for (int i = 0; i < 20000; ++i) {
    const CanonicalForm& a = forms[rng.below(forms.size())];
    const CanonicalForm& b = forms[rng.below(forms.size())];
    if (a.x != b.x) CHECK(sdiff_det(a.matrix, b.matrix, ctx).code() != 0);
  }
}

TEST_CASE("determinant of a commutator with a diagonal matrix") {
  Rng rng(73);
  const ExtensionContext ctx = extension_context(testutil::m3());
  for (int i = 0; i < 500; ++i) {
    CHECK(diagcomm_identity(random_matrix(ctx.k, rng), ctx.d));
    Matrix d(f3(), 3, 3);
    for (std::size_t j = 0; j < 3; ++j) d(j, j) = static_cast<Code>(rng.below(3));
    CHECK(diagcomm_identity(random_matrix(f3(), rng), d));
  }
  CHECK_THROWS_AS(diagcomm_identity(Matrix(f3(), 2, 2), Matrix(f3(), 3, 3)), Error);
}
