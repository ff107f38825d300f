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

#include <set>

#include "nullcore/error.hpp"
#include "nullcore/field.hpp"
#include "nullcore/rng.hpp"
#include "nullcore/upoly.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace nullcore;
using testutil::f2;
using testutil::f3;

namespace {

// Product of ascending digit vectors over F_p reduced by a monic modulus,
// returned as a code.
Code poly_mul_mod(Code a, Code b, const std::vector<int>& modulus, int p) {
  const int k = static_cast<int>(modulus.size()) - 1;
  std::vector<int> x(k), y(k), r(2 * k, 0);
  for (int i = 0; i < k; ++i) {
    x[i] = static_cast<int>(a % p);
    a /= p;
    y[i] = static_cast<int>(b % p);
    b /= p;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r[i + j] = oracle::mod(r[i + j] + x[i] * y[j], p);
  for (int i = 2 * k - 1; i >= k; --i) {
    const int c = r[i];
    if (c == 0) continue;
    for (int j = 0; j <= k; ++j) r[i - k + j] = oracle::mod(r[i - k + j] - c * modulus[j], p);
  }
  Code out = 0;
  for (int i = k - 1; i >= 0; --i) out = out * p + r[i];
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const FieldElem one(f2(), 1);
  CHECK((one + one).code() == 0);
  for (Code a = 0; a < 3; ++a) {
    for (Code b = 0; b < 3; ++b) {
      CHECK(f3()->add(a, b) == (a + b) % 3);
      CHECK(f3()->mul(a, b) == (a * b) % 3);
      CHECK(f3()->sub(a, b) == (a + 3 - b) % 3);
    }
  }
  CHECK_THROWS_AS(Field::prime(4), Error);
}

TEST_CASE("cubic extension of F_2") {
  FieldPtr k = Field::extension(f2(), {1, 1, 0, 1});
  CHECK(k->cardinality() == 8);
  const FieldElem alpha(k, 2);
  const FieldElem alpha2(k, 4);
  CHECK((alpha * alpha2).code() == 3);
  CHECK(frobenius(alpha, 1).code() == 4);
  CHECK(frobenius(alpha, 3).code() == 2);
  for (Code a = 0; a < 8; ++a) {
    CHECK(k->mul(a, 1) == a);
    for (Code b = 0; b < 8; ++b) {
      CHECK(k->mul(a, b) == oracle::gf2_mul(a, b, 0b1011));
      CHECK(k->add(a, b) == (a ^ b));
    }
  }
}

TEST_CASE("prime power fields match polynomial arithmetic") {
  struct Case {
    std::uint32_t q;
    int p;
    std::vector<int> modulus;
  };
  // of_order picks the least irreducible monic modulus in code order
  for (const Case& c : {Case{4, 2, {1, 1, 1}}, Case{8, 2, {1, 1, 0, 1}}, Case{9, 3, {1, 0, 1}},
                        Case{25, 5, {2, 0, 1}}, Case{27, 3, {1, 2, 0, 1}}}) {
    CAPTURE(c.q);
    FieldPtr f = Field::of_order(c.q);
    REQUIRE(f->cardinality() == c.q);
    std::vector<Code> expected_modulus(c.modulus.begin(), c.modulus.end());
    CHECK(f->modulus() == expected_modulus);
    for (Code a = 0; a < c.q; ++a) {
      for (Code b = 0; b < c.q; ++b) CHECK(f->mul(a, b) == poly_mul_mod(a, b, c.modulus, c.p));
    }
  }
}

TEST_CASE("field errors") {
  const FieldElem a(f2(), 1);
  const FieldElem b(f3(), 1);
  CHECK_THROWS_AS(a + b, Error);
  try {
    (void)(a + b);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpecMismatch);
  }
  try {
    (void)(a / FieldElem(f2(), 0));
    FAIL("expected DivZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivZero);
  }
  CHECK_THROWS_AS(FieldElem(f2(), 2), Error);
  CHECK_THROWS_AS(Field::extension(f2(), {1, 1, 1, 1}), Error);  // 1 is a root
  CHECK_THROWS_AS(Field::extension(f2(), {1, 1, 0, 0}), Error);
  CHECK_THROWS_AS(Field::of_order(6), Error);
}

TEST_CASE("Lagrange: z^(N-1) = 1") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 125u, 128u, 243u, 256u, 343u, 512u}) {
    CAPTURE(q);
    FieldPtr f = Field::of_order(q);
    for (Code z = 1; z < q; ++z) CHECK(f->pow(z, q - 1) == 1);
  }
  FieldPtr big = Field::of_order(3125);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Code z = 1 + static_cast<Code>(rng.below(3124));
    CHECK(big->pow(z, 3124) == 1);
  }
}

TEST_CASE("frobenius is a field automorphism fixing the base") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    FieldPtr base = Field::of_order(q);
    for (const UPoly& m : irreducible_cubics(base)) {
      FieldPtr k = Field::extension(base, m.coefficients());
      const Code n = k->cardinality();
      if (n > 64) continue;
      for (Code a = 0; a < n; ++a) {
        CHECK(k->frobenius(a, 3) == a);
        CHECK(k->frobenius(a, 1) == k->pow(a, q));
        for (Code b = 0; b < n; ++b) {
          CHECK(k->frobenius(k->add(a, b), 1) == k->add(k->frobenius(a, 1), k->frobenius(b, 1)));
          CHECK(k->frobenius(k->mul(a, b), 1) == k->mul(k->frobenius(a, 1), k->frobenius(b, 1)));
        }
      }
      for (Code z = 0; z < q; ++z) {
        CHECK(embed(FieldElem(base, z), k).code() == z);
        CHECK(k->frobenius(z, 1) == z);
      }
    }
  }
}

TEST_CASE("embed is a ring homomorphism") {
  FieldPtr base = Field::of_order(5);
  FieldPtr k = Field::extension(base, {1, 1, 0, 1});  // x^3 + x + 1
  CHECK(embed(FieldElem(base, 0), k).code() == 0);
  CHECK(embed(FieldElem(base, 1), k).code() == 1);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const FieldElem a(base, static_cast<Code>(rng.below(5)));
    const FieldElem b(base, static_cast<Code>(rng.below(5)));
    CHECK(embed(a, k) * embed(b, k) == embed(a * b, k));
    CHECK(embed(a, k) + embed(b, k) == embed(a + b, k));
  }
  CHECK_THROWS_AS(embed(FieldElem(f3(), 1), k), Error);
}

TEST_CASE("codes enumerate distinct elements and round-trip") {
  FieldPtr f = Field::of_order(27);
  std::set<std::vector<Code>> seen;
  for (Code a = 0; a < 27; ++a) {
    auto c = f->coefficients(a);
    CHECK(f->from_coefficients(c) == a);
    seen.insert(c);
  }
  CHECK(seen.size() == 27);
}

TEST_CASE("irreducible cubics") {
  auto over2 = irreducible_cubics(f2());
  REQUIRE(over2.size() == 2);
  CHECK(over2[0] == UPoly(f2(), {1, 1, 0, 1}));
  CHECK(over2[1] == UPoly(f2(), {1, 0, 1, 1}));
  CHECK(irreducible_cubics(f3()).size() == 8);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    auto list = irreducible_cubics(Field::of_order(q));
    CHECK(list.size() == (q * q * q - q) / 3);
    for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].sort_key() < list[i].sort_key());
  }
  CHECK_FALSE(is_irreducible(UPoly(f2(), {1, 1, 1, 1})));
}

TEST_CASE("polynomial gcd and lcm") {
  const UPoly m = testutil::m2();
  const UPoly lin = UPoly::linear(f2(), 1);
  const UPoly l = lcm(m, lin);
  CHECK(l.degree() == 4);
  CHECK(l == m * lin);
  CHECK(gcd(m, lin).degree() == 0);
  auto [qt, r] = divmod(m * lin, m);
  CHECK(qt == lin);
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(m, UPoly::zero(f2())), Error);
}
