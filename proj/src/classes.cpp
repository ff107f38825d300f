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

#include "nullcore/classes.hpp"

#include <algorithm>
#include <unordered_set>

#include "nullcore/error.hpp"

namespace nullcore {

namespace {

void check_cubic(const UPoly& m) {
  if (m.degree() != 3 || !m.is_monic()) fail(ErrorCode::BadInput, "m must be a monic cubic");
  if (has_root(m)) fail(ErrorCode::BadInput, "m must be irreducible");
}

// Odometer over all 3x3 matrices in code order.
bool next_matrix(Matrix& x) {
  const Code q = x.field()->cardinality();
  for (std::size_t i = 9; i-- > 0;) {
    Code& c = x(i / 3, i % 3);
    if (++c < q) return true;
    c = 0;
  }
  return false;
}

bool has_char_poly(const Matrix& x, const UPoly& m) {
  const Field& f = *x.field();
  const Code tr = f.add(f.add(x(0, 0), x(1, 1)), x(2, 2));
  if (tr != f.neg(m.coeff(2))) return false;
  auto minor = [&](std::size_t i, std::size_t j) {
    return f.sub(f.mul(x(i, i), x(j, j)), f.mul(x(i, j), x(j, i)));
  };
  if (f.add(f.add(minor(0, 1), minor(0, 2)), minor(1, 2)) != m.coeff(1)) return false;
  return det(x) == f.neg(m.coeff(0));
}

std::vector<Matrix> sorted_unique(std::vector<Matrix> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Matrix> gl_generators(const FieldPtr& field) {
  std::vector<Matrix> gens;
  for (Code lambda = 1; lambda < field->cardinality(); ++lambda) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        Matrix t = Matrix::identity(field, 3);
        t(i, j) = lambda;
        gens.push_back(std::move(t));
      }
    }
  }
  Matrix d = Matrix::identity(field, 3);
  d(0, 0) = field->primitive_element();
  gens.push_back(std::move(d));
  return gens;
}

}  // namespace

ClassInventory::ClassInventory(UPoly m, std::vector<Matrix> members)
    : m_(std::move(m)), members_(sorted_unique(std::move(members))) {
  index_.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(pack_key(members_[i]), i);
}

std::optional<std::size_t> ClassInventory::find(const Matrix& a) const {
  if (a.rows() != 3 || a.cols() != 3 || !a.field()->same_as(*field())) return std::nullopt;
  auto it = index_.find(pack_key(a));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClassInventory enumerate_class(const UPoly& m, EnumerationMethod method) {
  check_cubic(m);
  const FieldPtr& field = m.field();
  if (method == EnumerationMethod::Auto) {
    method = field->cardinality() <= 3 ? EnumerationMethod::Filter : EnumerationMethod::OrbitClosure;
  }
  std::vector<Matrix> members;
  if (method == EnumerationMethod::Filter) {
    Matrix x(field, 3, 3);
    do {
      if (has_char_poly(x, m)) members.push_back(x);
    } while (next_matrix(x));
  } else {
    const std::vector<Matrix> gens = gl_generators(field);
    std::vector<Matrix> gens_inv;
    for (const Matrix& g : gens) gens_inv.push_back(inverse_or_throw(g));
    const Matrix start = companion(m);
    std::unordered_set<std::uint64_t> seen{pack_key(start)};
    std::vector<Matrix> work{start};
    while (!work.empty()) {
      Matrix x = std::move(work.back());
      work.pop_back();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Matrix y = gens[i] * x * gens_inv[i];
        if (seen.insert(pack_key(y)).second) work.push_back(std::move(y));
      }
      members.push_back(std::move(x));
    }
  }
  return ClassInventory(m, std::move(members));
}

void for_each_gl3(const FieldPtr& field, const std::function<void(const Matrix&)>& visit) {
  Matrix x(field, 3, 3);
  do {
    if (det(x) != 0) visit(x);
  } while (next_matrix(x));
}

std::uint64_t gl3_order(std::uint64_t q) {
  const std::uint64_t q3 = q * q * q;
  return (q3 - 1) * (q3 - q) * (q3 - q * q);
}

std::vector<Matrix> projective_vectors(const FieldPtr& field, std::size_t n) {
  std::vector<Matrix> out;
  const Code q = field->cardinality();
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::uint64_t tail = 1;
    for (std::size_t i = lead + 1; i < n; ++i) tail *= q;
    for (std::uint64_t t = 0; t < tail; ++t) {
      Matrix v(field, 1, n);
      v(0, lead) = 1;
      std::uint64_t rest = t;
      for (std::size_t i = n; i-- > lead + 1;) {
        v(0, i) = static_cast<Code>(rest % q);
        rest /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

Matrix canonical_projective(const Matrix& v) {
  for (std::size_t i = 0; i < v.cols(); ++i) {
    if (v(0, i) != 0) return v.scaled(v.field()->inv(v(0, i)));
  }
  fail(ErrorCode::BadInput, "projective vector must be nonzero");
}

std::vector<Matrix> e_set(const ClassInventory& cls, const Matrix& a, const Matrix& v) {
  require(cls.contains(a), ErrorCode::BadInput, "base matrix is not in the class");
  require(v.rows() == 1 && v.cols() == 3, ErrorCode::BadInput, "v must be a row vector of length 3");
  require(!v.is_zero(), ErrorCode::BadInput, "v must be nonzero");
  const Matrix va = v * a;
  std::vector<Matrix> out;
  for (const Matrix& b : cls.members()) {
    if (v * b == va) out.push_back(b);
  }
  return out;
}

std::vector<Matrix> invertible_commutator_set(const Matrix& a) {
  std::vector<Matrix> out;
  for_each_gl3(a.field(), [&](const Matrix& u) {
    if (det(commutator(u, a)) != 0) out.push_back(u);
  });
  return out;
}

DerivedSets derived_sets(const ClassInventory& cls, const Matrix& a) {
  require(cls.contains(a), ErrorCode::BadInput, "base matrix is not in the class");
  DerivedSets out{a, {}, {}, {}, {}, {}};
  for (Matrix& v : projective_vectors(cls.field())) {
    auto e = e_set(cls, a, v);
    out.e_sets.emplace_back(std::move(v), std::move(e));
  }
  for (const Matrix& b : cls.members()) {
    if (det(b - a) != 0) out.d.push_back(b);
  }
  out.u = invertible_commutator_set(a);
  std::vector<Matrix> brackets;
  brackets.reserve(out.u.size());
  for (const Matrix& u : out.u) brackets.push_back(commutator(u, a));
  out.b = sorted_unique(std::move(brackets));
  std::vector<Matrix> conj;
  conj.reserve(out.b.size());
  for (const Matrix& c : out.b) conj.push_back(c * a * inverse_or_throw(c));
  out.s = sorted_unique(std::move(conj));
  return out;
}

ClosedForms closed_forms(std::uint64_t q) {
  const std::uint64_t q2 = q * q;
  const std::uint64_t q3 = q2 * q;
  const std::uint64_t clique = q3 - q2 - q;
  ClosedForms f{};
  f.class_size = (q3 - q) * (q3 - q2);
  f.e_set = q3 - q2;
  f.d = clique * (clique - 1);
  f.u = (q3 - 1) * f.d;
  f.b = (q3 - 1) * clique;
  f.s = clique;
  f.complement_degree = q2 * q3 - 2 * q2 - q - 1;
  return f;
}

bool CountReport::all_match() const {
  for (const auto& c : counts) {
    if (!c.match) return false;
  }
  for (const auto& s : structure) {
    if (!s.second) return false;
  }
  return true;
}

CountReport verify_counts(const ClassInventory& cls, const std::optional<Matrix>& base) {
  const Matrix a = base ? *base : companion(cls.m());
  const ClosedForms f = closed_forms(cls.field()->cardinality());
  const DerivedSets sets = derived_sets(cls, a);

  CountReport report;
  auto add = [&](std::string name, std::uint64_t enumerated, std::uint64_t formula) {
    report.counts.push_back({std::move(name), enumerated, formula, enumerated == formula});
  };
  add("class-size", cls.size(), f.class_size);

  // every E set must have the same size; report the first deviating one
  std::uint64_t e_size = sets.e_sets.front().second.size();
  for (const auto& [v, e] : sets.e_sets) {
    if (e.size() != f.e_set) {
      e_size = e.size();
      break;
    }
  }
  add("e-set-size", e_size, f.e_set);
  add("d-size", sets.d.size(), f.d);
  add("u-size", sets.u.size(), f.u);
  add("b-size", sets.b.size(), f.b);
  add("s-size", sets.s.size(), f.s);

  bool intersections = true;
  std::unordered_set<std::uint64_t> union_keys;
  for (std::size_t i = 0; i < sets.e_sets.size(); ++i) {
    std::unordered_set<std::uint64_t> keys;
    for (const Matrix& b : sets.e_sets[i].second) {
      keys.insert(pack_key(b));
      union_keys.insert(pack_key(b));
    }
    for (std::size_t j = i + 1; j < sets.e_sets.size(); ++j) {
      std::size_t common = 0;
      bool has_base = false;
      for (const Matrix& b : sets.e_sets[j].second) {
        if (keys.count(pack_key(b)) != 0) {
          ++common;
          has_base = has_base || b == a;
        }
      }
      intersections = intersections && common == 1 && has_base;
    }
  }
  report.structure.emplace_back("e-sets-meet-in-base", intersections);

  bool complement = union_keys.size() + sets.d.size() == cls.size();
  for (const Matrix& b : sets.d) complement = complement && union_keys.count(pack_key(b)) == 0;
  report.structure.emplace_back("d-complement-is-e-union", complement);
  return report;
}

bool in_polynomial_algebra(const Matrix& a, const Matrix& b) {
  require(a.is_square() && b.rows() == a.rows() && b.cols() == a.cols(), ErrorCode::BadInput,
          "shape mismatch");
  const std::size_t n = a.rows();
  std::vector<Code> rows;
  Matrix power = Matrix::identity(a.field(), n);
  for (std::size_t k = 0; k < n; ++k) {
    rows.insert(rows.end(), power.entries().begin(), power.entries().end());
    power = power * a;
  }
  Matrix span(a.field(), n, n * n, rows);
  rows.insert(rows.end(), b.entries().begin(), b.entries().end());
  return rank(Matrix(a.field(), n + 1, n * n, std::move(rows))) == rank(span);
}

bool ua_equals_ub(const Matrix& a, const Matrix& b) {
  require(a.rows() == 3 && a.cols() == 3, ErrorCode::BadInput, "A must be 3x3");
  const UPoly mu = min_poly(a);
  if (mu.degree() != 3 || has_root(mu)) fail(ErrorCode::BadInput, "A must have an irreducible cubic minimal polynomial");
  if (is_scalar(b)) fail(ErrorCode::BadInput, "B must not be scalar");
  if (!in_polynomial_algebra(a, b)) fail(ErrorCode::BadInput, "B must be a polynomial in A");
  return invertible_commutator_set(a) == invertible_commutator_set(b);
}

}  // namespace nullcore
