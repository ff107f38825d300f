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

#include "nullcore/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>

#include "nullcore/error.hpp"
#include "nullcore/rng.hpp"

namespace nullcore {

namespace {

// det(B - A) != 0 for 3x3 matrices, without allocating.
bool difference_invertible(const Field& f, const Matrix& a, const Matrix& b) {
  std::array<Code, 9> d;
  for (std::size_t i = 0; i < 9; ++i) d[i] = f.sub(b.entries()[i], a.entries()[i]);
  auto m2 = [&](int i, int j, int k, int l) { return f.sub(f.mul(d[i], d[j]), f.mul(d[k], d[l])); };
  Code r = f.mul(d[0], m2(4, 8, 5, 7));
  r = f.sub(r, f.mul(d[1], m2(3, 8, 5, 6)));
  r = f.add(r, f.mul(d[2], m2(3, 7, 4, 6)));
  return r != 0;
}

}  // namespace

bool GammaGraph::adjacent(std::uint32_t i, std::uint32_t j) const {
  const auto& row = adjacency.at(i);
  return std::binary_search(row.begin(), row.end(), j);
}

GammaGraph build_gamma(const ClassInventory& cls, std::uint32_t max_q) {
  const std::uint32_t q = cls.field()->cardinality();
  if (q > max_q) fail(ErrorCode::SizeGuard, "graph construction refused for q = " + std::to_string(q));
  GammaGraph g{cls, std::vector<std::vector<std::uint32_t>>(cls.size()), 0};
  const Field& f = *cls.field();
  const auto n = static_cast<std::uint32_t>(cls.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (difference_invertible(f, cls[i], cls[j])) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
        ++g.edge_count;
      }
    }
  }
  return g;
}

GammaGraph build_gamma(const UPoly& m, std::uint32_t max_q) {
  if (m.field()->cardinality() > max_q) {
    fail(ErrorCode::SizeGuard, "graph construction refused for q = " + std::to_string(m.field()->cardinality()));
  }
  return build_gamma(enumerate_class(m), max_q);
}

std::vector<std::size_t> component_sizes(const GammaGraph& g) {
  const std::size_t n = g.adjacency.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    stack.push_back(s);
    std::size_t size = 0;
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      ++size;
      for (std::uint32_t w : g.adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

GraphSummary summarize(const GammaGraph& g, const Matrix& base) {
  require(g.vertices.contains(base), ErrorCode::BadInput, "base is not a vertex");
  const std::uint64_t q = g.vertices.field()->cardinality();
  const ClosedForms forms = closed_forms(q);

  GraphSummary s{};
  s.vertex_count = g.adjacency.size();
  s.edge_count = g.edge_count;
  for (const auto& row : g.adjacency) ++s.degree_histogram[row.size()];
  if (s.degree_histogram.size() == 1) {
    s.regular_degree = s.degree_histogram.begin()->first;
    s.complement_degree = s.vertex_count - 1 - *s.regular_degree;
  }
  s.component_sizes = component_sizes(g);
  s.complement_degree_closed_form = forms.complement_degree;

  const DerivedSets sets = derived_sets(g.vertices, base);
  for (const Matrix& m : sets.s) {
    auto idx = g.vertices.find(m);
    if (!idx) fail(ErrorCode::VerificationFailed, "S_A member outside the class");
    s.clique.push_back(static_cast<std::uint32_t>(*idx));
  }
  std::sort(s.clique.begin(), s.clique.end());
  s.clique_adjacent = true;
  for (std::size_t i = 0; i < s.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < s.clique.size(); ++j) {
      s.clique_adjacent = s.clique_adjacent && g.adjacent(s.clique[i], s.clique[j]);
    }
  }
  // the same vertices form an independent set of the complement
  s.complement_independent = s.clique_adjacent;
  s.clique_within_bound = s.clique.size() <= q * q * q - 1;
  return s;
}

Matrix conjugator(const Matrix& a, const Matrix& b) {
  require(a.rows() == 3 && a.cols() == 3 && b.rows() == 3 && b.cols() == 3, ErrorCode::BadInput,
          "matrices must be 3x3");
  require(char_poly3(a) == char_poly3(b), ErrorCode::BadInput, "matrices are not conjugate");
  auto krylov = [](const Matrix& x) {
    const Matrix v = Matrix::unit_vector(x.field(), 3, 0);
    const Matrix vx = v * x;
    return vconcat(vconcat(v, vx), vx * x);
  };
  auto kb_inv = inverse(krylov(b));
  require(kb_inv.has_value(), ErrorCode::BadInput, "e1 is not cyclic for B");
  const Matrix u = *kb_inv * krylov(a);
  auto u_inv = inverse(u);
  require(u_inv.has_value(), ErrorCode::BadInput, "e1 is not cyclic for A");
  if (!(u * a * *u_inv == b)) fail(ErrorCode::VerificationFailed, "Krylov conjugator does not map A to B");
  return u;
}

bool vertex_transitivity_probe(const GammaGraph& g, std::size_t samples, std::uint64_t seed,
                               std::size_t pairs_per_sample) {
  const std::uint64_t n = g.adjacency.size();
  if (n == 0) return true;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto ia = static_cast<std::uint32_t>(rng.below(n));
    const auto ib = static_cast<std::uint32_t>(rng.below(n));
    const Matrix& a = g.vertices[ia];
    const Matrix& b = g.vertices[ib];
    const Matrix u = conjugator(a, b);
    const Matrix u_inv = inverse_or_throw(u);
    auto image = [&](std::uint32_t i) { return g.vertices.find(u * g.vertices[i] * u_inv); };
    auto mapped = image(ia);
    if (!mapped || *mapped != ib) return false;
    for (std::size_t k = 0; k < pairs_per_sample; ++k) {
      const auto x = static_cast<std::uint32_t>(rng.below(n));
      const auto y = static_cast<std::uint32_t>(rng.below(n));
      auto fx = image(x);
      auto fy = image(y);
      if (!fx || !fy) return false;
      const bool before = x != y && g.adjacent(x, y);
      const bool after = *fx != *fy && g.adjacent(static_cast<std::uint32_t>(*fx), static_cast<std::uint32_t>(*fy));
      if (before != after) return false;
    }
  }
  return true;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "edge-csv") return ExportFormat::EdgeCsv;
  if (name == "dot") return ExportFormat::Dot;
  fail(ErrorCode::BadInput, "unknown export format: " + std::string(name));
}

std::string export_graph(const GammaGraph& g, ExportFormat format) {
  std::string out;
  if (format == ExportFormat::Dot) out += "graph gamma {\n";
  for (std::uint32_t i = 0; i < g.adjacency.size(); ++i) {
    for (std::uint32_t j : g.adjacency[i]) {
      if (j <= i) continue;
      if (format == ExportFormat::Dot) {
        out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
      } else {
        out += std::to_string(i) + "," + std::to_string(j) + "\n";
      }
    }
  }
  if (format == ExportFormat::Dot) out += "}\n";
  return out;
}

std::vector<std::vector<std::uint32_t>> parse_edge_csv(std::string_view text, std::size_t vertex_count) {
  std::vector<std::vector<std::uint32_t>> adj(vertex_count);
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    auto parse = [&](std::string_view s, std::uint32_t& v) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      return ec == std::errc{} && ptr == s.data() + s.size();
    };
    if (comma == std::string_view::npos || !parse(line.substr(0, comma), i) || !parse(line.substr(comma + 1), j) ||
        i >= vertex_count || j >= vertex_count || i == j) {
      fail(ErrorCode::Parse, "bad edge on line " + std::to_string(line_no));
    }
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

}  // namespace nullcore
