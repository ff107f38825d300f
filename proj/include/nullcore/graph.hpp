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

// The graph on C(m) joining A and B when B - A is invertible.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nullcore/classes.hpp"

namespace nullcore {

struct GammaGraph {
  ClassInventory vertices;  // vertex i is vertices[i]
  std::vector<std::vector<std::uint32_t>> adjacency;  // sorted
  std::uint64_t edge_count = 0;

  bool adjacent(std::uint32_t i, std::uint32_t j) const;
};

/// Throws SizeGuard when q exceeds max_q.
GammaGraph build_gamma(const ClassInventory& cls, std::uint32_t max_q = 5);
GammaGraph build_gamma(const UPoly& m, std::uint32_t max_q = 5);

struct GraphSummary {
  std::size_t vertex_count;
  std::uint64_t edge_count;
  std::optional<std::size_t> regular_degree;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::vector<std::size_t> component_sizes;  // descending
  std::vector<std::uint32_t> clique;          // S_base as vertex indices
  bool clique_adjacent;                       // pairwise adjacent
  bool clique_within_bound;                   // size <= q^3 - 1
  bool complement_independent;                // independent in the complement
  std::optional<std::size_t> complement_degree;  // |V| - 1 - degree
  std::uint64_t complement_degree_closed_form;
};

/// Throws BadInput if base is not a vertex.
GraphSummary summarize(const GammaGraph& g, const Matrix& base);

/// Component sizes, descending.
std::vector<std::size_t> component_sizes(const GammaGraph& g);

/// U with U A U^-1 = B, from the cyclic bases (e1, e1 A, e1 A^2) and
/// (e1, e1 B, e1 B^2). A and B must share an irreducible characteristic
/// polynomial.
Matrix conjugator(const Matrix& a, const Matrix& b);

/// For each sampled vertex pair (A, B), checks that X -> U X U^-1 maps A to
/// B, stays inside the vertex set, and preserves adjacency on sampled pairs.
bool vertex_transitivity_probe(const GammaGraph& g, std::size_t samples, std::uint64_t seed,
                               std::size_t pairs_per_sample = 32);

enum class ExportFormat { EdgeCsv, Dot };
/// "edge-csv" or "dot"; BadInput otherwise.
ExportFormat parse_export_format(std::string_view name);

/// Edges i < j in ascending order, one per line ("i,j" or "  i -- j;").
std::string export_graph(const GammaGraph& g, ExportFormat format);
/// Parses an edge-csv export into sorted adjacency lists. Throws Parse.
std::vector<std::vector<std::uint32_t>> parse_edge_csv(std::string_view text, std::size_t vertex_count);

}  // namespace nullcore
