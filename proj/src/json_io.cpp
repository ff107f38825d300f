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

#include "nullcore/json_io.hpp"

#include <string>

#include "nullcore/error.hpp"

namespace nullcore {

namespace {

std::vector<Code> code_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " must be an array of codes");
  std::vector<Code> out;
  out.reserve(j.size());
  for (const Json& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
      fail(ErrorCode::Parse, std::string(what) + " must hold nonnegative integers");
    const auto v = x.get<std::uint64_t>();
    if (v > UINT32_MAX) fail(ErrorCode::SpecMismatch, std::string(what) + ": code out of range");
    out.push_back(static_cast<Code>(v));
  }
  return out;
}

void check_codes(const std::vector<Code>& codes, const Field& f, const char* what) {
  for (Code c : codes)
    if (!f.contains(c)) fail(ErrorCode::SpecMismatch, std::string(what) + ": code " + std::to_string(c) + " is not in F_" + std::to_string(f.cardinality()));
}

}  // namespace

Json field_to_json(const Field& f) {
  Json tower = Json::array();
  for (const auto& m : f.tower()) tower.push_back(m);
  return Json{{"p", f.characteristic()}, {"tower", tower}};
}

FieldPtr field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j["p"].is_number_unsigned())
    fail(ErrorCode::Parse, "field needs an unsigned \"p\"");
  std::vector<std::vector<Code>> tower;
  if (j.contains("tower")) {
    if (!j["tower"].is_array()) fail(ErrorCode::Parse, "\"tower\" must be an array");
    for (const Json& m : j["tower"]) tower.push_back(code_list(m, "tower modulus"));
  }
  return Field::from_tower(j["p"].get<std::uint32_t>(), tower);
}

Json upoly_to_json(const UPoly& f) { return Json(f.coefficients()); }

UPoly upoly_from_json(const Json& j, const FieldPtr& field) {
  std::vector<Code> codes = code_list(j, "polynomial");
  check_codes(codes, *field, "polynomial");
  return UPoly(field, std::move(codes));
}

Json matrix_to_json(const Matrix& a) { return Json(a.entries()); }

Matrix matrix_from_json(const Json& j, const FieldPtr& field, std::size_t n) {
  std::vector<Code> codes = code_list(j, "matrix");
  if (codes.size() != n * n)
    fail(ErrorCode::Parse, "matrix needs " + std::to_string(n * n) + " codes, got " + std::to_string(codes.size()));
  check_codes(codes, *field, "matrix");
  return Matrix(field, n, n, std::move(codes));
}

Json matpoly_to_json(const MatPoly& f) {
  Json out = Json::array();
  for (const Matrix& c : f.coefficients()) out.push_back(matrix_to_json(c));
  return out;
}

Json core_report_to_json(const CoreReport& r) {
  Json witness;
  if (r.core()) {
    if (!r.invertible_tuple.empty()) {
      Json tuple = Json::array();
      for (const Matrix& a : r.invertible_tuple) tuple.push_back(matrix_to_json(a));
      witness = {{"kind", "invertible-tuple"}, {"tuple", tuple}, {"pivot_columns", r.pivot_columns}};
    } else {
      witness = {{"kind", "pivot-columns"}, {"pivot_columns", r.pivot_columns}};
    }
  } else if (r.null_polynomial) {
    witness = {{"kind", "null-polynomial"}, {"coefficients", matpoly_to_json(*r.null_polynomial)}};
  }
  return Json{{"phi", upoly_to_json(r.decision.phi)},
              {"degree", r.decision.degree},
              {"n", r.decision.n},
              {"rank", r.decision.rank},
              {"full_rank", r.decision.n * r.decision.degree},
              {"verdict", r.core() ? "core" : "non-core"},
              {"set_size", r.set_size},
              {"digest", r.digest},
              {"witness", witness}};
}

Json class_to_json(const ClassInventory& cls) {
  Json members = Json::array();
  for (const Matrix& a : cls.members()) members.push_back(matrix_to_json(a));
  return members;
}

Json count_report_to_json(const CountReport& r) {
  Json counts = Json::array();
  for (const CountCheck& c : r.counts)
    counts.push_back({{"name", c.name}, {"enumerated", c.enumerated}, {"formula", c.formula}, {"match", c.match}});
  Json structure = Json::array();
  for (const auto& [name, ok] : r.structure) structure.push_back({{"name", name}, {"holds", ok}});
  return Json{{"counts", counts}, {"structure", structure}, {"all_match", r.all_match()}};
}

Json graph_summary_to_json(const GraphSummary& s) {
  Json hist = Json::object();
  for (const auto& [deg, count] : s.degree_histogram) hist[std::to_string(deg)] = count;
  return Json{{"vertices", s.vertex_count},
              {"edges", s.edge_count},
              {"regular_degree", s.regular_degree ? Json(*s.regular_degree) : Json(nullptr)},
              {"degree_histogram", hist},
              {"component_sizes", s.component_sizes},
              {"clique", s.clique},
              {"clique_size", s.clique.size()},
              {"clique_adjacent", s.clique_adjacent},
              {"clique_within_bound", s.clique_within_bound},
              {"complement_independent", s.complement_independent},
              {"complement_degree", s.complement_degree ? Json(*s.complement_degree) : Json(nullptr)},
              {"complement_degree_closed_form", s.complement_degree_closed_form}};
}

SetFile parse_set_file(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::Parse, "set file is not valid JSON");
  if (!j.is_object()) fail(ErrorCode::Parse, "set file must be a JSON object");
  if (!j.contains("q") || !j["q"].is_number_unsigned()) fail(ErrorCode::Parse, "set file needs an unsigned \"q\"");
  if (!j.contains("set") || !j["set"].is_array()) fail(ErrorCode::Parse, "set file needs a \"set\" array");
  SetFile out;
  out.q = j["q"].get<std::uint32_t>();
  try {
    out.field = Field::of_order(out.q);
  } catch (const Error& e) {
    fail(ErrorCode::SpecMismatch, e.what());
  }
  if (j.contains("m")) out.m = upoly_from_json(j["m"], out.field);
  for (const Json& row : j["set"]) out.set.push_back(matrix_from_json(row, out.field));
  require(!out.set.empty(), ErrorCode::BadInput, "set is empty");
  return out;
}

}  // namespace nullcore
