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

// JSON encodings. Field elements travel as codes; matrices as row-major
// code lists; polynomials as ascending coefficient lists.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nullcore/classes.hpp"
#include "nullcore/graph.hpp"
#include "nullcore/matpoly.hpp"

namespace nullcore {

using Json = nlohmann::json;

Json field_to_json(const Field& f);
/// {"p":..,"tower":[...]}. Throws Parse on a malformed object.
FieldPtr field_from_json(const Json& j);

Json upoly_to_json(const UPoly& f);
/// Throws Parse on shape errors, SpecMismatch on codes outside the field.
UPoly upoly_from_json(const Json& j, const FieldPtr& field);

Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j, const FieldPtr& field, std::size_t n = 3);

Json matpoly_to_json(const MatPoly& f);
Json core_report_to_json(const CoreReport& r);
Json class_to_json(const ClassInventory& cls);
Json count_report_to_json(const CountReport& r);
Json graph_summary_to_json(const GraphSummary& s);

/// {"q":2, "m":[1,1,0,1], "set":[[9 codes], ...]}; "m" is optional.
struct SetFile {
  std::uint32_t q;
  FieldPtr field;
  std::optional<UPoly> m;
  std::vector<Matrix> set;
};

/// Throws Parse for malformed JSON or shapes, SpecMismatch for codes
/// outside F_q, BadInput for an empty set.
SetFile parse_set_file(std::string_view text);

}  // namespace nullcore
