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

// Verification campaigns over one class C(m). Every campaign returns a JSON
// report of named claims; a report never contains timings unless asked, so
// equal configs give byte-identical reports.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nullcore/json_io.hpp"
#include "nullcore/rng.hpp"

namespace nullcore {

enum class Mode { Exhaustive, Randomized };
Mode parse_mode(std::string_view name);
const char* to_string(Mode m) noexcept;

inline constexpr double kDefaultBudget = 5e7;

struct CampaignConfig {
  std::uint32_t q = 2;
  std::optional<std::vector<Code>> m;  // default: least irreducible cubic
  std::string campaign = "all";
  Mode mode = Mode::Exhaustive;
  std::uint64_t samples = 1000;
  std::optional<std::uint64_t> seed;
  double budget = kDefaultBudget;
  std::vector<std::size_t> sizes;  // sample-subsets only
  bool timings = false;
};

/// Reads budget, seed and friends from a JSON object; absent keys keep
/// their defaults. Throws Parse or BadInput.
CampaignConfig config_from_json(const Json& j);
Json config_to_json(const CampaignConfig& c);

/// The field, the cubic and its class, built once per process.
struct Setting {
  FieldPtr field;
  UPoly m;
  ClassInventory cls;
  Matrix base;  // companion(m)
};
/// Throws BadInput when m is not an irreducible monic cubic over F_q.
Setting make_setting(std::uint32_t q, const std::optional<std::vector<Code>>& m);

const std::vector<std::string>& campaign_names();  // without "all"

/// Work estimate of an exhaustive run, in elementary matrix operations.
double exhaustive_cost(const std::string& campaign, std::uint64_t q);

/// One JSON object per classified triple.
using RecordSink = std::function<void(const Json&)>;

/// Runs the configured campaign ("all" runs every one in order). Throws
/// BudgetExceeded before any work when an exhaustive run is over budget,
/// BadInput for an unknown campaign or a randomized run without seed.
Json run_verify(const Setting& s, const CampaignConfig& c, const RecordSink& records = {});

/// Core fractions per subset size. Exhaustive enumerates every subset of
/// each size; randomized draws `samples` subsets per size.
Json run_sample_subsets(const Setting& s, const CampaignConfig& c);

/// Uniform k-subset of {0..n-1}, sorted.
std::vector<std::uint32_t> sample_indices(std::uint32_t n, std::uint32_t k, Rng& rng);

bool report_passed(const Json& report);

}  // namespace nullcore
