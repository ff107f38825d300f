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

#include "nullcore/campaign.hpp"
#include "nullcore/error.hpp"
#include "nullcore/version.hpp"
#include "test_util.hpp"

using namespace nullcore;
using testutil::c2;
using testutil::f2;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadInput;
}

const Json* find_claim(const Json& report, const std::string& name) {
  for (const Json& c : report["campaigns"])
    for (const Json& cl : c["claims"])
      if (cl["name"] == name) return &cl;
  return nullptr;
}

}  // namespace

TEST_CASE("field and polynomial encodings") {
  CHECK(field_to_json(*f2()).dump() == R"({"p":2,"tower":[]})");
  const FieldPtr f9 = Field::of_order(9);
  const Json j = field_to_json(*f9);
  CHECK(j.dump() == R"({"p":3,"tower":[[1,0,1]]})");
  CHECK(field_from_json(j)->same_as(*f9));
  CHECK(code_of([] { (void)field_from_json(Json::parse(R"({"tower":[]})")); }) == ErrorCode::Parse);

  CHECK(upoly_to_json(testutil::m2()).dump() == "[1,1,0,1]");
  CHECK(upoly_from_json(Json::parse("[1,1,0,1]"), f2()) == testutil::m2());
  CHECK(code_of([] { (void)upoly_from_json(Json::parse("[1,2]"), f2()); }) == ErrorCode::SpecMismatch);
  CHECK(code_of([] { (void)upoly_from_json(Json::parse(R"("x")"), f2()); }) == ErrorCode::Parse);
}

TEST_CASE("matrix encoding") {
  CHECK(matrix_to_json(c2()).dump() == "[0,0,1,1,0,1,0,1,0]");
  CHECK(matrix_from_json(Json::parse("[0,0,1,1,0,1,0,1,0]"), f2()) == c2());
  CHECK(code_of([] { (void)matrix_from_json(Json::parse("[0,0,1]"), f2()); }) == ErrorCode::Parse);
  CHECK(code_of([] { (void)matrix_from_json(Json::parse("[0,0,1,1,0,1,0,1,-1]"), f2()); }) == ErrorCode::Parse);
  CHECK(code_of([] { (void)matrix_from_json(Json::parse("[0,0,1,1,0,1,0,1,5]"), f2()); }) == ErrorCode::SpecMismatch);
}

TEST_CASE("set files") {
  const SetFile s = parse_set_file(R"({"q":2,"m":[1,1,0,1],"set":[[0,0,1,1,0,1,0,1,0]]})");
  CHECK(s.q == 2);
  REQUIRE(s.m.has_value());
  CHECK(*s.m == testutil::m2());
  REQUIRE(s.set.size() == 1);
  CHECK(s.set[0] == c2());
  CHECK_FALSE(parse_set_file(R"({"q":3,"set":[[0,0,0,0,0,0,0,0,2]]})").m.has_value());
  CHECK(code_of([] { (void)parse_set_file("{"); }) == ErrorCode::Parse);
  CHECK(code_of([] { (void)parse_set_file("[]"); }) == ErrorCode::Parse);
  CHECK(code_of([] { (void)parse_set_file(R"({"set":[]})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { (void)parse_set_file(R"({"q":2,"set":[]})"); }) == ErrorCode::BadInput);
  CHECK(code_of([] { (void)parse_set_file(R"({"q":6,"set":[]})"); }) == ErrorCode::SpecMismatch);
}

TEST_CASE("core report encoding") {
  const Matrix c = c2();
  const std::vector<Matrix> triple{c, c * c, c * c + c};
  const Json core = core_report_to_json(is_core(triple));
  CHECK(core["verdict"] == "core");
  CHECK(core["rank"] == 9);
  CHECK(core["phi"].dump() == "[1,1,0,1]");
  CHECK(core["witness"]["kind"] == "invertible-tuple");
  CHECK(core["witness"]["tuple"].size() == 3);

  const ClassInventory cls = enumerate_class(testutil::m2());
  const Json non = core_report_to_json(is_core(e_set(cls, c, Matrix::unit_vector(f2(), 3, 0))));
  CHECK(non["verdict"] == "non-core");
  CHECK(non["witness"]["kind"] == "null-polynomial");
  CHECK(non["rank"].get<int>() < 9);
}

TEST_CASE("summaries and counts encode") {
  const Json counts = count_report_to_json(verify_counts(enumerate_class(testutil::m2())));
  CHECK(counts["all_match"] == true);
  CHECK(counts["counts"].size() == 6);
  const Json g = graph_summary_to_json(summarize(build_gamma(testutil::m2()), c2()));
  CHECK(g["regular_degree"] == 2);
  CHECK(g["degree_histogram"].dump() == R"({"2":24})");
  CHECK(class_to_json(enumerate_class(testutil::m2())).size() == 24);
}

TEST_CASE("subset sampling") {
  Rng rng(3);
  std::vector<std::size_t> hits(10);
  for (int i = 0; i < 2000; ++i) {
    const auto s = sample_indices(10, 4, rng);
    REQUIRE(s.size() == 4);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    for (auto x : s) {
      REQUIRE(x < 10);
      ++hits[x];
    }
  }
  // each index appears in 2/5 of the draws
  for (std::size_t h : hits) CHECK(h > 700);
  for (std::size_t h : hits) CHECK(h < 900);
  CHECK(sample_indices(5, 5, rng) == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
  CHECK(sample_indices(5, 0, rng).empty());
  CHECK_THROWS_AS(sample_indices(3, 4, rng), Error);
  Rng a(9), b(9);
  CHECK(sample_indices(432, 19, a) == sample_indices(432, 19, b));
}

TEST_CASE("budget estimates") {
  for (const std::string& name : campaign_names()) CHECK(exhaustive_cost(name, 2) < kDefaultBudget);
  CHECK(exhaustive_cost("triples", 3) > kDefaultBudget);
  CHECK(exhaustive_cost("triples", 5) > kDefaultBudget);
  CHECK(exhaustive_cost("main-theorem", 3) > kDefaultBudget);
  CHECK(exhaustive_cost("counts", 3) < kDefaultBudget);
  CHECK(exhaustive_cost("graph", 3) < kDefaultBudget);
  CHECK_THROWS_AS(exhaustive_cost("nope", 2), Error);
}

TEST_CASE("config parsing") {
  const CampaignConfig c = config_from_json(Json::parse(
      R"({"campaign":"triples","mode":"randomized","samples":5,"seed":7,"budget":100,"sizes":[3,4]})"));
  CHECK(c.campaign == "triples");
  CHECK(c.mode == Mode::Randomized);
  CHECK(c.samples == 5);
  CHECK(c.seed == std::optional<std::uint64_t>(7));
  CHECK(c.budget == 100);
  CHECK(c.sizes == std::vector<std::size_t>{3, 4});
  CHECK(code_of([] { (void)config_from_json(Json::parse(R"({"mode":"fast"})")); }) == ErrorCode::BadInput);
  CHECK(code_of([] { (void)config_from_json(Json::parse(R"({"samples":"x"})")); }) == ErrorCode::Parse);
  CHECK(code_of([] { (void)config_from_json(Json::parse(R"({"budget":0})")); }) == ErrorCode::BadInput);
}

TEST_CASE("settings") {
  const Setting s = make_setting(2, std::nullopt);
  CHECK(s.m == testutil::m2());
  CHECK(s.cls.size() == 24);
  CHECK(s.base == c2());
  CHECK(make_setting(2, std::vector<Code>{1, 0, 1, 1}).cls.size() == 24);
  CHECK(code_of([] { (void)make_setting(6, std::nullopt); }) == ErrorCode::BadInput);
  CHECK(code_of([] { (void)make_setting(2, std::vector<Code>{1, 1, 1, 1}); }) == ErrorCode::BadInput);
  CHECK(code_of([] { (void)make_setting(2, std::vector<Code>{1, 2, 0, 1}); }) == ErrorCode::BadInput);
}

TEST_CASE("verify guards") {
  const Setting s2 = make_setting(2, std::nullopt);
  CampaignConfig c;
  c.campaign = "nope";
  CHECK(code_of([&] { (void)run_verify(s2, c); }) == ErrorCode::BadInput);
  c.campaign = "triples";
  c.mode = Mode::Randomized;
  CHECK(code_of([&] { (void)run_verify(s2, c); }) == ErrorCode::BadInput);
  c.mode = Mode::Exhaustive;
  c.budget = 1000;
  CHECK(code_of([&] { (void)run_verify(s2, c); }) == ErrorCode::BudgetExceeded);
  const Setting s3 = make_setting(3, std::nullopt);
  c.budget = kDefaultBudget;
  CHECK(code_of([&] { (void)run_verify(s3, c); }) == ErrorCode::BudgetExceeded);
  c.campaign = "all";
  CHECK(code_of([&] { (void)run_verify(s3, c); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("reports are deterministic and carry their provenance") {
  const Setting s = make_setting(3, std::nullopt);
  CampaignConfig c;
  c.campaign = "triples";
  c.mode = Mode::Randomized;
  c.samples = 300;
  c.seed = 11;
  std::size_t records = 0;
  const Json a = run_verify(s, c, [&](const Json& r) {
    ++records;
    CHECK(r.contains("case"));
    CHECK(r["predicted"] == r["direct"]);
  });
  const Json b = run_verify(s, c);
  CHECK(a.dump() == b.dump());
  CHECK(records == 300);
  CHECK(report_passed(a));
  CHECK(a["version"] == kVersion);
  CHECK(a["field"]["p"] == 3);
  CHECK(a["m"] == upoly_to_json(s.m));
  CHECK(a["config"]["seed"] == 11);
  CHECK_FALSE(a["campaigns"][0].contains("seconds"));
  c.seed = 12;
  CHECK(run_verify(s, c).dump() != a.dump());
  c.timings = true;
  CHECK(run_verify(s, c)["campaigns"][0].contains("seconds"));
}

TEST_CASE("every campaign passes at q = 2") {
  const Setting s = make_setting(2, std::nullopt);
  CampaignConfig c;
  const Json r = run_verify(s, c);
  CHECK(report_passed(r));
  CHECK(r["campaigns"].size() == campaign_names().size());
  const Json* t = find_claim(r, "threshold-subsets-core");
  REQUIRE(t);
  CHECK((*t)["detail"]["checked"] == 42504 + 134596);
  const Json* u = find_claim(r, "u-a-equals-u-b");
  REQUIRE(u);
  CHECK((*u)["detail"]["checked"] == 6);
}

TEST_CASE("subset fractions at q = 2") {
  const Setting s = make_setting(2, std::nullopt);
  CampaignConfig c;
  c.sizes = {1, 2, 3, 4, 5};
  const Json r = run_sample_subsets(s, c);
  CHECK(report_passed(r));
  CHECK(r["threshold"] == 5);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected{
      {24, 0}, {276, 0}, {2024, 1856}, {10626, 10584}, {42504, 42504}};
  REQUIRE(r["sizes"].size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(r["sizes"][i]["subsets"] == expected[i].first);
    CHECK(r["sizes"][i]["core"] == expected[i].second);
  }
  c.sizes = {25};
  CHECK(code_of([&] { (void)run_sample_subsets(s, c); }) == ErrorCode::BadInput);
}

TEST_CASE("randomized subsets at q = 3") {
  const Setting s = make_setting(3, std::nullopt);
  CampaignConfig c;
  c.mode = Mode::Randomized;
  c.seed = 5;
  c.samples = 200;
  c.sizes = {2, 18, 19};
  const Json r = run_sample_subsets(s, c);
  CHECK(report_passed(r));
  CHECK(r["sizes"][1]["expectation"] == "observed");
  CHECK(r["sizes"][2]["core"] == 200);
  c.mode = Mode::Exhaustive;
  CHECK(code_of([&] { (void)run_sample_subsets(s, c); }) == ErrorCode::BudgetExceeded);
}
