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

#include "nullcore/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "nullcore/error.hpp"
#include "nullcore/rng.hpp"
#include "nullcore/vandermonde.hpp"
#include "nullcore/version.hpp"

namespace nullcore {

Mode parse_mode(std::string_view name) {
  if (name == "exhaustive") return Mode::Exhaustive;
  if (name == "randomized") return Mode::Randomized;
  fail(ErrorCode::BadInput, "mode must be exhaustive or randomized, got " + std::string(name));
}

const char* to_string(Mode m) noexcept { return m == Mode::Exhaustive ? "exhaustive" : "randomized"; }

CampaignConfig config_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::Parse, "config must be a JSON object");
  CampaignConfig c;
  try {
    if (j.contains("q")) c.q = j["q"].get<std::uint32_t>();
    if (j.contains("m") && !j["m"].is_null()) c.m = j["m"].get<std::vector<Code>>();
    if (j.contains("campaign")) c.campaign = j["campaign"].get<std::string>();
    if (j.contains("mode")) c.mode = parse_mode(j["mode"].get<std::string>());
    if (j.contains("samples")) c.samples = j["samples"].get<std::uint64_t>();
    if (j.contains("seed") && !j["seed"].is_null()) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("budget")) c.budget = j["budget"].get<double>();
    if (j.contains("sizes")) c.sizes = j["sizes"].get<std::vector<std::size_t>>();
    if (j.contains("timings")) c.timings = j["timings"].get<bool>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::Parse, std::string("bad config: ") + e.what());
  }
  require(c.budget > 0, ErrorCode::BadInput, "budget must be positive");
  return c;
}

Json config_to_json(const CampaignConfig& c) {
  Json j{{"q", c.q},
         {"campaign", c.campaign},
         {"mode", to_string(c.mode)},
         {"samples", c.samples},
         {"seed", c.seed ? Json(*c.seed) : Json(nullptr)},
         {"budget", c.budget}};
  if (c.m) j["m"] = *c.m;
  if (!c.sizes.empty()) j["sizes"] = c.sizes;
  return j;
}

Setting make_setting(std::uint32_t q, const std::optional<std::vector<Code>>& m) {
  FieldPtr field;
  try {
    field = Field::of_order(q);
  } catch (const Error& e) {
    fail(ErrorCode::BadInput, e.what());
  }
  UPoly poly = m ? UPoly(field, *m) : irreducible_cubics(field).front();
  if (m) {
    for (Code c : *m) require(field->contains(c), ErrorCode::BadInput, "m has a code outside F_q");
  }
  require(poly.degree() == 3 && poly.is_monic() && is_irreducible(poly), ErrorCode::BadInput,
          "m must be a monic irreducible cubic");
  ClassInventory cls = enumerate_class(poly);
  Matrix base = companion(poly);
  return Setting{field, poly, std::move(cls), std::move(base)};
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"counts", "triples", "idp", "graph", "main-theorem", "ua-lemma"};
  return names;
}

namespace {

double class_size(double q) { return (q * q * q - q) * (q * q * q - q * q); }

double binom(double n, double k) {
  if (k < 0 || k > n) return 0;
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

std::uint64_t threshold(std::uint64_t q) { return q * q * q - q * q + 1; }

// Visits every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(std::uint32_t n, std::uint32_t k, F&& visit) {
  if (k > n) return;
  std::vector<std::uint32_t> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n - k + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Matrix> pick(const std::vector<Matrix>& from, const std::vector<std::uint32_t>& idx) {
  std::vector<Matrix> out;
  out.reserve(idx.size());
  for (std::uint32_t i : idx) out.push_back(from[i]);
  return out;
}

Json claim(const std::string& name, bool pass, Json detail = Json::object()) {
  return Json{{"name", name}, {"pass", pass}, {"detail", std::move(detail)}};
}

struct Ctx {
  const Setting& s;
  const CampaignConfig& c;
  const RecordSink& records;
  std::uint64_t q;
  std::uint64_t seed;
};

Matrix random_base_matrix(const FieldPtr& f, Rng& rng) {
  Matrix out(f, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = static_cast<Code>(rng.below(f->cardinality()));
  return out;
}

std::vector<Matrix> first_row_family(const Setting& s) {
  return e_set(s.cls, s.base, Matrix::unit_vector(s.field, 3, 0));
}

Json counts_campaign(const Ctx& x) {
  const CountReport r = verify_counts(x.s.cls, x.s.base);
  Json claims = Json::array();
  for (const CountCheck& c : r.counts)
    claims.push_back(claim(c.name, c.match, {{"enumerated", c.enumerated}, {"formula", c.formula}}));
  for (const auto& [name, ok] : r.structure) claims.push_back(claim(name, ok));
  return claims;
}

Json triples_campaign(const Ctx& x) {
  const auto& cls = x.s.cls;
  const std::uint32_t n = static_cast<std::uint32_t>(cls.size());
  Rng rng(x.seed);
  Json claims = Json::array();

  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> by_case;  // total, invertible
  std::uint64_t checked = 0, disagreements = 0, mixed_singular = 0;
  auto one = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    const std::vector<Matrix> t{cls[i], cls[j], cls[k]};
    const bool direct = rank(stacked_vandermonde(t, 3)) == 9;
    Json rec{{"triple", {i, j, k}}, {"direct", direct}};
    ++checked;
    try {
      const TripleClassification tc = classify_triple(cls[i], cls[j], cls[k]);
      auto& slot = by_case[to_string(tc.tag)];
      ++slot.first;
      slot.second += tc.v_invertible;
      if (tc.tag == TripleCase::Mixed && !tc.v_invertible) ++mixed_singular;
      if (tc.v_invertible != direct) ++disagreements;
      rec["case"] = to_string(tc.tag);
      rec["predicted"] = tc.v_invertible;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::VerificationFailed) throw;
      ++disagreements;
      rec["error"] = e.what();
    }
    if (x.records) x.records(rec);
  };
  if (x.c.mode == Mode::Exhaustive) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t k = 0; k < n; ++k)
          if (i != j && j != k && i != k) one(i, j, k);
  } else {
    for (std::uint64_t done = 0; done < x.c.samples;) {
      const auto i = static_cast<std::uint32_t>(rng.below(n));
      const auto j = static_cast<std::uint32_t>(rng.below(n));
      const auto k = static_cast<std::uint32_t>(rng.below(n));
      if (i == j || j == k || i == k) continue;
      one(i, j, k);
      ++done;
    }
  }
  Json cases = Json::object();
  for (const auto& [name, v] : by_case) cases[name] = {{"total", v.first}, {"invertible", v.second}};
  claims.push_back(claim("triple-criterion-agrees", disagreements == 0,
                         {{"checked", checked}, {"disagreements", disagreements}, {"cases", cases}}));
  claims.push_back(claim("mixed-case-invertible", mixed_singular == 0, {{"mixed_singular", mixed_singular}}));

  // singular differences: one lambda decides all
  std::uint64_t pairs = 0, violations = 0;
  auto pair_check = [&](std::uint32_t i, std::uint32_t j) {
    ++pairs;
    violations += !inv_diff_equivalence(cls[i], cls[j]);
  };
  if (x.c.mode == Mode::Exhaustive) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (i != j) pair_check(i, j);
  } else {
    for (std::uint64_t done = 0; done < x.c.samples;) {
      const auto i = static_cast<std::uint32_t>(rng.below(n));
      const auto j = static_cast<std::uint32_t>(rng.below(n));
      if (i == j) continue;
      pair_check(i, j);
      ++done;
    }
  }
  claims.push_back(claim("inv-diff-equivalence", violations == 0, {{"pairs", pairs}, {"violations", violations}}));

  // nullspace structure of singular pairs at the base point
  std::uint64_t singular = 0;
  bool structure_ok = true;
  std::string structure_error;
  try {
    for (std::uint32_t j = 0; j < n; ++j)
      if (cls[j] != x.s.base) singular += pair_analysis(x.s.base, cls[j]).singular;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::VerificationFailed) throw;
    structure_ok = false;
    structure_error = e.what();
  }
  Json sp{{"singular_pairs", singular}, {"expected", n - 1 - closed_forms(x.q).d}};
  if (!structure_ok) sp["error"] = structure_error;
  claims.push_back(claim("singular-pair-structure", structure_ok && singular == n - 1 - closed_forms(x.q).d, sp));

  // a1(B-A) + a2(A+a)(B-A) - a2(B^2-A^2) + a3(A+a)(B^2-A^2) is invertible or zero
  std::uint64_t combos = 0;
  bool mixed_ok = true;
  const FieldPtr& f = x.s.field;
  auto mixed_check = [&](const Matrix& b, Code a1, Code a2, Code a3) {
    ++combos;
    try {
      (void)mixed_M(x.s.base, b, FieldElem(f, a1), FieldElem(f, a2), FieldElem(f, a3));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::VerificationFailed) throw;
      mixed_ok = false;
    }
  };
  const DerivedSets sets = derived_sets(cls, x.s.base);
  if (x.c.mode == Mode::Exhaustive) {
    for (const Matrix& b : sets.d)
      for (Code a1 = 0; a1 < x.q; ++a1)
        for (Code a2 = 0; a2 < x.q; ++a2)
          for (Code a3 = 0; a3 < x.q; ++a3) mixed_check(b, a1, a2, a3);
  } else {
    for (std::uint64_t done = 0; done < x.c.samples; ++done) {
      const Matrix& b = sets.d[rng.below(sets.d.size())];
      mixed_check(b, static_cast<Code>(rng.below(x.q)), static_cast<Code>(rng.below(x.q)),
                  static_cast<Code>(rng.below(x.q)));
    }
  }
  claims.push_back(claim("mixed-combination-dichotomy", mixed_ok, {{"checked", combos}}));
  return claims;
}

Json idp_campaign(const Ctx& x) {
  Json claims = Json::array();
  const DerivedSets sets = derived_sets(x.s.cls, x.s.base);
  const ClosedForms cf = closed_forms(x.q);
  claims.push_back(claim("s-a-idp", idp_check(sets.s) && sets.s.size() == cf.s,
                         {{"size", sets.s.size()}, {"formula", cf.s}}));

  bool q_ok = true;
  for (const Matrix& b : sets.d) q_ok = q_ok && std::binary_search(sets.s.begin(), sets.s.end(), q_of(x.s.base, b));
  claims.push_back(claim("q-of-lands-in-s-a", q_ok, {{"checked", sets.d.size()}}));

  const ExtensionContext ctx = extension_context(x.s.m);
  Rng rng(x.seed);

  std::uint64_t xe_checked = 0, xe_fail = 0, bridge_fail = 0;
  auto per_matrix = [&](const Matrix& u) {
    ++xe_checked;
    xe_fail += !xentries_check(u, ctx);
    if (det(u) != 0) bridge_fail += !commutator_bridge(u, x.s.base);
  };
  if (x.c.mode == Mode::Exhaustive) {
    std::uint64_t total = 1;
    for (int i = 0; i < 9; ++i) total *= x.q;
    for (std::uint64_t code = 0; code < total; ++code) per_matrix(unpack_key(x.s.field, 3, code));
  } else {
    for (std::uint64_t i = 0; i < x.c.samples; ++i) per_matrix(random_base_matrix(x.s.field, rng));
  }
  claims.push_back(claim("conjugated-entry-pattern", xe_fail == 0, {{"checked", xe_checked}, {"failures", xe_fail}}));
  claims.push_back(claim("commutator-bridge", bridge_fail == 0, {{"failures", bridge_fail}}));

  // one U per member of S_A, then every pair of distinct members
  std::map<Matrix, Matrix> rep;
  std::map<std::string, std::uint64_t> forms;
  bool forms_ok = true;
  const auto& ua = sets.u;
  auto form_of = [&](const Matrix& u) {
    try {
      const CanonicalForm cf_u = canonical_form(u, ctx);
      ++forms[to_string(cf_u.tag)];
      return std::optional<CanonicalForm>(cf_u);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::VerificationFailed) throw;
      forms_ok = false;
      return std::optional<CanonicalForm>();
    }
  };
  if (x.c.mode == Mode::Exhaustive) {
    for (const Matrix& u : ua) (void)form_of(u);
  } else {
    for (std::uint64_t i = 0; i < x.c.samples; ++i) (void)form_of(ua[rng.below(ua.size())]);
  }
  Json fj = Json::object();
  for (const auto& [k, v] : forms) fj[k] = v;
  claims.push_back(claim("canonical-forms", forms_ok, {{"forms", fj}}));

  std::vector<Matrix> lifts;
  auto lift = [&](const Matrix& u) { return ctx.p * u.embedded(ctx.k) * ctx.p_inv; };
  std::uint64_t sd_checked = 0, sd_zero_distinct = 0;
  bool sd_ok = true;
  auto sd_pair = [&](const Matrix& u, const Matrix& v) {
    ++sd_checked;
    try {
      const FieldElem d = sdiff_det(lift(u), lift(v), ctx);
      const Matrix bu = commutator(u, x.s.base);
      const Matrix bv = commutator(v, x.s.base);
      const bool same = bu * x.s.base * inverse_or_throw(bu) == bv * x.s.base * inverse_or_throw(bv);
      if (!same && d.is_zero()) ++sd_zero_distinct;
      if (same && !d.is_zero()) sd_ok = false;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::VerificationFailed) throw;
      sd_ok = false;
    }
  };
  if (x.c.mode == Mode::Exhaustive) {
    for (const Matrix& u : ua) {
      const Matrix b = commutator(u, x.s.base);
      rep.emplace(b * x.s.base * inverse_or_throw(b), u);
    }
    for (const auto& [qa, ua_] : rep)
      for (const auto& [qb, ub] : rep) sd_pair(ua_, ub);
  } else {
    for (std::uint64_t i = 0; i < x.c.samples; ++i) sd_pair(ua[rng.below(ua.size())], ua[rng.below(ua.size())]);
  }
  claims.push_back(claim("difference-determinant-closed-form", sd_ok && sd_zero_distinct == 0,
                         {{"checked", sd_checked}, {"zero_for_distinct", sd_zero_distinct}}));

  std::uint64_t dc_checked = std::min<std::uint64_t>(x.c.samples, 500), dc_fail = 0;
  for (std::uint64_t i = 0; i < dc_checked; ++i) {
    Matrix xm(ctx.k, 3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t col = 0; col < 3; ++col) xm(r, col) = static_cast<Code>(rng.below(ctx.k->cardinality()));
    dc_fail += !diagcomm_identity(xm, ctx.d);
  }
  claims.push_back(claim("diagonal-commutator-determinant", dc_fail == 0, {{"checked", dc_checked}}));
  return claims;
}

Json graph_campaign(const Ctx& x) {
  Json claims = Json::array();
  const GammaGraph g = build_gamma(x.s.cls);
  const GraphSummary s = summarize(g, x.s.base);
  const ClosedForms cf = closed_forms(x.q);
  claims.push_back(claim("vertex-count", s.vertex_count == cf.class_size, {{"vertices", s.vertex_count}}));
  claims.push_back(claim("regular-degree", s.regular_degree == std::optional<std::size_t>(cf.d),
                         {{"degree", s.regular_degree ? Json(*s.regular_degree) : Json(nullptr)}, {"formula", cf.d}}));
  claims.push_back(claim("s-a-clique", s.clique_adjacent && s.clique.size() == cf.s && s.clique_within_bound,
                         {{"size", s.clique.size()}, {"bound", x.q * x.q * x.q - 1}}));
  claims.push_back(claim("s-a-independent-in-complement", s.complement_independent));
  claims.push_back(claim("complement-degree",
                         s.complement_degree.has_value() && *s.complement_degree == s.vertex_count - 1 - cf.d,
                         {{"degree", s.complement_degree ? Json(*s.complement_degree) : Json(nullptr)},
                          {"closed_form", s.complement_degree_closed_form}}));
  const std::size_t probes = 50;
  claims.push_back(claim("vertex-transitivity-probe", vertex_transitivity_probe(g, probes, x.seed),
                         {{"samples", probes}}));
  const std::string csv = export_graph(g, ExportFormat::EdgeCsv);
  const bool round_trip = parse_edge_csv(csv, g.vertices.size()) == g.adjacency &&
                          export_graph(build_gamma(x.s.cls), ExportFormat::EdgeCsv) == csv;
  claims.push_back(claim("export-round-trip", round_trip, {{"edges", g.edge_count}}));
  Json comp{{"count", s.component_sizes.size()},
            {"largest", s.component_sizes.empty() ? 0 : s.component_sizes.front()}};
  claims.push_back(claim("components", !s.component_sizes.empty(), comp));
  return claims;
}

Json main_theorem_campaign(const Ctx& x) {
  Json claims = Json::array();
  const auto& members = x.s.cls.members();
  const auto n = static_cast<std::uint32_t>(members.size());
  const auto t = static_cast<std::uint32_t>(threshold(x.q));
  Rng rng(x.seed);

  std::uint64_t big = 0, big_core = 0;
  auto count_core = [&](const std::vector<std::uint32_t>& idx, std::uint64_t& total, std::uint64_t& core) {
    ++total;
    core += decide_core(pick(members, idx)).core;
  };
  if (x.c.mode == Mode::Exhaustive) {
    for (std::uint32_t k : {t, t + 1}) for_each_combination(n, k, [&](const auto& idx) { count_core(idx, big, big_core); });
  } else {
    for (std::uint64_t i = 0; i < x.c.samples; ++i) count_core(sample_indices(n, t, rng), big, big_core);
  }
  claims.push_back(claim("threshold-subsets-core", big == big_core,
                         {{"threshold", t}, {"checked", big}, {"core", big_core}}));

  const std::vector<Matrix> fam = first_row_family(x.s);
  const auto fn = static_cast<std::uint32_t>(fam.size());
  std::uint64_t sub = 0, sub_core = 0;
  const bool fam_core = decide_core(fam).core;
  if (fn <= 20 && x.c.mode == Mode::Exhaustive) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << fn); ++mask) {
      std::vector<Matrix> s;
      for (std::uint32_t i = 0; i < fn; ++i)
        if (mask >> i & 1) s.push_back(fam[i]);
      ++sub;
      sub_core += decide_core(s).core;
    }
  } else {
    for (std::uint64_t i = 0; i < x.c.samples; ++i) {
      const auto k = static_cast<std::uint32_t>(1 + rng.below(fn));
      ++sub;
      sub_core += decide_core(pick(fam, sample_indices(fn, k, rng))).core;
    }
  }
  claims.push_back(claim("first-row-family-non-core", !fam_core && sub_core == 0,
                         {{"family_size", fn}, {"subsets_checked", sub}, {"core_subsets", sub_core}}));

  std::uint64_t pairs = 0, pair_core = 0;
  if (x.c.mode == Mode::Exhaustive) {
    for_each_combination(n, 2, [&](const auto& idx) { count_core(idx, pairs, pair_core); });
  } else {
    for (std::uint64_t i = 0; i < x.c.samples; ++i) count_core(sample_indices(n, 2, rng), pairs, pair_core);
  }
  claims.push_back(claim("pairs-non-core", pair_core == 0, {{"checked", pairs}, {"core", pair_core}}));

  // {A} with q^3 - q^2 - q members of D_A
  const DerivedSets sets = derived_sets(x.s.cls, x.s.base);
  const auto dn = static_cast<std::uint32_t>(sets.d.size());
  const auto dk = static_cast<std::uint32_t>(x.q * x.q * x.q - x.q * x.q - x.q);
  std::uint64_t dchecked = 0, dcore = 0;
  auto d_check = [&](const std::vector<std::uint32_t>& idx) {
    std::vector<Matrix> s = pick(sets.d, idx);
    s.push_back(x.s.base);
    ++dchecked;
    dcore += decide_core(s).core;
  };
  if (x.c.mode == Mode::Exhaustive && binom(dn, dk) <= 1e6) {
    for_each_combination(dn, dk, d_check);
  } else {
    const std::uint64_t draws = std::max<std::uint64_t>(1, std::min<std::uint64_t>(x.c.samples, 10000));
    for (std::uint64_t i = 0; i < draws; ++i) d_check(sample_indices(dn, dk, rng));
  }
  claims.push_back(claim("d-a-subsets-core", dchecked == dcore, {{"size", dk + 1}, {"checked", dchecked}}));
  return claims;
}

Json ua_campaign(const Ctx& x) {
  Json claims = Json::array();
  const Matrix& a = x.s.base;
  const Matrix a2 = a * a;
  std::uint64_t checked = 0, equal = 0;
  auto check = [&](Code c0, Code c1, Code c2) {
    const Matrix b = Matrix::scalar(x.s.field, 3, c0) + a.scaled(c1) + a2.scaled(c2);
    if (is_scalar(b)) return false;
    ++checked;
    equal += ua_equals_ub(a, b);
    return true;
  };
  if (x.c.mode == Mode::Exhaustive) {
    for (Code c0 = 0; c0 < x.q; ++c0)
      for (Code c1 = 0; c1 < x.q; ++c1)
        for (Code c2 = 0; c2 < x.q; ++c2) (void)check(c0, c1, c2);
  } else {
    Rng rng(x.seed);
    for (std::uint64_t done = 0; done < x.c.samples;) {
      done += check(static_cast<Code>(rng.below(x.q)), static_cast<Code>(rng.below(x.q)),
                    static_cast<Code>(rng.below(x.q)));
    }
  }
  claims.push_back(claim("u-a-equals-u-b", checked == equal, {{"checked", checked}, {"equal", equal}}));
  return claims;
}

Json run_one(const std::string& name, const Ctx& x) {
  if (name == "counts") return counts_campaign(x);
  if (name == "triples") return triples_campaign(x);
  if (name == "idp") return idp_campaign(x);
  if (name == "graph") return graph_campaign(x);
  if (name == "main-theorem") return main_theorem_campaign(x);
  if (name == "ua-lemma") return ua_campaign(x);
  fail(ErrorCode::BadInput, "unknown campaign " + name);
}

Json report_header(const Setting& s, const CampaignConfig& c) {
  return Json{{"tool", "nullcore"},
              {"version", kVersion},
              {"config", config_to_json(c)},
              {"field", field_to_json(*s.field)},
              {"m", upoly_to_json(s.m)}};
}

void require_seed(const CampaignConfig& c) {
  require(c.mode == Mode::Exhaustive || c.seed.has_value(), ErrorCode::BadInput, "randomized mode needs --seed");
}

}  // namespace

double exhaustive_cost(const std::string& campaign, std::uint64_t q) {
  const double qd = static_cast<double>(q);
  const double c = class_size(qd);
  const double q9 = std::pow(qd, 9);
  if (campaign == "counts") return q9 + c * (qd * qd + qd + 2);
  if (campaign == "triples") return c * c * c + c * c * qd + q9;
  if (campaign == "idp") return 2 * q9;
  if (campaign == "graph") return c * c;
  if (campaign == "main-theorem") {
    const double t = static_cast<double>(threshold(q));
    return binom(c, t) + binom(c, t + 1) + c * c / 2;
  }
  if (campaign == "ua-lemma") return qd * qd * qd * q9;
  fail(ErrorCode::BadInput, "unknown campaign " + campaign);
}

std::vector<std::uint32_t> sample_indices(std::uint32_t n, std::uint32_t k, Rng& rng) {
  require(k <= n, ErrorCode::BadInput, "subset larger than the set");
  // Floyd's algorithm
  std::set<std::uint32_t> chosen;
  for (std::uint32_t j = n - k; j < n; ++j) {
    const auto t = static_cast<std::uint32_t>(rng.below(std::uint64_t{j} + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

Json run_verify(const Setting& s, const CampaignConfig& c, const RecordSink& records) {
  require_seed(c);
  std::vector<std::string> names;
  if (c.campaign == "all") {
    names = campaign_names();
  } else {
    const auto& known = campaign_names();
    require(std::find(known.begin(), known.end(), c.campaign) != known.end(), ErrorCode::BadInput,
            "unknown campaign");
    names = {c.campaign};
  }
  if (c.mode == Mode::Exhaustive) {
    for (const std::string& name : names) {
      const double cost = exhaustive_cost(name, s.field->cardinality());
      if (cost > c.budget) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3g", cost);
        fail(ErrorCode::BudgetExceeded, "exhaustive " + name + " at q=" + std::to_string(s.field->cardinality()) +
                                            " needs about " + buf + " operations, over budget; use --mode randomized");
      }
    }
  }
  const Ctx x{s, c, records, s.field->cardinality(), c.seed.value_or(0)};
  Json report = report_header(s, c);
  Json campaigns = Json::array();
  bool all = true;
  for (const std::string& name : names) {
    const auto start = std::chrono::steady_clock::now();
    Json claims = run_one(name, x);
    bool pass = true;
    for (const Json& cl : claims) pass = pass && cl["pass"].get<bool>();
    Json entry{{"name", name}, {"pass", pass}, {"claims", std::move(claims)}};
    if (c.timings) {
      entry["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    campaigns.push_back(std::move(entry));
    all = all && pass;
  }
  report["campaigns"] = std::move(campaigns);
  report["pass"] = all;
  return report;
}

Json run_sample_subsets(const Setting& s, const CampaignConfig& c) {
  require_seed(c);
  const std::uint64_t q = s.field->cardinality();
  const auto n = static_cast<std::uint32_t>(s.cls.size());
  const auto t = static_cast<std::uint32_t>(threshold(q));
  std::vector<std::size_t> sizes = c.sizes;
  if (sizes.empty()) sizes = {1, 2, 3, t - 1, t};
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (std::size_t k : sizes) require(k >= 1 && k <= n, ErrorCode::BadInput, "subset size out of range");

  if (c.mode == Mode::Exhaustive) {
    double cost = 0;
    for (std::size_t k : sizes) cost += binom(n, static_cast<double>(k));
    if (cost > c.budget) fail(ErrorCode::BudgetExceeded, "exhaustive subset enumeration is over budget; use --mode randomized");
  }

  Rng rng(c.seed.value_or(0));
  Json rows = Json::array();
  bool all = true;
  for (std::size_t k : sizes) {
    std::uint64_t total = 0, core = 0;
    auto visit = [&](const std::vector<std::uint32_t>& idx) {
      ++total;
      core += decide_core(pick(s.cls.members(), idx)).core;
    };
    if (c.mode == Mode::Exhaustive) {
      for_each_combination(n, static_cast<std::uint32_t>(k), visit);
    } else {
      for (std::uint64_t i = 0; i < c.samples; ++i) visit(sample_indices(n, static_cast<std::uint32_t>(k), rng));
    }
    std::string expectation = "observed";
    bool pass = true;
    if (k >= t) {
      expectation = "all-core";
      pass = core == total;
    } else if (k <= 2) {
      expectation = "none-core";
      pass = core == 0;
    }
    all = all && pass;
    rows.push_back({{"size", k},
                    {"subsets", total},
                    {"core", core},
                    {"fraction", total ? static_cast<double>(core) / static_cast<double>(total) : 0.0},
                    {"expectation", expectation},
                    {"pass", pass}});
  }
  Json report = report_header(s, c);
  report["threshold"] = t;
  report["sizes"] = std::move(rows);
  report["pass"] = all;
  return report;
}

bool report_passed(const Json& report) { return report.contains("pass") && report["pass"].get<bool>(); }

}  // namespace nullcore
