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

// nullcore command-line tool. Exit codes: 0 pass or core, 1 a check
// failed, 2 input error, 3 non-core, 4 over the complexity budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullcore/nullcore.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitNonCore = 3;
constexpr int kExitBudget = 4;

struct Options {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> m;
  std::string out;
  std::string set_file;
  std::string campaign = "all";
  std::string mode = "exhaustive";
  std::uint64_t samples = 1000;
  std::optional<std::uint64_t> seed;
  std::optional<double> budget;
  std::vector<std::size_t> sizes;
  std::string records;
  bool timings = false;
  std::string format = "summary";
  std::size_t probe = 0;
};

int exit_for(nc_status s) {
  switch (s) {
    case NC_OK: return kExitPass;
    case NC_BUDGET_EXCEEDED: return kExitBudget;
    case NC_VERIFICATION_FAILED:
    case NC_INTERNAL: return kExitFail;
    default: return kExitInput;
  }
}

int report_error(nc_status s) {
  std::cerr << "nullcore: " << nc_status_name(s) << ": " << nc_last_error() << "\n";
  if (s == NC_BUDGET_EXCEEDED) std::cerr << "nullcore: rerun with --mode randomized --seed N, or raise --budget\n";
  return exit_for(s);
}

struct Owned {
  char* p = nullptr;
  ~Owned() { nc_string_free(p); }
};

struct ContextDeleter {
  void operator()(nc_context* c) const { nc_context_destroy(c); }
};
struct GraphDeleter {
  void operator()(nc_graph* g) const { nc_graph_destroy(g); }
};
using ContextPtr = std::unique_ptr<nc_context, ContextDeleter>;
using GraphPtr = std::unique_ptr<nc_graph, GraphDeleter>;

bool emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(o.out, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "nullcore: cannot write " << o.out << "\n";
    return false;
  }
  return true;
}

double budget_of(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("NULLCORE_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    std::cerr << "nullcore: ignoring malformed NULLCORE_BUDGET\n";
  }
  return 5e7;
}

std::string campaign_config(const Options& o) {
  nlohmann::json j{{"campaign", o.campaign}, {"mode", o.mode},       {"samples", o.samples},
                   {"budget", budget_of(o)}, {"timings", o.timings}};
  if (o.seed) j["seed"] = *o.seed;
  if (!o.sizes.empty()) j["sizes"] = o.sizes;
  return j.dump();
}

std::optional<ContextPtr> open_context(const Options& o, int& code) {
  nc_context* raw = nullptr;
  const nc_status s = nc_context_create(o.q, o.m.empty() ? nullptr : o.m.data(), o.m.size(), &raw);
  if (s != NC_OK) {
    code = report_error(s);
    return std::nullopt;
  }
  return ContextPtr(raw);
}

int cmd_core_check(const Options& o) {
  std::ifstream in(o.set_file, std::ios::binary);
  if (!in) {
    std::cerr << "nullcore: cannot read " << o.set_file << "\n";
    return kExitInput;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  int code = 0;
  auto ctx = open_context(o, code);
  if (!ctx) return code;
  Owned report;
  int core = 0;
  const nc_status s = nc_core_check(ctx->get(), buf.str().c_str(), &report.p, &core);
  if (s != NC_OK) return report_error(s);
  if (!emit(o, report.p)) return kExitInput;
  return core ? kExitPass : kExitNonCore;
}

void write_record(const char* line, void* user) { *static_cast<std::ofstream*>(user) << line << '\n'; }

int cmd_verify(const Options& o) {
  int code = 0;
  auto ctx = open_context(o, code);
  if (!ctx) return code;
  std::ofstream records;
  if (!o.records.empty()) {
    records.open(o.records, std::ios::binary);
    if (!records) {
      std::cerr << "nullcore: cannot write " << o.records << "\n";
      return kExitInput;
    }
  }
  Owned report;
  int pass = 0;
  const nc_status s = nc_verify(ctx->get(), campaign_config(o).c_str(), records.is_open() ? write_record : nullptr,
                                &records, &report.p, &pass);
  if (s != NC_OK) return report_error(s);
  if (!emit(o, report.p)) return kExitInput;
  return pass ? kExitPass : kExitFail;
}

int cmd_sample_subsets(const Options& o) {
  int code = 0;
  auto ctx = open_context(o, code);
  if (!ctx) return code;
  Owned report;
  int pass = 0;
  const nc_status s = nc_sample_subsets(ctx->get(), campaign_config(o).c_str(), &report.p, &pass);
  if (s != NC_OK) return report_error(s);
  if (!emit(o, report.p)) return kExitInput;
  return pass ? kExitPass : kExitFail;
}

int cmd_class(const Options& o) {
  int code = 0;
  auto ctx = open_context(o, code);
  if (!ctx) return code;
  Owned info, members;
  nc_status s = nc_context_info(ctx->get(), &info.p);
  if (s == NC_OK) s = nc_class_export(ctx->get(), &members.p);
  if (s != NC_OK) return report_error(s);
  nlohmann::json j = nlohmann::json::parse(info.p);
  j["members"] = nlohmann::json::parse(members.p);
  return emit(o, j.dump() + "\n") ? kExitPass : kExitInput;
}

int cmd_graph(const Options& o) {
  int code = 0;
  auto ctx = open_context(o, code);
  if (!ctx) return code;
  nc_graph* raw = nullptr;
  nc_status s = nc_graph_build(ctx->get(), 5, &raw);
  if (s != NC_OK) return report_error(s);
  GraphPtr g(raw);
  Owned text;
  if (o.format == "summary") {
    s = nc_graph_summary(g.get(), ctx->get(), &text.p);
    if (s != NC_OK) return report_error(s);
    nlohmann::json j = nlohmann::json::parse(text.p);
    if (o.probe > 0) {
      int ok = 0;
      s = nc_graph_probe(g.get(), o.probe, o.seed.value_or(0), &ok);
      if (s != NC_OK) return report_error(s);
      j["transitivity_probe"] = {{"samples", o.probe}, {"seed", o.seed.value_or(0)}, {"pass", ok == 1}};
      if (!ok) code = kExitFail;
    }
    return emit(o, j.dump(2) + "\n") ? code : kExitInput;
  }
  s = nc_graph_export(g.get(), o.format.c_str(), &text.p);
  if (s != NC_OK) return report_error(s);
  return emit(o, text.p) ? kExitPass : kExitInput;
}

void field_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "field order (prime power)")->required();
  cmd->add_option("--m", o.m, "ascending coefficient codes of m, e.g. 1,1,0,1")->delimiter(',');
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
}

void campaign_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "exhaustive or randomized")->check(CLI::IsMember({"exhaustive", "randomized"}));
  cmd->add_option("--samples", o.samples, "draws per randomized check");
  cmd->add_option("--seed", o.seed, "seed for randomized runs");
  cmd->add_option("--budget", o.budget, "work budget for exhaustive runs (default 5e7, or NULLCORE_BUDGET)");
  cmd->add_flag("--timings", o.timings, "add per-campaign seconds to the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Core sets of matrices with an irreducible cubic characteristic polynomial"};
  app.set_version_flag("--version", std::string(nc_version()));
  app.require_subcommand(1);
  Options o;

  auto* core = app.add_subcommand("core-check", "decide whether a set of matrices is core");
  field_options(core, o);
  core->add_option("--set", o.set_file, "set file {\"q\",\"m\",\"set\"}")->required();

  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  field_options(verify, o);
  campaign_options(verify, o);
  verify->add_option("--campaign", o.campaign, "counts|triples|idp|graph|main-theorem|ua-lemma|all")
      ->check(CLI::IsMember({"counts", "triples", "idp", "graph", "main-theorem", "ua-lemma", "all"}));
  verify->add_option("--records", o.records, "JSON lines, one per classified triple");

  auto* sample = app.add_subcommand("sample-subsets", "core fractions of subsets by size");
  field_options(sample, o);
  campaign_options(sample, o);
  sample->add_option("--sizes", o.sizes, "subset sizes, e.g. 1,2,3,4,5")->delimiter(',');

  auto* cls = app.add_subcommand("class", "list the class C(m)");
  field_options(cls, o);

  auto* graph = app.add_subcommand("graph", "build the invertible-difference graph on C(m)");
  field_options(graph, o);
  graph->add_option("--format", o.format, "summary, edge-csv or dot")
      ->check(CLI::IsMember({"summary", "edge-csv", "dot"}));
  graph->add_option("--probe", o.probe, "transitivity probe samples (summary only)");
  graph->add_option("--seed", o.seed, "probe seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  if (core->parsed()) return cmd_core_check(o);
  if (verify->parsed()) return cmd_verify(o);
  if (sample->parsed()) return cmd_sample_subsets(o);
  if (cls->parsed()) return cmd_class(o);
  if (graph->parsed()) return cmd_graph(o);
  return kExitInput;
}
