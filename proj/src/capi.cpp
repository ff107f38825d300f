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

#include "nullcore/nullcore.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "nullcore/campaign.hpp"
#include "nullcore/error.hpp"
#include "nullcore/version.hpp"

using namespace nullcore;

struct nc_context {
  Setting setting;
};

struct nc_graph {
  GammaGraph graph;
};

namespace {

thread_local std::string last_error;

nc_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadInput: return NC_BAD_INPUT;
    case ErrorCode::SpecMismatch: return NC_SPEC_MISMATCH;
    case ErrorCode::DivZero: return NC_DIV_ZERO;
    case ErrorCode::Unsupported: return NC_UNSUPPORTED;
    case ErrorCode::SizeGuard: return NC_SIZE_GUARD;
    case ErrorCode::BudgetExceeded: return NC_BUDGET_EXCEEDED;
    case ErrorCode::Parse: return NC_PARSE;
    case ErrorCode::VerificationFailed: return NC_VERIFICATION_FAILED;
  }
  return NC_INTERNAL;
}

template <class F>
nc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return NC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NC_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NC_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::BadInput, std::string(what) + " is null");
}

Json parse_config(const char* text) {
  if (!text || !*text) return Json::object();
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::Parse, "config is not valid JSON");
  return j;
}

CampaignConfig context_config(const nc_context* ctx, const char* text) {
  CampaignConfig c = config_from_json(parse_config(text));
  c.q = ctx->setting.field->cardinality();
  c.m = ctx->setting.m.coefficients();
  return c;
}

}  // namespace

extern "C" {

const char* nc_version(void) { return kVersion; }

const char* nc_last_error(void) { return last_error.c_str(); }

const char* nc_status_name(nc_status s) {
  switch (s) {
    case NC_OK: return "ok";
    case NC_BAD_INPUT: return "bad-input";
    case NC_SPEC_MISMATCH: return "mismatch";
    case NC_DIV_ZERO: return "division-by-zero";
    case NC_UNSUPPORTED: return "unsupported";
    case NC_SIZE_GUARD: return "size-guard";
    case NC_BUDGET_EXCEEDED: return "budget-exceeded";
    case NC_PARSE: return "parse";
    case NC_VERIFICATION_FAILED: return "verification-failed";
    case NC_INTERNAL: return "internal";
  }
  return "unknown";
}

void nc_string_free(char* s) { std::free(s); }

nc_status nc_context_create(uint32_t q, const uint32_t* m, size_t m_len, nc_context** out) {
  return guarded([&] {
    need(out, "out");
    std::optional<std::vector<Code>> poly;
    if (m_len > 0) {
      need(m, "m");
      poly = std::vector<Code>(m, m + m_len);
    }
    *out = new nc_context{make_setting(q, poly)};
  });
}

void nc_context_destroy(nc_context* ctx) { delete ctx; }

nc_status nc_context_info(const nc_context* ctx, char** json_out) {
  return guarded([&] {
    need(ctx, "ctx");
    need(json_out, "json_out");
    const Setting& s = ctx->setting;
    const Json j{{"version", kVersion},
                 {"field", field_to_json(*s.field)},
                 {"m", upoly_to_json(s.m)},
                 {"class_size", s.cls.size()}};
    *json_out = copy_out(j.dump());
  });
}

nc_status nc_class_export(const nc_context* ctx, char** json_out) {
  return guarded([&] {
    need(ctx, "ctx");
    need(json_out, "json_out");
    *json_out = copy_out(class_to_json(ctx->setting.cls).dump());
  });
}

nc_status nc_core_check(const nc_context* ctx, const char* set_json, char** report_json, int* is_core) {
  return guarded([&] {
    need(ctx, "ctx");
    need(set_json, "set_json");
    need(report_json, "report_json");
    const Setting& s = ctx->setting;
    const SetFile file = parse_set_file(set_json);
    if (file.q != s.field->cardinality())
      fail(ErrorCode::SpecMismatch, "set file q=" + std::to_string(file.q) + " but the context has q=" +
                                        std::to_string(s.field->cardinality()));
    if (file.m && file.m->coefficients() != s.m.coefficients())
      fail(ErrorCode::SpecMismatch, "set file m differs from the context");
    std::vector<Matrix> set;
    set.reserve(file.set.size());
    // rebind to the context's field object
    for (const Matrix& a : file.set) set.emplace_back(s.field, 3, 3, a.entries());
    const CoreReport r = nullcore::is_core(set);
    Json j = core_report_to_json(r);
    j["version"] = kVersion;
    j["field"] = field_to_json(*s.field);
    j["m"] = upoly_to_json(s.m);
    *report_json = copy_out(j.dump(2) + "\n");
    if (is_core) *is_core = r.core() ? 1 : 0;
  });
}

nc_status nc_verify(const nc_context* ctx, const char* config_json, nc_record_fn record, void* user,
                    char** report_json, int* all_pass) {
  return guarded([&] {
    need(ctx, "ctx");
    need(report_json, "report_json");
    const CampaignConfig c = context_config(ctx, config_json);
    RecordSink sink;
    if (record) sink = [&](const Json& j) { record(j.dump().c_str(), user); };
    const Json report = run_verify(ctx->setting, c, sink);
    *report_json = copy_out(report.dump(2) + "\n");
    if (all_pass) *all_pass = report_passed(report) ? 1 : 0;
  });
}

nc_status nc_sample_subsets(const nc_context* ctx, const char* config_json, char** report_json, int* all_pass) {
  return guarded([&] {
    need(ctx, "ctx");
    need(report_json, "report_json");
    const CampaignConfig c = context_config(ctx, config_json);
    const Json report = run_sample_subsets(ctx->setting, c);
    *report_json = copy_out(report.dump(2) + "\n");
    if (all_pass) *all_pass = report_passed(report) ? 1 : 0;
  });
}

nc_status nc_graph_build(const nc_context* ctx, uint32_t max_q, nc_graph** out) {
  return guarded([&] {
    need(ctx, "ctx");
    need(out, "out");
    *out = new nc_graph{build_gamma(ctx->setting.cls, max_q)};
  });
}

void nc_graph_destroy(nc_graph* g) { delete g; }

nc_status nc_graph_export(const nc_graph* g, const char* format, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(format, "format");
    need(out, "out");
    *out = copy_out(export_graph(g->graph, parse_export_format(format)));
  });
}

nc_status nc_graph_summary(const nc_graph* g, const nc_context* ctx, char** json_out) {
  return guarded([&] {
    need(g, "graph");
    need(ctx, "ctx");
    need(json_out, "json_out");
    Json j = graph_summary_to_json(summarize(g->graph, ctx->setting.base));
    j["version"] = kVersion;
    j["field"] = field_to_json(*ctx->setting.field);
    j["m"] = upoly_to_json(ctx->setting.m);
    *json_out = copy_out(j.dump(2) + "\n");
  });
}

nc_status nc_graph_probe(const nc_graph* g, size_t samples, uint64_t seed, int* ok) {
  return guarded([&] {
    need(g, "graph");
    need(ok, "ok");
    *ok = vertex_transitivity_probe(g->graph, samples, seed) ? 1 : 0;
  });
}

}  // extern "C"
