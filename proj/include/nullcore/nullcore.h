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

#ifndef NULLCORE_H
#define NULLCORE_H

/* C interface to the nullcore library. Every call returns an nc_status;
 * on failure nc_last_error() describes the error for the calling thread.
 * Strings returned through char** are owned by the caller and released
 * with nc_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NC_API __declspec(dllexport)
#else
#define NC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nc_status {
  NC_OK = 0,
  NC_BAD_INPUT = 1,
  NC_SPEC_MISMATCH = 2,
  NC_DIV_ZERO = 3,
  NC_UNSUPPORTED = 4,
  NC_SIZE_GUARD = 5,
  NC_BUDGET_EXCEEDED = 6,
  NC_PARSE = 7,
  NC_VERIFICATION_FAILED = 8,
  NC_INTERNAL = 9
} nc_status;

typedef struct nc_context nc_context;
typedef struct nc_graph nc_graph;

/* Receives one JSON object per classified triple during nc_verify. */
typedef void (*nc_record_fn)(const char* json_line, void* user);

NC_API const char* nc_version(void);
NC_API const char* nc_last_error(void);
NC_API const char* nc_status_name(nc_status s);
NC_API void nc_string_free(char* s);

/* F_q and an irreducible monic cubic m given by ascending codes; m_len = 0
 * picks the least irreducible cubic. Enumerates the class C(m). */
NC_API nc_status nc_context_create(uint32_t q, const uint32_t* m, size_t m_len, nc_context** out);
NC_API void nc_context_destroy(nc_context* ctx);
/* {"version","field","m","class_size"} */
NC_API nc_status nc_context_info(const nc_context* ctx, char** json_out);
/* The class members as a JSON list of row-major code lists. */
NC_API nc_status nc_class_export(const nc_context* ctx, char** json_out);

/* set_json: {"q":..,"m":[..]?,"set":[[9 codes],..]}. The file's q and m
 * must match the context. *is_core is 1 or 0. */
NC_API nc_status nc_core_check(const nc_context* ctx, const char* set_json, char** report_json, int* is_core);

/* config_json: {"campaign","mode","samples","seed","budget","timings"};
 * q and m come from the context. record may be NULL. */
NC_API nc_status nc_verify(const nc_context* ctx, const char* config_json, nc_record_fn record, void* user,
                           char** report_json, int* all_pass);
/* config_json as for nc_verify plus "sizes". */
NC_API nc_status nc_sample_subsets(const nc_context* ctx, const char* config_json, char** report_json,
                                   int* all_pass);

/* Fails with NC_SIZE_GUARD above max_q. */
NC_API nc_status nc_graph_build(const nc_context* ctx, uint32_t max_q, nc_graph** out);
NC_API void nc_graph_destroy(nc_graph* g);
/* format: "edge-csv" or "dot" */
NC_API nc_status nc_graph_export(const nc_graph* g, const char* format, char** out);
/* Summary at the companion matrix of m. */
NC_API nc_status nc_graph_summary(const nc_graph* g, const nc_context* ctx, char** json_out);
NC_API nc_status nc_graph_probe(const nc_graph* g, size_t samples, uint64_t seed, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* NULLCORE_H */
