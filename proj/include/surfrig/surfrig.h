// Copyright 2026 The surfrig Authors.
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

/* C interface to the surfrig library. Every call returns a status code;
 * on failure surfrig_last_error() describes the problem for the calling
 * thread. Strings returned through char** out-parameters are owned by the
 * caller and released with surfrig_string_free(). */
#ifndef SURFRIG_SURFRIG_H
#define SURFRIG_SURFRIG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SURFRIG_BUILDING)
#define SURFRIG_API __declspec(dllexport)
#else
#define SURFRIG_API __declspec(dllimport)
#endif
#else
#define SURFRIG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum surfrig_status {
  SURFRIG_OK = 0,
  SURFRIG_INVALID_ARGUMENT = 1,
  SURFRIG_PARSE_ERROR = 2,
  SURFRIG_DEGENERATE = 3,
  SURFRIG_UNSUPPORTED = 4,
  SURFRIG_BUDGET_EXHAUSTED = 5,
  SURFRIG_INTERNAL_ERROR = 6
} surfrig_status;

typedef enum surfrig_backend { SURFRIG_EXACT = 0, SURFRIG_FLOAT = 1 } surfrig_backend;

typedef enum surfrig_surface {
  SURFRIG_CYLINDER = 0,
  SURFRIG_CONE = 1,
  SURFRIG_ELLIPSOID = 2
} surfrig_surface;

typedef enum surfrig_route {
  SURFRIG_ROUTE_AUTO = 0,
  SURFRIG_ROUTE_MAX_RANK = 1,
  SURFRIG_ROUTE_PSD = 2
} surfrig_route;

typedef struct surfrig_options {
  double tol;             /* float relative tolerance, default 1e-9 */
  uint64_t seed;          /* randomized searches */
  uint32_t attempts;      /* random stress combinations, default 20 */
  uint32_t budget;        /* resampling budget for generic realizations, default 8 */
  int assume_generic;     /* caller asserts a generic placement */
  surfrig_route route;
  surfrig_surface surface; /* construction pipeline and hendrickson screen */
} surfrig_options;

typedef struct surfrig_framework surfrig_framework;

SURFRIG_API void surfrig_options_init(surfrig_options* opts);
SURFRIG_API const char* surfrig_last_error(void);
SURFRIG_API const char* surfrig_status_string(surfrig_status status);
SURFRIG_API const char* surfrig_version(void);
SURFRIG_API void surfrig_string_free(char* s);

/* Parses a framework document. tol applies to the on-surface check in
 * float mode and may be <= 0 for the default. */
SURFRIG_API surfrig_status surfrig_framework_parse(const char* json, surfrig_backend backend,
                                                   double tol, surfrig_framework** out);
/* Exact base fixture "K5_E", "H1" or "H2" with its stress. */
SURFRIG_API surfrig_status surfrig_framework_fixture(const char* name, surfrig_framework** out);
SURFRIG_API void surfrig_framework_free(surfrig_framework* fw);

SURFRIG_API surfrig_status surfrig_framework_to_json(const surfrig_framework* fw, char** out);
SURFRIG_API size_t surfrig_framework_vertex_count(const surfrig_framework* fw);
SURFRIG_API size_t surfrig_framework_edge_count(const surfrig_framework* fw);
SURFRIG_API surfrig_backend surfrig_framework_backend(const surfrig_framework* fw);
SURFRIG_API surfrig_status surfrig_framework_rigidity_rank(const surfrig_framework* fw,
                                                           double tol, size_t* out);

SURFRIG_API surfrig_status surfrig_analyze(const surfrig_framework* fw,
                                           const surfrig_options* opts, char** report);
SURFRIG_API surfrig_status surfrig_certify(const surfrig_framework* fw,
                                           const surfrig_options* opts, char** report,
                                           int* certified);
/* steps_json may be NULL for the base graph alone. */
SURFRIG_API surfrig_status surfrig_certify_construction(const char* base, const char* steps_json,
                                                        const surfrig_options* opts,
                                                        char** report, int* certified);
SURFRIG_API surfrig_status surfrig_sparsity(const char* graph_json, int k, char** report,
                                            int* sparse);
SURFRIG_API surfrig_status surfrig_hendrickson(const char* graph_json,
                                               const surfrig_options* opts, char** report,
                                               int* passed);

#ifdef __cplusplus
}
#endif

#endif /* SURFRIG_SURFRIG_H */
