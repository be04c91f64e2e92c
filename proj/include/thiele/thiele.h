// Copyright 2026 The Thiele Authors
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


#ifndef THIELE_THIELE_H_
#define THIELE_THIELE_H_

#include <stdint.h>

#if defined(THIELE_BUILDING_LIBRARY)
#define THIELE_API __attribute__((visibility("default")))
#else
#define THIELE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct thiele_instance thiele_instance;

typedef enum thiele_status {
  THIELE_OK = 0,
  THIELE_NO_INSTANCE = 1,
  THIELE_ERR_INVALID_INPUT = 2,
  THIELE_ERR_INVALID_ARGUMENT = 3,
  THIELE_ERR_BUDGET = 4,
  THIELE_ERR_INTERNAL = 5
} thiele_status;

THIELE_API const char* thiele_version(void);

/* Message for the last failing call on this thread, or "". */
THIELE_API const char* thiele_last_error(void);

/* Frees any string returned through a char** out-parameter. */
THIELE_API void thiele_string_free(char* s);

THIELE_API thiele_status thiele_instance_parse(const char* json, thiele_instance** out);
THIELE_API thiele_status thiele_instance_load(const char* path, thiele_instance** out);
THIELE_API void thiele_instance_free(thiele_instance* instance);
THIELE_API thiele_status thiele_instance_to_json(const thiele_instance* instance,
                                                 char** out);
THIELE_API int thiele_instance_num_candidates(const thiele_instance* instance);
THIELE_API int thiele_instance_num_voters(const thiele_instance* instance);
THIELE_API int thiele_instance_k(const thiele_instance* instance);

THIELE_API thiele_status thiele_analyze(const thiele_instance* instance, char** report);

typedef struct thiele_solve_options {
  const char* solver;  /* exact greedy fptas additive colorcoding pav delta */
  const char* epsilon; /* "p/q" or NULL */
  const char* t;       /* threshold in document units, NULL keeps the document's */
  uint64_t seed;
  int64_t reps;        /* <= 0 selects the default */
  const char* override_W;
  int64_t override_w;  /* <= 0 means unset */
  int64_t override_r;  /* <= 0 means unset */
  int64_t max_subsets;
  int max_pattern_bits;
  int64_t max_recursive_calls;
  int kdd_cap;
} thiele_solve_options;

THIELE_API void thiele_solve_options_init(thiele_solve_options* options);

/* THIELE_OK with a committee, THIELE_NO_INSTANCE, or an error. The report is
   written in both non-error cases. */
THIELE_API thiele_status thiele_solve(const thiele_instance* instance,
                                      const thiele_solve_options* options, char** report);

/* Uses epsilon, the overrides and kdd_cap from `options`. */
THIELE_API thiele_status thiele_kernelize(const thiele_instance* instance,
                                          const thiele_solve_options* options,
                                          thiele_instance** kernel, char** report);

typedef struct thiele_gen_options {
  int candidates;
  int voters;
  int max_d;
  int max_voter_degree;
  int duplicates; /* size of one duplicated-voter group, 0 for none */
  const char* rule; /* pav cc av random-owa */
  int k;
  const char* t;
  uint64_t seed;
} thiele_gen_options;

THIELE_API void thiele_gen_options_init(thiele_gen_options* options);
THIELE_API thiele_status thiele_generate(const thiele_gen_options* options,
                                         thiele_instance** out);

#ifdef __cplusplus
}
#endif

#endif /* THIELE_THIELE_H_ */
