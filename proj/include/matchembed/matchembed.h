// Copyright 2026 The matchembed Authors
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

/* C interface to the matchembed library.
 *
 * Every fallible call returns an me_status; on failure a description is
 * available from me_last_error() on the same thread until the next call.
 * Objects are opaque handles released with their matching *_free function.
 * Strings returned through char** are released with me_string_free. */

#ifndef MATCHEMBED_MATCHEMBED_H_
#define MATCHEMBED_MATCHEMBED_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ME_API __declspec(dllexport)
#else
#define ME_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum me_status {
  ME_OK = 0,
  ME_ERR_INVALID_ARGUMENT = 1,
  ME_ERR_OUT_OF_RANGE = 2,
  ME_ERR_IO = 3,
  ME_ERR_PARSE = 4,
  ME_ERR_TOO_LARGE = 5,
  ME_ERR_DIVERGENCE = 6,
  ME_ERR_RUNTIME = 7
} me_status;

typedef enum me_objective {
  ME_OBJECTIVE_MCM = 0,
  ME_OBJECTIVE_BM = 1,
  ME_OBJECTIVE_UM = 2,
  ME_OBJECTIVE_MDM = 3
} me_objective;

typedef enum me_walk_method {
  ME_WALK_DEEPWALK = 0,
  ME_WALK_NODE2VEC = 1
} me_walk_method;

typedef enum me_similarity {
  ME_SIMILARITY_INVERSE = 0,
  ME_SIMILARITY_EXP_DECAY = 1,
  ME_SIMILARITY_UNIFORM = 2
} me_similarity;

typedef enum me_surrogate_matcher {
  ME_MATCHER_EXACT = 0,
  ME_MATCHER_GREEDY = 1
} me_surrogate_matcher;

typedef struct me_graph me_graph;
typedef struct me_result me_result;
typedef struct me_embedding me_embedding;
typedef struct me_bench_spec me_bench_spec;
typedef struct me_bench_result me_bench_result;

typedef struct me_embedding_config {
  int dimensions;
  int walks_per_node;
  int walk_length;
  int window;
  int negatives;
  int epochs;
  double learning_rate;
  double min_learning_rate;
  me_walk_method method;
  double p;
  double q;
  me_similarity similarity;
  int knn;
  int walk_threads;
} me_embedding_config;

/* Library */
ME_API const char* me_version(void);
ME_API const char* me_last_error(void);
ME_API const char* me_status_name(me_status status);
ME_API void me_string_free(char* s);

/* Names accepted: "mcm", "bm", "um", "mdm" (any case). */
ME_API me_status me_objective_parse(const char* name, me_objective* out);
ME_API me_status me_walk_method_parse(const char* name, me_walk_method* out);
ME_API me_status me_similarity_parse(const char* name, me_similarity* out);
ME_API me_status me_surrogate_matcher_parse(const char* name,
                                            me_surrogate_matcher* out);

/* Graphs. Pairs not listed become sentinel edges. */
ME_API me_status me_graph_from_edges(int n, const int* u, const int* v,
                                     const double* w, size_t count,
                                     int bipartite, me_graph** out);
ME_API me_status me_graph_read(const char* path, me_graph** out);
ME_API me_status me_graph_write(const me_graph* g, const char* path);
ME_API me_status me_graph_to_string(const me_graph* g, char** out);
ME_API void me_graph_free(me_graph* g);
ME_API int me_graph_size(const me_graph* g);
ME_API int me_graph_is_bipartite(const me_graph* g);
ME_API size_t me_graph_sentinel_count(const me_graph* g);
ME_API me_status me_graph_weight(const me_graph* g, int i, int j,
                                 double* out);
ME_API me_status me_graph_is_sentinel(const me_graph* g, int i, int j,
                                      int* out);

/* Generators */
ME_API me_status me_gen_adversarial(int t, double epsilon, me_graph** out);
ME_API me_status me_gen_lomax(double alpha, double scale, int n, int bipartite,
                              uint64_t seed, me_graph** out);
ME_API me_status me_gen_uniform(int n, uint64_t seed, int bipartite,
                                me_graph** out);

/* Objective value of the perfect matching given as `count` (u, v) pairs
 * stored flat in `pairs`. */
ME_API me_status me_evaluate(const me_graph* g, const int* pairs, size_t count,
                             me_objective objective, double* out);

/* Solvers */
ME_API me_status me_solve_exact(const me_graph* g, me_objective objective,
                                me_result** out);
ME_API me_status me_solve_bruteforce(const me_graph* g, me_objective objective,
                                     me_result** out);
/* randomized_ties = 0 breaks equal weights by index, otherwise by `seed`. */
ME_API me_status me_solve_greedy(const me_graph* g, me_objective objective,
                                 int randomized_ties, uint64_t seed,
                                 me_result** out);
ME_API me_status me_solve_heuristic(const me_graph* g, me_objective objective,
                                    const me_embedding_config* config,
                                    me_surrogate_matcher matcher,
                                    uint64_t seed, me_result** out);

ME_API double me_result_value(const me_result* r);
ME_API size_t me_result_pair_count(const me_result* r);
/* Copies 2 * pair_count ints (u0, v0, u1, v1, ...) with u < v. */
ME_API void me_result_pairs(const me_result* r, int* out);
ME_API int me_result_uses_sentinel(const me_result* r);
ME_API int64_t me_result_iterations(const me_result* r);
ME_API double me_result_wall_ms(const me_result* r);
/* Heuristic results only; NaN / 0 otherwise. */
ME_API double me_result_surrogate_value(const me_result* r);
ME_API double me_result_embed_ms(const me_result* r);
ME_API int me_result_walk_graph_connected(const me_result* r);
ME_API void me_result_free(me_result* r);

/* Embeddings */
ME_API void me_embedding_config_default(me_embedding_config* config);
ME_API me_status me_embed(const me_graph* g, const me_embedding_config* config,
                          uint64_t seed, me_embedding** out);
ME_API int me_embedding_rows(const me_embedding* e);
ME_API int me_embedding_dims(const me_embedding* e);
/* Copies rows * dims values, row-major. */
ME_API void me_embedding_values(const me_embedding* e, double* out);
ME_API double me_embedding_final_loss(const me_embedding* e);
ME_API int me_embedding_epoch_count(const me_embedding* e);
ME_API double me_embedding_epoch_loss(const me_embedding* e, int epoch);
ME_API int me_embedding_walk_graph_connected(const me_embedding* e);
ME_API me_status me_embedding_write(const me_embedding* e, const char* path);
ME_API me_status me_embedding_to_string(const me_embedding* e, char** out);
ME_API void me_embedding_free(me_embedding* e);

/* Benchmarks. Spec keys are the spec-file keys ("generator", "alpha",
 * "sweep", "algorithms", ...). */
ME_API me_status me_bench_spec_new(me_bench_spec** out);
ME_API me_status me_bench_spec_read(const char* path, me_bench_spec** out);
ME_API me_status me_bench_spec_set(me_bench_spec* spec, const char* key,
                                   const char* value);
ME_API me_status me_bench_spec_validate(const me_bench_spec* spec);
ME_API me_status me_bench_spec_to_string(const me_bench_spec* spec,
                                         char** out);
ME_API void me_bench_spec_free(me_bench_spec* spec);

ME_API me_status me_bench_run(const me_bench_spec* spec,
                              me_bench_result** out);
/* Reads trials.csv (and timings.csv when present) from `dir`. */
ME_API me_status me_bench_result_read(const char* dir, me_bench_result** out);
ME_API size_t me_bench_result_record_count(const me_bench_result* r);
ME_API size_t me_bench_result_failed_count(const me_bench_result* r);
/* Writes trials.csv, timings.csv and summary.csv into `dir` (created if
 * missing), plus plot.svg when `svg` is non-zero. */
ME_API me_status me_bench_result_write(const me_bench_result* r,
                                       const char* dir, int svg);
ME_API me_status me_bench_result_summary_csv(const me_bench_result* r,
                                             char** out);
ME_API me_status me_bench_result_summary_svg(const me_bench_result* r,
                                             char** out);
ME_API void me_bench_result_free(me_bench_result* r);

#ifdef __cplusplus
}
#endif

#endif /* MATCHEMBED_MATCHEMBED_H_ */
