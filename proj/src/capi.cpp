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

#include "matchembed/matchembed.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bench.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "greedy.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"

namespace me = matchembed;

struct me_graph {
  me::DenseGraph graph;
};

struct me_result {
  me::SolverReport report;
  std::optional<me::PipelineReport> pipeline;
};

struct me_embedding {
  me::Embedding embedding;
};

struct me_bench_spec {
  me::ExperimentSpec spec;
};

struct me_bench_result {
  std::vector<me::TrialRecord> records;
};

namespace {

thread_local std::string g_last_error;

me_status SetError(me_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs `body`, translating exceptions into a status and the thread's
// last-error message.
template <typename F>
me_status Guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return ME_OK;
  } catch (const me::Error& e) {
    return SetError(static_cast<me_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return SetError(ME_ERR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return SetError(ME_ERR_RUNTIME, e.what());
  } catch (...) {
    return SetError(ME_ERR_RUNTIME, "unknown error");
  }
}

void RequireNonNull(const void* p, const char* name) {
  me::Require(p != nullptr, std::string(name) + " must not be null");
}

me::Objective ToObjective(me_objective objective) {
  switch (objective) {
    case ME_OBJECTIVE_MCM: return me::Objective::kMcm;
    case ME_OBJECTIVE_BM: return me::Objective::kBm;
    case ME_OBJECTIVE_UM: return me::Objective::kUm;
    case ME_OBJECTIVE_MDM: return me::Objective::kMdm;
  }
  me::Fail(me::ErrorCode::kInvalidArgument, "unknown objective code");
}

me::EmbeddingConfig ToConfig(const me_embedding_config* c) {
  me::EmbeddingConfig config;
  if (c == nullptr) return config;
  config.dimensions = c->dimensions;
  config.walks_per_node = c->walks_per_node;
  config.walk_length = c->walk_length;
  config.window = c->window;
  config.negatives = c->negatives;
  config.epochs = c->epochs;
  config.learning_rate = c->learning_rate;
  config.min_learning_rate = c->min_learning_rate;
  switch (c->method) {
    case ME_WALK_DEEPWALK: config.method = me::WalkMethod::kDeepWalk; break;
    case ME_WALK_NODE2VEC: config.method = me::WalkMethod::kNode2Vec; break;
    default: me::Fail(me::ErrorCode::kInvalidArgument, "unknown walk method");
  }
  config.p = c->p;
  config.q = c->q;
  switch (c->similarity) {
    case ME_SIMILARITY_INVERSE:
      config.similarity = me::Similarity::kInverse;
      break;
    case ME_SIMILARITY_EXP_DECAY:
      config.similarity = me::Similarity::kExpDecay;
      break;
    case ME_SIMILARITY_UNIFORM:
      config.similarity = me::Similarity::kUniform;
      break;
    default: me::Fail(me::ErrorCode::kInvalidArgument, "unknown similarity");
  }
  config.knn = c->knn;
  config.walk_threads = c->walk_threads;
  return config;
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void WriteTextFile(const std::filesystem::path& path, const std::string& s) {
  std::ofstream out(path, std::ios::binary);
  me::Require(out.good(), "cannot write '" + path.string() + "'",
              me::ErrorCode::kIo);
  out << s;
  out.flush();
  me::Require(out.good(), "failed writing '" + path.string() + "'",
              me::ErrorCode::kIo);
}

template <typename T, typename Make>
me_status Create(T** out, Make&& make) {
  return Guard([&] {
    RequireNonNull(out, "out");
    *out = nullptr;
    *out = new T(make());
  });
}

double Ms(std::chrono::nanoseconds ns) {
  return std::chrono::duration<double, std::milli>(ns).count();
}

}  // namespace

extern "C" {

const char* me_version(void) { return "0.1.0"; }

const char* me_last_error(void) { return g_last_error.c_str(); }

const char* me_status_name(me_status status) {
  switch (status) {
    case ME_OK: return "ok";
    case ME_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ME_ERR_OUT_OF_RANGE: return "out of range";
    case ME_ERR_IO: return "i/o error";
    case ME_ERR_PARSE: return "parse error";
    case ME_ERR_TOO_LARGE: return "instance too large";
    case ME_ERR_DIVERGENCE: return "divergence";
    case ME_ERR_RUNTIME: return "runtime error";
  }
  return "unknown status";
}

void me_string_free(char* s) { std::free(s); }

me_status me_objective_parse(const char* name, me_objective* out) {
  return Guard([&] {
    RequireNonNull(name, "name");
    RequireNonNull(out, "out");
    *out = static_cast<me_objective>(me::ParseObjective(name));
  });
}

me_status me_walk_method_parse(const char* name, me_walk_method* out) {
  return Guard([&] {
    RequireNonNull(name, "name");
    RequireNonNull(out, "out");
    *out = static_cast<me_walk_method>(me::ParseWalkMethod(name));
  });
}

me_status me_similarity_parse(const char* name, me_similarity* out) {
  return Guard([&] {
    RequireNonNull(name, "name");
    RequireNonNull(out, "out");
    *out = static_cast<me_similarity>(me::ParseSimilarity(name));
  });
}

me_status me_surrogate_matcher_parse(const char* name,
                                     me_surrogate_matcher* out) {
  return Guard([&] {
    RequireNonNull(name, "name");
    RequireNonNull(out, "out");
    *out = static_cast<me_surrogate_matcher>(me::ParseSurrogateMatcher(name));
  });
}

/* Graphs */

me_status me_graph_from_edges(int n, const int* u, const int* v,
                              const double* w, size_t count, int bipartite,
                              me_graph** out) {
  return Create(out, [&] {
    if (count > 0) {
      RequireNonNull(u, "u");
      RequireNonNull(v, "v");
      RequireNonNull(w, "w");
    }
    std::vector<me::WeightedEdge> edges(count);
    for (size_t k = 0; k < count; ++k) edges[k] = {u[k], v[k], w[k]};
    return me_graph{
        me::DenseGraph::CompleteWithSentinels(n, edges, bipartite != 0)};
  });
}

me_status me_graph_read(const char* path, me_graph** out) {
  return Create(out, [&] {
    RequireNonNull(path, "path");
    return me_graph{me::ReadGraphFile(path)};
  });
}

me_status me_graph_write(const me_graph* g, const char* path) {
  return Guard([&] {
    RequireNonNull(g, "graph");
    RequireNonNull(path, "path");
    me::WriteGraphFile(path, g->graph);
  });
}

me_status me_graph_to_string(const me_graph* g, char** out) {
  return Guard([&] {
    RequireNonNull(g, "graph");
    RequireNonNull(out, "out");
    std::ostringstream s;
    me::WriteGraph(s, g->graph);
    *out = CopyString(s.str());
  });
}

void me_graph_free(me_graph* g) { delete g; }

int me_graph_size(const me_graph* g) { return g ? g->graph.size() : 0; }

int me_graph_is_bipartite(const me_graph* g) {
  return g && g->graph.bipartite() ? 1 : 0;
}

size_t me_graph_sentinel_count(const me_graph* g) {
  return g ? g->graph.sentinel_count() : 0;
}

me_status me_graph_weight(const me_graph* g, int i, int j, double* out) {
  return Guard([&] {
    RequireNonNull(g, "graph");
    RequireNonNull(out, "out");
    const int n = g->graph.size();
    me::Require(i >= 0 && i < n && j >= 0 && j < n, "vertex out of range",
                me::ErrorCode::kOutOfRange);
    *out = g->graph.weight(i, j);
  });
}

me_status me_graph_is_sentinel(const me_graph* g, int i, int j, int* out) {
  return Guard([&] {
    RequireNonNull(g, "graph");
    RequireNonNull(out, "out");
    const int n = g->graph.size();
    me::Require(i >= 0 && i < n && j >= 0 && j < n, "vertex out of range",
                me::ErrorCode::kOutOfRange);
    *out = g->graph.is_sentinel(i, j) ? 1 : 0;
  });
}

/* Generators */

me_status me_gen_adversarial(int t, double epsilon, me_graph** out) {
  return Create(out, [&] {
    return me_graph{me::GenerateAdversarial(t, epsilon).graph};
  });
}

me_status me_gen_lomax(double alpha, double scale, int n, int bipartite,
                       uint64_t seed, me_graph** out) {
  return Create(out, [&] {
    me::LomaxConfig config;
    config.shape = alpha;
    config.scale = scale;
    config.n = n;
    config.bipartite = bipartite != 0;
    return me_graph{me::GenerateLomax(config, seed)};
  });
}

me_status me_gen_uniform(int n, uint64_t seed, int bipartite, me_graph** out) {
  return Create(out, [&] {
    return me_graph{me::GenerateUniform(n, seed, bipartite != 0)};
  });
}

me_status me_evaluate(const me_graph* g, const int* pairs, size_t count,
                      me_objective objective, double* out) {
  return Guard([&] {
    RequireNonNull(g, "graph");
    RequireNonNull(out, "out");
    if (count > 0) RequireNonNull(pairs, "pairs");
    std::vector<me::VertexPair> list(count);
    for (size_t k = 0; k < count; ++k) list[k] = {pairs[2 * k], pairs[2 * k + 1]};
    const me::Matching m(g->graph.size(), std::move(list));
    *out = me::Evaluate(g->graph, m, ToObjective(objective));
  });
}

/* Solvers */

me_status me_solve_exact(const me_graph* g, me_objective objective,
                         me_result** out) {
  return Create(out, [&] {
    RequireNonNull(g, "graph");
    return me_result{me::SolveExact(g->graph, ToObjective(objective)), {}};
  });
}

me_status me_solve_bruteforce(const me_graph* g, me_objective objective,
                              me_result** out) {
  return Create(out, [&] {
    RequireNonNull(g, "graph");
    const me::Stopwatch watch;
    me::OracleResult r = me::BruteForceOptimum(g->graph, ToObjective(objective));
    me::SolverReport report;
    report.uses_sentinel = me::UsesSentinel(g->graph, r.matching);
    report.matching = std::move(r.matching);
    report.value = r.value;
    report.wall_time = watch.Elapsed();
    return me_result{std::move(report), {}};
  });
}

me_status me_solve_greedy(const me_graph* g, me_objective objective,
                          int randomized_ties, uint64_t seed,
                          me_result** out) {
  return Create(out, [&] {
    RequireNonNull(g, "graph");
    me::TieBreak ties;
    if (randomized_ties) {
      ties.policy = me::TiePolicy::kRandomized;
      ties.seed = seed;
    }
    return me_result{me::GreedyMatch(g->graph, ToObjective(objective), ties),
                     {}};
  });
}

me_status me_solve_heuristic(const me_graph* g, me_objective objective,
                             const me_embedding_config* config,
                             me_surrogate_matcher matcher, uint64_t seed,
                             me_result** out) {
  return Create(out, [&] {
    RequireNonNull(g, "graph");
    me::SurrogateMatcher m;
    switch (matcher) {
      case ME_MATCHER_EXACT: m = me::SurrogateMatcher::kExact; break;
      case ME_MATCHER_GREEDY: m = me::SurrogateMatcher::kEuclideanGreedy; break;
      default: me::Fail(me::ErrorCode::kInvalidArgument, "unknown matcher");
    }
    me::PipelineReport p = me::ApproxMatch(
        g->graph, ToObjective(objective), ToConfig(config), m, seed);
    me::SolverReport report = p.result;
    return me_result{std::move(report), std::move(p)};
  });
}

double me_result_value(const me_result* r) {
  return r ? r->report.value : std::numeric_limits<double>::quiet_NaN();
}

size_t me_result_pair_count(const me_result* r) {
  return r ? r->report.matching.size() : 0;
}

void me_result_pairs(const me_result* r, int* out) {
  if (r == nullptr || out == nullptr) return;
  size_t k = 0;
  for (const me::VertexPair& p : r->report.matching.pairs()) {
    out[k++] = p.u;
    out[k++] = p.v;
  }
}

int me_result_uses_sentinel(const me_result* r) {
  return r && r->report.uses_sentinel ? 1 : 0;
}

int64_t me_result_iterations(const me_result* r) {
  return r ? r->report.iterations : 0;
}

double me_result_wall_ms(const me_result* r) {
  return r ? Ms(r->report.wall_time) : 0.0;
}

double me_result_surrogate_value(const me_result* r) {
  return r && r->pipeline ? r->pipeline->surrogate_value
                          : std::numeric_limits<double>::quiet_NaN();
}

double me_result_embed_ms(const me_result* r) {
  return r && r->pipeline ? Ms(r->pipeline->embed_time) : 0.0;
}

int me_result_walk_graph_connected(const me_result* r) {
  return r && r->pipeline && !r->pipeline->walk_graph_connected ? 0 : 1;
}

void me_result_free(me_result* r) { delete r; }

/* Embeddings */

void me_embedding_config_default(me_embedding_config* config) {
  if (config == nullptr) return;
  const me::EmbeddingConfig d;
  config->dimensions = d.dimensions;
  config->walks_per_node = d.walks_per_node;
  config->walk_length = d.walk_length;
  config->window = d.window;
  config->negatives = d.negatives;
  config->epochs = d.epochs;
  config->learning_rate = d.learning_rate;
  config->min_learning_rate = d.min_learning_rate;
  config->method = static_cast<me_walk_method>(d.method);
  config->p = d.p;
  config->q = d.q;
  config->similarity = static_cast<me_similarity>(d.similarity);
  config->knn = d.knn;
  config->walk_threads = d.walk_threads;
}

me_status me_embed(const me_graph* g, const me_embedding_config* config,
                   uint64_t seed, me_embedding** out) {
  return Create(out, [&] {
    RequireNonNull(g, "graph");
    return me_embedding{me::EmbedGraph(g->graph, ToConfig(config), seed)};
  });
}

int me_embedding_rows(const me_embedding* e) {
  return e ? e->embedding.vectors.count : 0;
}

int me_embedding_dims(const me_embedding* e) {
  return e ? e->embedding.vectors.dim : 0;
}

void me_embedding_values(const me_embedding* e, double* out) {
  if (e == nullptr || out == nullptr) return;
  const std::vector<double>& c = e->embedding.vectors.coords;
  std::copy(c.begin(), c.end(), out);
}

double me_embedding_final_loss(const me_embedding* e) {
  return e ? e->embedding.final_loss
           : std::numeric_limits<double>::quiet_NaN();
}

int me_embedding_epoch_count(const me_embedding* e) {
  return e ? static_cast<int>(e->embedding.epoch_losses.size()) : 0;
}

double me_embedding_epoch_loss(const me_embedding* e, int epoch) {
  if (e == nullptr || epoch < 0 || epoch >= me_embedding_epoch_count(e)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return e->embedding.epoch_losses[static_cast<size_t>(epoch)];
}

int me_embedding_walk_graph_connected(const me_embedding* e) {
  return e && !e->embedding.walk_graph_connected ? 0 : 1;
}

me_status me_embedding_write(const me_embedding* e, const char* path) {
  return Guard([&] {
    RequireNonNull(e, "embedding");
    RequireNonNull(path, "path");
    std::ostringstream s;
    me::WriteEmbedding(s, e->embedding);
    WriteTextFile(path, s.str());
  });
}

me_status me_embedding_to_string(const me_embedding* e, char** out) {
  return Guard([&] {
    RequireNonNull(e, "embedding");
    RequireNonNull(out, "out");
    std::ostringstream s;
    me::WriteEmbedding(s, e->embedding);
    *out = CopyString(s.str());
  });
}

void me_embedding_free(me_embedding* e) { delete e; }

/* Benchmarks */

me_status me_bench_spec_new(me_bench_spec** out) {
  return Create(out, [] { return me_bench_spec{}; });
}

me_status me_bench_spec_read(const char* path, me_bench_spec** out) {
  return Create(out, [&] {
    RequireNonNull(path, "path");
    return me_bench_spec{me::ReadSpecFile(path)};
  });
}

me_status me_bench_spec_set(me_bench_spec* spec, const char* key,
                            const char* value) {
  return Guard([&] {
    RequireNonNull(spec, "spec");
    RequireNonNull(key, "key");
    RequireNonNull(value, "value");
    me::ApplySetting(spec->spec, key, value);
  });
}

me_status me_bench_spec_validate(const me_bench_spec* spec) {
  return Guard([&] {
    RequireNonNull(spec, "spec");
    spec->spec.Validate();
  });
}

me_status me_bench_spec_to_string(const me_bench_spec* spec, char** out) {
  return Guard([&] {
    RequireNonNull(spec, "spec");
    RequireNonNull(out, "out");
    *out = CopyString(me::WriteSpec(spec->spec));
  });
}

void me_bench_spec_free(me_bench_spec* spec) { delete spec; }

me_status me_bench_run(const me_bench_spec* spec, me_bench_result** out) {
  return Create(out, [&] {
    RequireNonNull(spec, "spec");
    return me_bench_result{me::RunExperiment(spec->spec)};
  });
}

me_status me_bench_result_read(const char* dir, me_bench_result** out) {
  return Create(out, [&] {
    RequireNonNull(dir, "dir");
    const std::filesystem::path base(dir);
    std::ifstream trials(base / "trials.csv");
    me::Require(trials.good(),
                "cannot open '" + (base / "trials.csv").string() + "'",
                me::ErrorCode::kIo);
    std::ifstream timings(base / "timings.csv");
    return me_bench_result{
        me::ReadTrialsCsv(trials, timings.good() ? &timings : nullptr)};
  });
}

size_t me_bench_result_record_count(const me_bench_result* r) {
  return r ? r->records.size() : 0;
}

size_t me_bench_result_failed_count(const me_bench_result* r) {
  if (r == nullptr) return 0;
  size_t failed = 0;
  for (const me::TrialRecord& t : r->records) failed += t.ok ? 0 : 1;
  return failed;
}

me_status me_bench_result_write(const me_bench_result* r, const char* dir,
                                int svg) {
  return Guard([&] {
    RequireNonNull(r, "result");
    RequireNonNull(dir, "dir");
    const std::filesystem::path base(dir);
    std::error_code ec;
    std::filesystem::create_directories(base, ec);
    me::Require(!ec, "cannot create '" + base.string() + "': " + ec.message(),
                me::ErrorCode::kIo);
    const std::vector<me::CellSummary> summary = me::Summarize(r->records);
    std::ostringstream trials, timings, csv;
    me::WriteTrialsCsv(trials, r->records);
    me::WriteTimingsCsv(timings, r->records);
    me::WriteSummaryCsv(csv, summary);
    WriteTextFile(base / "trials.csv", trials.str());
    WriteTextFile(base / "timings.csv", timings.str());
    WriteTextFile(base / "summary.csv", csv.str());
    if (svg) {
      std::ostringstream plot;
      me::WriteSummarySvg(plot, summary);
      WriteTextFile(base / "plot.svg", plot.str());
    }
  });
}

me_status me_bench_result_summary_csv(const me_bench_result* r, char** out) {
  return Guard([&] {
    RequireNonNull(r, "result");
    RequireNonNull(out, "out");
    std::ostringstream s;
    me::WriteSummaryCsv(s, me::Summarize(r->records));
    *out = CopyString(s.str());
  });
}

me_status me_bench_result_summary_svg(const me_bench_result* r, char** out) {
  return Guard([&] {
    RequireNonNull(r, "result");
    RequireNonNull(out, "out");
    std::ostringstream s;
    me::WriteSummarySvg(s, me::Summarize(r->records));
    *out = CopyString(s.str());
  });
}

void me_bench_result_free(me_bench_result* r) { delete r; }

}  // extern "C"
