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

// matchembed command-line tool. Links only the C API.
//
// Exit codes: 0 success, 1 usage error, 2 runtime failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matchembed/matchembed.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct Failure {
  int exit_code;
  std::string message;
};

// Throws Failure carrying `exit_code` when `status` is not ME_OK.
void Check(me_status status, int exit_code) {
  if (status == ME_OK) return;
  throw Failure{exit_code, std::string(me_status_name(status)) + ": " +
                               me_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Graph = std::unique_ptr<me_graph, Deleter<me_graph, me_graph_free>>;
using Result = std::unique_ptr<me_result, Deleter<me_result, me_result_free>>;
using Embedding =
    std::unique_ptr<me_embedding, Deleter<me_embedding, me_embedding_free>>;
using Spec =
    std::unique_ptr<me_bench_spec, Deleter<me_bench_spec, me_bench_spec_free>>;
using BenchResult =
    std::unique_ptr<me_bench_result,
                    Deleter<me_bench_result, me_bench_result_free>>;
using CString = std::unique_ptr<char, Deleter<char, me_string_free>>;

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) throw Failure{kExitRuntime, "cannot write '" + path + "'"};
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  if (std::fclose(f) != 0 || !ok) {
    throw Failure{kExitRuntime, "failed writing '" + path + "'"};
  }
}

std::string FormatValue(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const std::vector<std::string> kObjectives = {"mcm", "bm", "um", "mdm"};
const std::vector<std::string> kGenerators = {"adversarial", "lomax",
                                              "uniform"};

struct EmbedFlags {
  me_embedding_config config;
  std::string similarity = "inverse";

  EmbedFlags() { me_embedding_config_default(&config); }

  void Register(CLI::App* app) {
    app->add_option("--dimensions,-d", config.dimensions, "Embedding dimension");
    app->add_option("--walks-per-node", config.walks_per_node,
                    "Random walks started at each vertex");
    app->add_option("--walk-length", config.walk_length, "Vertices per walk");
    app->add_option("--window", config.window, "Skip-gram window");
    app->add_option("--negatives", config.negatives, "Negative samples");
    app->add_option("--epochs", config.epochs, "Training epochs");
    app->add_option("--learning-rate", config.learning_rate,
                    "Initial learning rate");
    app->add_option("--min-learning-rate", config.min_learning_rate,
                    "Learning-rate floor");
    app->add_option("--p", config.p, "node2vec return parameter");
    app->add_option("--q", config.q, "node2vec in-out parameter");
    app->add_option("--similarity", similarity,
                    "Weight-to-transition map")
        ->check(CLI::IsMember({"inverse", "exp_decay", "uniform"}));
    app->add_option("--knn", config.knn,
                    "Neighbours kept per vertex (0 keeps all)");
    app->add_option("--walk-threads", config.walk_threads,
                    "Threads used for walk generation");
  }

  const me_embedding_config& Resolve() {
    Check(me_similarity_parse(similarity.c_str(), &config.similarity),
          kExitUsage);
    return config;
  }
};

me_objective ParseObjectiveFlag(const std::string& name) {
  me_objective objective;
  Check(me_objective_parse(name.c_str(), &objective), kExitUsage);
  return objective;
}

Graph LoadGraph(const std::string& path) {
  me_graph* g = nullptr;
  Check(me_graph_read(path.c_str(), &g), kExitRuntime);
  return Graph(g);
}

// gen ------------------------------------------------------------------------

struct GenOptions {
  std::string generator = "adversarial";
  int t = 5;
  double epsilon = 1e-6;
  double alpha = 2.0;
  double scale = 1.0;
  int n = 100;
  std::uint64_t seed = 1;
  bool bipartite = false;
  std::string out;
};

void RunGen(const GenOptions& o) {
  me_graph* raw = nullptr;
  if (o.generator == "adversarial") {
    Check(me_gen_adversarial(o.t, o.epsilon, &raw), kExitUsage);
  } else if (o.generator == "lomax") {
    Check(me_gen_lomax(o.alpha, o.scale, o.n, o.bipartite, o.seed, &raw),
          kExitUsage);
  } else {
    Check(me_gen_uniform(o.n, o.seed, o.bipartite, &raw), kExitUsage);
  }
  const Graph g(raw);
  char* text = nullptr;
  Check(me_graph_to_string(g.get(), &text), kExitRuntime);
  const CString owned(text);
  Emit(o.out, owned.get());
}

// solve ----------------------------------------------------------------------

struct SolveOptions {
  std::string input;
  std::string objective = "mcm";
  bool exact = false;
  bool bruteforce = false;
  std::string heuristic;
  std::string matcher = "exact";
  bool random_ties = false;
  std::uint64_t seed = 1;
  std::string out;
  EmbedFlags embed;
};

void RunSolve(SolveOptions& o) {
  const int modes = (o.exact ? 1 : 0) + (o.bruteforce ? 1 : 0) +
                    (o.heuristic.empty() ? 0 : 1);
  if (modes != 1) {
    throw Failure{kExitUsage,
                  "choose exactly one of --exact, --bruteforce, --heuristic"};
  }
  const me_objective objective = ParseObjectiveFlag(o.objective);
  const Graph g = LoadGraph(o.input);

  me_result* raw = nullptr;
  if (o.exact) {
    Check(me_solve_exact(g.get(), objective, &raw), kExitRuntime);
  } else if (o.bruteforce) {
    Check(me_solve_bruteforce(g.get(), objective, &raw), kExitRuntime);
  } else if (o.heuristic == "greedy") {
    Check(me_solve_greedy(g.get(), objective, o.random_ties, o.seed, &raw),
          kExitRuntime);
  } else {
    me_embedding_config config = o.embed.Resolve();
    Check(me_walk_method_parse(o.heuristic.c_str(), &config.method),
          kExitUsage);
    me_surrogate_matcher matcher;
    Check(me_surrogate_matcher_parse(o.matcher.c_str(), &matcher),
          kExitUsage);
    Check(me_solve_heuristic(g.get(), objective, &config, matcher, o.seed,
                             &raw),
          kExitRuntime);
  }
  const Result r(raw);

  if (me_result_uses_sentinel(r.get())) {
    std::cerr << "warning: no perfect matching of genuine edges; "
                 "the result uses sentinel edges\n";
  }
  if (!me_result_walk_graph_connected(r.get())) {
    std::cerr << "warning: walk graph is disconnected\n";
  }

  std::vector<int> pairs(2 * me_result_pair_count(r.get()));
  me_result_pairs(r.get(), pairs.data());
  std::string text = "objective " + o.objective + "\nvalue " +
                     FormatValue(me_result_value(r.get())) + "\n";
  if (!o.heuristic.empty() && o.heuristic != "greedy") {
    text += "surrogate_value " +
            FormatValue(me_result_surrogate_value(r.get())) + "\n";
  }
  text += "pairs " + std::to_string(pairs.size() / 2) + "\n";
  for (std::size_t k = 0; k < pairs.size(); k += 2) {
    text += std::to_string(pairs[k]) + " " + std::to_string(pairs[k + 1]) +
            "\n";
  }
  Emit(o.out, text);
}

// embed ----------------------------------------------------------------------

struct EmbedOptions {
  std::string input;
  std::string method = "deepwalk";
  std::uint64_t seed = 1;
  std::string out;
  EmbedFlags embed;
};

void RunEmbed(EmbedOptions& o) {
  me_embedding_config config = o.embed.Resolve();
  Check(me_walk_method_parse(o.method.c_str(), &config.method), kExitUsage);
  const Graph g = LoadGraph(o.input);
  me_embedding* raw = nullptr;
  Check(me_embed(g.get(), &config, o.seed, &raw), kExitRuntime);
  const Embedding e(raw);
  if (!me_embedding_walk_graph_connected(e.get())) {
    std::cerr << "warning: walk graph is disconnected\n";
  }
  char* text = nullptr;
  Check(me_embedding_to_string(e.get(), &text), kExitRuntime);
  const CString owned(text);
  Emit(o.out, owned.get());
}

// bench / report -------------------------------------------------------------

struct BenchOptions {
  std::string spec_file;
  // Flag overrides applied on top of the spec file, in spec-key form.
  std::vector<std::pair<std::string, std::string>> settings;
  std::string out = "bench_out";
  std::string format = "csv";
};

void RunBench(const BenchOptions& o) {
  me_bench_spec* raw = nullptr;
  if (o.spec_file.empty()) {
    Check(me_bench_spec_new(&raw), kExitRuntime);
  } else {
    Check(me_bench_spec_read(o.spec_file.c_str(), &raw), kExitUsage);
  }
  const Spec spec(raw);
  for (const auto& [key, value] : o.settings) {
    Check(me_bench_spec_set(spec.get(), key.c_str(), value.c_str()),
          kExitUsage);
  }
  Check(me_bench_spec_validate(spec.get()), kExitUsage);

  me_bench_result* result_raw = nullptr;
  Check(me_bench_run(spec.get(), &result_raw), kExitRuntime);
  const BenchResult result(result_raw);
  Check(me_bench_result_write(result.get(), o.out.c_str(),
                              o.format == "svg"),
        kExitRuntime);

  char* text = nullptr;
  Check(me_bench_spec_to_string(spec.get(), &text), kExitRuntime);
  const CString owned(text);
  Emit(o.out + "/spec.txt", owned.get());

  const std::size_t failed = me_bench_result_failed_count(result.get());
  std::cerr << me_bench_result_record_count(result.get()) << " records, "
            << failed << " failed; results in " << o.out << "\n";
}

struct ReportOptions {
  std::string input;
  std::string out;
  std::string format = "csv";
};

void RunReport(const ReportOptions& o) {
  me_bench_result* raw = nullptr;
  Check(me_bench_result_read(o.input.c_str(), &raw), kExitRuntime);
  const BenchResult result(raw);
  char* text = nullptr;
  if (o.format == "svg") {
    Check(me_bench_result_summary_svg(result.get(), &text), kExitRuntime);
  } else {
    Check(me_bench_result_summary_csv(result.get(), &text), kExitRuntime);
  }
  const CString owned(text);
  Emit(o.out, owned.get());
}

// Adds an option whose value, when given, is recorded as spec `key`.
void AddSetting(CLI::App* app, BenchOptions& o, const std::string& flag,
                const std::string& key, const std::string& help) {
  app->add_option_function<std::string>(
      flag,
      [&o, key](const std::string& value) { o.settings.emplace_back(key, value); },
      help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching solvers and the embedding heuristic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(me_version()));

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a graph instance");
  gen_cmd->add_option("--generator", gen.generator, "Instance family")
      ->check(CLI::IsMember(kGenerators));
  gen_cmd->add_option("--t", gen.t, "Adversarial level");
  gen_cmd->add_option("--epsilon", gen.epsilon, "Adversarial gap shrink");
  gen_cmd->add_option("--alpha", gen.alpha, "Lomax shape");
  gen_cmd->add_option("--scale", gen.scale, "Lomax scale");
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_flag("--bipartite", gen.bipartite, "Bipartite instance");
  gen_cmd->add_option("--out,-o", gen.out, "Output file (default stdout)");

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a matching problem");
  solve_cmd->add_option("--input,-i", solve.input, "Graph file")->required();
  solve_cmd->add_option("--objective", solve.objective, "Objective")
      ->check(CLI::IsMember(kObjectives, CLI::ignore_case));
  solve_cmd->add_flag("--exact", solve.exact, "Exact solver");
  solve_cmd->add_flag("--bruteforce", solve.bruteforce,
                      "Exhaustive search (n <= 16)");
  solve_cmd->add_option("--heuristic", solve.heuristic, "Heuristic")
      ->check(CLI::IsMember({"greedy", "deepwalk", "node2vec"}));
  solve_cmd->add_option("--surrogate-matcher", solve.matcher,
                        "Matcher on the embedded points")
      ->check(CLI::IsMember({"exact", "greedy"}));
  solve_cmd->add_flag("--random-ties", solve.random_ties,
                      "Greedy breaks ties with --seed instead of by index");
  solve_cmd->add_option("--seed", solve.seed, "Random seed");
  solve_cmd->add_option("--out,-o", solve.out, "Output file (default stdout)");
  solve.embed.Register(solve_cmd);

  EmbedOptions embed;
  CLI::App* embed_cmd = app.add_subcommand("embed", "Embed graph vertices");
  embed_cmd->add_option("--input,-i", embed.input, "Graph file")->required();
  embed_cmd->add_option("--method", embed.method, "Walk method")
      ->check(CLI::IsMember({"deepwalk", "node2vec"}));
  embed_cmd->add_option("--seed", embed.seed, "Random seed");
  embed_cmd->add_option("--out,-o", embed.out, "Output file (default stdout)");
  embed.embed.Register(embed_cmd);

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run an experiment");
  bench_cmd->add_option("--spec", bench.spec_file, "Spec file")
      ->check(CLI::ExistingFile);
  AddSetting(bench_cmd, bench, "--id", "id", "Experiment id");
  AddSetting(bench_cmd, bench, "--generator", "generator", "Instance family");
  AddSetting(bench_cmd, bench, "--t", "t", "Adversarial level");
  AddSetting(bench_cmd, bench, "--epsilon", "epsilon", "Adversarial gap");
  AddSetting(bench_cmd, bench, "--alpha", "alpha", "Lomax shape");
  AddSetting(bench_cmd, bench, "--scale", "scale", "Lomax scale");
  AddSetting(bench_cmd, bench, "--n", "n", "Vertex count");
  AddSetting(bench_cmd, bench, "--bipartite", "bipartite", "true or false");
  AddSetting(bench_cmd, bench, "--objective", "objective", "Objective");
  AddSetting(bench_cmd, bench, "--algorithms", "algorithms",
             "Comma list of greedy, deepwalk, node2vec, exact");
  AddSetting(bench_cmd, bench, "--sweep", "sweep", "<var>=<v1,v2,...>");
  AddSetting(bench_cmd, bench, "--trials", "trials", "Trials per cell");
  AddSetting(bench_cmd, bench, "--seed", "seed", "Master seed");
  AddSetting(bench_cmd, bench, "--threads", "threads", "Worker threads");
  AddSetting(bench_cmd, bench, "--surrogate-matcher", "surrogate_matcher",
             "exact or greedy");
  AddSetting(bench_cmd, bench, "--dimensions", "dimensions", "Embedding dim");
  AddSetting(bench_cmd, bench, "--walks-per-node", "walks_per_node",
             "Walks per vertex");
  AddSetting(bench_cmd, bench, "--walk-length", "walk_length", "Walk length");
  AddSetting(bench_cmd, bench, "--p", "p", "node2vec p");
  AddSetting(bench_cmd, bench, "--q", "q", "node2vec q");
  bench_cmd->add_option("--out,-o", bench.out, "Output directory");
  bench_cmd->add_option("--format", bench.format, "csv, or svg for a plot too")
      ->check(CLI::IsMember({"csv", "svg"}));

  ReportOptions report;
  CLI::App* report_cmd =
      app.add_subcommand("report", "Summarize an existing trials.csv");
  report_cmd->add_option("--input,-i", report.input,
                         "Directory holding trials.csv")
      ->required();
  report_cmd->add_option("--out,-o", report.out, "Output file (default stdout)");
  report_cmd->add_option("--format", report.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) RunGen(gen);
    if (*solve_cmd) RunSolve(solve);
    if (*embed_cmd) RunEmbed(embed);
    if (*bench_cmd) RunBench(bench);
    if (*report_cmd) RunReport(report);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
