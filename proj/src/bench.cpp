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

#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <thread>

#include "error.hpp"
#include "exact.hpp"
#include "generators.hpp"
#include "greedy.hpp"
#include "rng.hpp"
#include "stats.hpp"
#include "text_util.hpp"

namespace matchembed {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double Millis(std::chrono::nanoseconds ns) {
  return std::chrono::duration<double, std::milli>(ns).count();
}

int AsInt(double v, const std::string& what) {
  Require(std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e9,
          what + " must be an integer");
  return static_cast<int>(v);
}

bool ParseBool(std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  Fail(ErrorCode::kParse, "invalid boolean '" + std::string(v) + "'");
}

}  // namespace

std::string_view GeneratorName(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kAdversarial: return "adversarial";
    case GeneratorKind::kLomax: return "lomax";
    case GeneratorKind::kUniform: return "uniform";
  }
  return "?";
}

GeneratorKind ParseGenerator(std::string_view name) {
  if (name == "adversarial") return GeneratorKind::kAdversarial;
  if (name == "lomax") return GeneratorKind::kLomax;
  if (name == "uniform") return GeneratorKind::kUniform;
  Fail(ErrorCode::kInvalidArgument,
       "unknown generator '" + std::string(name) + "'");
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kDeepWalk: return "deepwalk";
    case Algorithm::kNode2Vec: return "node2vec";
    case Algorithm::kExact: return "exact";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "deepwalk") return Algorithm::kDeepWalk;
  if (name == "node2vec") return Algorithm::kNode2Vec;
  if (name == "exact") return Algorithm::kExact;
  Fail(ErrorCode::kInvalidArgument,
       "unknown algorithm '" + std::string(name) + "'");
}

std::string_view SweepName(SweepVariable sweep) {
  switch (sweep) {
    case SweepVariable::kLevel: return "t";
    case SweepVariable::kVertices: return "n";
    case SweepVariable::kAlpha: return "alpha";
    case SweepVariable::kWalksPerNode: return "walks_per_node";
    case SweepVariable::kWalkLength: return "walk_length";
    case SweepVariable::kDimensions: return "dimensions";
  }
  return "?";
}

SweepVariable ParseSweep(std::string_view name) {
  if (name == "t") return SweepVariable::kLevel;
  if (name == "n") return SweepVariable::kVertices;
  if (name == "alpha") return SweepVariable::kAlpha;
  if (name == "walks_per_node") return SweepVariable::kWalksPerNode;
  if (name == "walk_length") return SweepVariable::kWalkLength;
  if (name == "dimensions") return SweepVariable::kDimensions;
  Fail(ErrorCode::kInvalidArgument,
       "unknown sweep variable '" + std::string(name) + "'");
}

SweepVariable ExperimentSpec::Sweep() const {
  if (sweep) return *sweep;
  return generator == GeneratorKind::kAdversarial ? SweepVariable::kLevel
                                                  : SweepVariable::kVertices;
}

std::vector<double> ExperimentSpec::Grid() const {
  if (!grid.empty()) return grid;
  switch (Sweep()) {
    case SweepVariable::kLevel: return {static_cast<double>(t)};
    case SweepVariable::kVertices: return {static_cast<double>(n)};
    case SweepVariable::kAlpha: return {alpha};
    case SweepVariable::kWalksPerNode:
      return {static_cast<double>(embedding.walks_per_node)};
    case SweepVariable::kWalkLength:
      return {static_cast<double>(embedding.walk_length)};
    case SweepVariable::kDimensions:
      return {static_cast<double>(embedding.dimensions)};
  }
  return {};
}

ExperimentSpec ExperimentSpec::AtCell(double value) const {
  ExperimentSpec s = *this;
  const std::string name(SweepName(Sweep()));
  switch (Sweep()) {
    case SweepVariable::kLevel: s.t = AsInt(value, name); break;
    case SweepVariable::kVertices: s.n = AsInt(value, name); break;
    case SweepVariable::kAlpha: s.alpha = value; break;
    case SweepVariable::kWalksPerNode:
      s.embedding.walks_per_node = AsInt(value, name);
      break;
    case SweepVariable::kWalkLength:
      s.embedding.walk_length = AsInt(value, name);
      break;
    case SweepVariable::kDimensions:
      s.embedding.dimensions = AsInt(value, name);
      break;
  }
  return s;
}

std::string ExperimentSpec::GeneratorDescriptor() const {
  std::string d(GeneratorName(generator));
  switch (generator) {
    case GeneratorKind::kAdversarial:
      d += ":t=" + std::to_string(t) + ":eps=" + FormatDouble(epsilon);
      break;
    case GeneratorKind::kLomax:
      d += ":n=" + std::to_string(n) + ":alpha=" + FormatDouble(alpha) +
           ":scale=" + FormatDouble(scale);
      break;
    case GeneratorKind::kUniform:
      d += ":n=" + std::to_string(n);
      break;
  }
  if (bipartite && generator != GeneratorKind::kAdversarial) d += ":bipartite";
  return d;
}

void ExperimentSpec::Validate() const {
  Require(!id.empty() && id.find_first_of(",\"\n") == std::string::npos,
          "experiment id must be non-empty without commas or quotes");
  Require(trials >= 2, "trials must be >= 2 (a confidence interval needs df >= 1)");
  Require(!algorithms.empty(), "algorithm list is empty");
  Require(threads >= 1, "threads must be >= 1");
  const SweepVariable sv = Sweep();
  if (generator == GeneratorKind::kAdversarial) {
    Require(sv != SweepVariable::kVertices && sv != SweepVariable::kAlpha,
            "adversarial experiments sweep t, not n or alpha");
    Require(!bipartite, "adversarial instances are not bipartite");
  } else {
    Require(sv != SweepVariable::kLevel, "only adversarial experiments sweep t");
  }
  if (generator == GeneratorKind::kUniform) {
    Require(sv != SweepVariable::kAlpha, "uniform experiments have no alpha");
  }
  const bool pipelines = std::any_of(
      algorithms.begin(), algorithms.end(), [](Algorithm a) {
        return a == Algorithm::kDeepWalk || a == Algorithm::kNode2Vec;
      });
  Require(!(pipelines && bipartite &&
            matcher == SurrogateMatcher::kEuclideanGreedy),
          "the greedy surrogate matcher does not support bipartite graphs");
  for (double v : Grid()) {
    const ExperimentSpec c = AtCell(v);
    if (generator == GeneratorKind::kAdversarial) {
      Require(c.t >= 2 && c.t <= kMaxAdversarialLevel,
              "t must lie in [2, " + std::to_string(kMaxAdversarialLevel) + "]");
      Require(c.epsilon > 0.0 && c.epsilon < 0.01,
              "epsilon must lie in (0, 0.01)");
    } else {
      Require(c.n >= 2 && c.n % 2 == 0, "n must be even and >= 2");
    }
    if (generator == GeneratorKind::kLomax) {
      Require(c.alpha > 0.0 && std::isfinite(c.alpha), "alpha must be positive");
      Require(c.scale > 0.0 && std::isfinite(c.scale), "scale must be positive");
    }
    c.embedding.Validate();
  }
}

void ApplySetting(ExperimentSpec& spec, std::string_view key,
                  std::string_view value) {
  key = Trim(key);
  value = Trim(value);
  const std::string k(key);
  EmbeddingConfig& e = spec.embedding;
  if (k == "id") {
    spec.id = std::string(value);
  } else if (k == "generator") {
    spec.generator = ParseGenerator(value);
  } else if (k == "t") {
    spec.t = ParseInt(value, k);
  } else if (k == "epsilon") {
    spec.epsilon = ParseDouble(value, k);
  } else if (k == "alpha") {
    spec.alpha = ParseDouble(value, k);
  } else if (k == "scale") {
    spec.scale = ParseDouble(value, k);
  } else if (k == "n") {
    spec.n = ParseInt(value, k);
  } else if (k == "bipartite") {
    spec.bipartite = ParseBool(value);
  } else if (k == "objective") {
    spec.objective = ParseObjective(value);
  } else if (k == "algorithms") {
    spec.algorithms.clear();
    for (std::string_view a : SplitList(value)) {
      spec.algorithms.push_back(ParseAlgorithm(a));
    }
  } else if (k == "sweep") {
    const auto eq = value.find('=');
    spec.sweep = ParseSweep(Trim(value.substr(0, eq)));
    spec.grid.clear();
    if (eq != std::string_view::npos) {
      for (std::string_view v : SplitList(value.substr(eq + 1))) {
        spec.grid.push_back(ParseDouble(v, "sweep value"));
      }
      Require(!spec.grid.empty(), "sweep grid is empty");
    }
  } else if (k == "trials") {
    spec.trials = ParseInt(value, k);
  } else if (k == "seed") {
    spec.seed = ParseUint64(value, k);
  } else if (k == "surrogate_matcher") {
    spec.matcher = ParseSurrogateMatcher(value);
  } else if (k == "threads") {
    spec.threads = ParseInt(value, k);
  } else if (k == "dimensions") {
    e.dimensions = ParseInt(value, k);
  } else if (k == "walks_per_node") {
    e.walks_per_node = ParseInt(value, k);
  } else if (k == "walk_length") {
    e.walk_length = ParseInt(value, k);
  } else if (k == "window") {
    e.window = ParseInt(value, k);
  } else if (k == "negatives") {
    e.negatives = ParseInt(value, k);
  } else if (k == "epochs") {
    e.epochs = ParseInt(value, k);
  } else if (k == "learning_rate") {
    e.learning_rate = ParseDouble(value, k);
  } else if (k == "min_learning_rate") {
    e.min_learning_rate = ParseDouble(value, k);
  } else if (k == "p") {
    e.p = ParseDouble(value, k);
  } else if (k == "q") {
    e.q = ParseDouble(value, k);
  } else if (k == "similarity") {
    e.similarity = ParseSimilarity(value);
  } else if (k == "knn") {
    e.knn = ParseInt(value, k);
  } else {
    Fail(ErrorCode::kInvalidArgument, "unknown spec key '" + k + "'");
  }
}

ExperimentSpec ParseSpec(std::istream& in) {
  ExperimentSpec spec;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = Trim(StripComment(line));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    Require(eq != std::string_view::npos,
            "line " + std::to_string(line_no) + ": expected 'key = value'",
            ErrorCode::kParse);
    try {
      ApplySetting(spec, body.substr(0, eq), body.substr(eq + 1));
    } catch (const Error& err) {
      Fail(err.code(), "line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return spec;
}

ExperimentSpec ReadSpecFile(const std::string& path) {
  std::ifstream in(path);
  Require(in.good(), "cannot open spec file '" + path + "'", ErrorCode::kIo);
  return ParseSpec(in);
}

std::string WriteSpec(const ExperimentSpec& spec) {
  std::ostringstream o;
  const EmbeddingConfig& e = spec.embedding;
  o << "id = " << spec.id << '\n'
    << "generator = " << GeneratorName(spec.generator) << '\n'
    << "t = " << spec.t << '\n'
    << "epsilon = " << FormatDouble(spec.epsilon) << '\n'
    << "alpha = " << FormatDouble(spec.alpha) << '\n'
    << "scale = " << FormatDouble(spec.scale) << '\n'
    << "n = " << spec.n << '\n'
    << "bipartite = " << (spec.bipartite ? "true" : "false") << '\n'
    << "objective = " << ObjectiveName(spec.objective) << '\n'
    << "algorithms = ";
  for (std::size_t i = 0; i < spec.algorithms.size(); ++i) {
    o << (i ? "," : "") << AlgorithmName(spec.algorithms[i]);
  }
  o << '\n';
  if (spec.sweep) {
    o << "sweep = " << SweepName(*spec.sweep);
    if (!spec.grid.empty()) {
      o << '=';
      for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        o << (i ? "," : "") << FormatDouble(spec.grid[i]);
      }
    }
    o << '\n';
  }
  o << "trials = " << spec.trials << '\n'
    << "seed = " << spec.seed << '\n'
    << "surrogate_matcher = " << SurrogateMatcherName(spec.matcher) << '\n'
    << "threads = " << spec.threads << '\n'
    << "dimensions = " << e.dimensions << '\n'
    << "walks_per_node = " << e.walks_per_node << '\n'
    << "walk_length = " << e.walk_length << '\n'
    << "window = " << e.window << '\n'
    << "negatives = " << e.negatives << '\n'
    << "epochs = " << e.epochs << '\n'
    << "learning_rate = " << FormatDouble(e.learning_rate) << '\n'
    << "min_learning_rate = " << FormatDouble(e.min_learning_rate) << '\n'
    << "p = " << FormatDouble(e.p) << '\n'
    << "q = " << FormatDouble(e.q) << '\n'
    << "similarity = " << SimilarityName(e.similarity) << '\n'
    << "knn = " << e.knn << '\n';
  return o.str();
}

std::uint64_t TrialSeed(std::uint64_t master, int cell, int trial) {
  return DeriveSeed(master, {static_cast<std::uint64_t>(cell),
                             static_cast<std::uint64_t>(trial)});
}

namespace {

DenseGraph MakeInstance(const ExperimentSpec& c, std::uint64_t seed) {
  switch (c.generator) {
    case GeneratorKind::kAdversarial:
      return GenerateAdversarial(c.t, c.epsilon).graph;
    case GeneratorKind::kLomax:
      return GenerateLomax({c.alpha, c.scale, c.n, c.bipartite}, seed);
    case GeneratorKind::kUniform:
      return GenerateUniform(c.n, seed, c.bipartite);
  }
  Fail(ErrorCode::kRuntime, "unknown generator");
}

void Fill(TrialRecord& r, double value, double optimum) {
  r.value = value;
  r.optimum = optimum;
  r.difference = value - optimum;
  if (optimum > 0.0) {
    r.ratio = value / optimum;
    r.degenerate = false;
  } else {
    r.ratio = kNan;
    r.degenerate = true;
  }
}

void MarkFailed(TrialRecord& r, const std::string& message) {
  r.ok = false;
  r.error = message;
  r.value = r.optimum = r.ratio = r.difference = kNan;
  r.degenerate = false;
  r.uses_sentinel = false;
}

// Fills one record per algorithm for (cell, trial).
void RunTrial(const ExperimentSpec& base, const ExperimentSpec& cell_spec,
              double sweep_value, int cell, int trial, TrialRecord* out) {
  const std::uint64_t seed = TrialSeed(base.seed, cell, trial);
  const std::size_t count = base.algorithms.size();
  for (std::size_t a = 0; a < count; ++a) {
    TrialRecord& r = out[a];
    r.experiment = base.id;
    r.generator = base.GeneratorDescriptor();
    r.sweep_variable = std::string(SweepName(base.Sweep()));
    r.sweep_value = sweep_value;
    r.objective = base.objective;
    r.algorithm = base.algorithms[a];
    r.trial = trial;
    r.seed = seed;
  }

  DenseGraph graph;
  SolverReport opt;
  try {
    graph = MakeInstance(cell_spec, seed);
    opt = SolveExact(graph, base.objective);
  } catch (const std::exception& e) {
    for (std::size_t a = 0; a < count; ++a) {
      MarkFailed(out[a], std::string("optimum: ") + e.what());
    }
    return;
  }

  // Both pipelines share one seed so their SGNS runs start from the same
  // initial vectors.
  const std::uint64_t pipeline_seed = DeriveSeed(seed, {100});
  for (std::size_t a = 0; a < count; ++a) {
    TrialRecord& r = out[a];
    try {
      switch (r.algorithm) {
        case Algorithm::kExact:
          Fill(r, opt.value, opt.value);
          r.uses_sentinel = opt.uses_sentinel;
          r.solve_ms = r.total_ms = Millis(opt.wall_time);
          break;
        case Algorithm::kGreedy: {
          const SolverReport g = GreedyMatch(graph, base.objective);
          Fill(r, g.value, opt.value);
          r.uses_sentinel = g.uses_sentinel;
          r.solve_ms = r.total_ms = Millis(g.wall_time);
          break;
        }
        case Algorithm::kDeepWalk:
        case Algorithm::kNode2Vec: {
          EmbeddingConfig config = cell_spec.embedding;
          config.method = r.algorithm == Algorithm::kDeepWalk
                              ? WalkMethod::kDeepWalk
                              : WalkMethod::kNode2Vec;
          config.walk_threads = 1;
          const PipelineReport p = ApproxMatch(graph, base.objective, config,
                                               base.matcher, pipeline_seed);
          Fill(r, p.result.value, opt.value);
          r.uses_sentinel = p.result.uses_sentinel;
          r.embed_ms = Millis(p.embed_time);
          r.solve_ms = Millis(p.solve_time);
          r.total_ms = Millis(p.result.wall_time);
          break;
        }
      }
    } catch (const std::exception& e) {
      MarkFailed(r, e.what());
    }
  }
}

}  // namespace

std::vector<TrialRecord> RunExperiment(const ExperimentSpec& spec) {
  spec.Validate();
  const std::vector<double> grid = spec.Grid();
  std::vector<ExperimentSpec> cells;
  for (double v : grid) cells.push_back(spec.AtCell(v));
  const std::size_t per_trial = spec.algorithms.size();
  const std::size_t tasks = grid.size() * static_cast<std::size_t>(spec.trials);
  std::vector<TrialRecord> records(tasks * per_trial);

  // Records land in (cell, trial, algorithm) slots, so output order does not
  // depend on which worker ran which task.
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t k = next++; k < tasks; k = next++) {
      const int cell = static_cast<int>(k / spec.trials);
      const int trial = static_cast<int>(k % spec.trials);
      RunTrial(spec, cells[cell], grid[cell], cell, trial,
               records.data() + k * per_trial);
    }
  };
  const int workers =
      static_cast<int>(std::min<std::size_t>(spec.threads, tasks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return records;
}

std::vector<CellSummary> Summarize(const std::vector<TrialRecord>& records) {
  std::vector<CellSummary> cells;
  std::vector<std::vector<const TrialRecord*>> members;
  for (const TrialRecord& r : records) {
    auto it = std::find_if(cells.begin(), cells.end(), [&](const CellSummary& c) {
      return c.experiment == r.experiment && c.sweep_value == r.sweep_value &&
             c.algorithm == r.algorithm && c.objective == r.objective;
    });
    if (it == cells.end()) {
      CellSummary c;
      c.experiment = r.experiment;
      c.sweep_variable = r.sweep_variable;
      c.sweep_value = r.sweep_value;
      c.objective = r.objective;
      c.algorithm = r.algorithm;
      cells.push_back(c);
      members.emplace_back();
      it = cells.end() - 1;
    }
    members[it - cells.begin()].push_back(&r);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CellSummary& c = cells[i];
    c.records = static_cast<int>(members[i].size());
    Require(c.records >= 2,
            "cell " + c.sweep_variable + "=" + FormatDouble(c.sweep_value) +
                " / " + std::string(AlgorithmName(c.algorithm)) +
                " has a single record; a confidence interval needs two");
    bool degenerate = false;
    for (const TrialRecord* r : members[i]) {
      if (r->ok) {
        ++c.ok;
        degenerate = degenerate || r->degenerate;
      }
    }
    c.metric = degenerate ? "difference" : "ratio";
    if (c.ok < 2) {
      c.failed = true;
      c.mean = c.stddev = c.half_width = kNan;
      continue;
    }
    std::vector<double> xs;
    for (const TrialRecord* r : members[i]) {
      if (r->ok) xs.push_back(degenerate ? r->difference : r->ratio);
    }
    const MeanInterval m = MeanConfidence95(xs);
    c.mean = m.mean;
    c.stddev = m.stddev;
    c.half_width = m.half_width;
  }
  return cells;
}

}  // namespace matchembed
