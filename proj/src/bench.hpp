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

// Seeded benchmark experiments: instances from one generator, a sweep over
// one parameter, several algorithms per trial, each valued against the exact
// optimum of the same instance.

#ifndef MATCHEMBED_BENCH_HPP_
#define MATCHEMBED_BENCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"
#include "pipeline.hpp"

namespace matchembed {

enum class GeneratorKind { kAdversarial, kLomax, kUniform };
enum class Algorithm { kGreedy, kDeepWalk, kNode2Vec, kExact };
enum class SweepVariable {
  kLevel,     // t, adversarial only
  kVertices,  // n, lomax and uniform
  kAlpha,
  kWalksPerNode,
  kWalkLength,
  kDimensions
};

std::string_view GeneratorName(GeneratorKind kind);
GeneratorKind ParseGenerator(std::string_view name);
std::string_view AlgorithmName(Algorithm algorithm);
Algorithm ParseAlgorithm(std::string_view name);
std::string_view SweepName(SweepVariable sweep);
SweepVariable ParseSweep(std::string_view name);

struct ExperimentSpec {
  std::string id = "experiment";
  GeneratorKind generator = GeneratorKind::kAdversarial;
  int t = 5;
  double epsilon = 1e-6;
  double alpha = 2.0;
  double scale = 1.0;
  int n = 100;
  bool bipartite = false;
  Objective objective = Objective::kMcm;
  std::vector<Algorithm> algorithms = {Algorithm::kGreedy,
                                       Algorithm::kDeepWalk,
                                       Algorithm::kNode2Vec};
  // Unset means the size variable of the generator (t or n).
  std::optional<SweepVariable> sweep;
  // Empty means a single cell at the base value of the sweep variable.
  std::vector<double> grid;
  int trials = 5;
  std::uint64_t seed = 1;
  SurrogateMatcher matcher = SurrogateMatcher::kExact;
  EmbeddingConfig embedding;
  // Worker threads for trials; never changes the records.
  int threads = 1;

  void Validate() const;
  SweepVariable Sweep() const;
  std::vector<double> Grid() const;
  // The spec with the sweep variable set to `value`.
  ExperimentSpec AtCell(double value) const;
  std::string GeneratorDescriptor() const;
};

// Sets one field from its text form; keys are the spec-file keys, e.g.
// "alpha", "algorithms" (comma list), "sweep" ("alpha=2,3,5").
void ApplySetting(ExperimentSpec& spec, std::string_view key,
                  std::string_view value);

// Flat "key = value" lines, '#' comments.
ExperimentSpec ParseSpec(std::istream& in);
ExperimentSpec ReadSpecFile(const std::string& path);
// Canonical text form; ParseSpec(WriteSpec(s)) reproduces s.
std::string WriteSpec(const ExperimentSpec& spec);

struct TrialRecord {
  std::string experiment;
  std::string generator;  // descriptor of the base instance family
  std::string sweep_variable;
  double sweep_value = 0.0;
  Objective objective = Objective::kMcm;
  Algorithm algorithm = Algorithm::kGreedy;
  int trial = 0;
  std::uint64_t seed = 0;
  bool ok = true;
  std::string error;
  double value = 0.0;
  double optimum = 0.0;
  // value / optimum when optimum > 0, else NaN with `degenerate` set and
  // `difference` (value - optimum) as the comparable quantity.
  double ratio = 0.0;
  double difference = 0.0;
  bool degenerate = false;
  bool uses_sentinel = false;
  // Wall-clock milliseconds; never part of the reproducible CSV.
  double embed_ms = 0.0;
  double solve_ms = 0.0;
  double total_ms = 0.0;
};

// Trial seed for (cell, trial).
std::uint64_t TrialSeed(std::uint64_t master, int cell, int trial);

std::vector<TrialRecord> RunExperiment(const ExperimentSpec& spec);

struct CellSummary {
  std::string experiment;
  std::string sweep_variable;
  double sweep_value = 0.0;
  Objective objective = Objective::kMcm;
  Algorithm algorithm = Algorithm::kGreedy;
  std::string metric;  // "ratio" or "difference"
  int records = 0;
  int ok = 0;
  bool failed = false;  // fewer than two successful trials
  double mean = 0.0;
  double stddev = 0.0;
  double half_width = 0.0;
};

// One summary per (sweep value, algorithm) in first-appearance order.
// A cell with a single record is an error.
std::vector<CellSummary> Summarize(const std::vector<TrialRecord>& records);

// trials.csv: reproducible columns; timings.csv: wall times keyed by
// (sweep value, algorithm, trial).
void WriteTrialsCsv(std::ostream& out, const std::vector<TrialRecord>& r);
void WriteTimingsCsv(std::ostream& out, const std::vector<TrialRecord>& r);
void WriteSummaryCsv(std::ostream& out, const std::vector<CellSummary>& s);
// Reads trials.csv and, when given, merges wall times from timings.csv.
std::vector<TrialRecord> ReadTrialsCsv(std::istream& trials,
                                       std::istream* timings = nullptr);
// Line plot of mean ratio (or difference) per algorithm with CI whiskers.
void WriteSummarySvg(std::ostream& out, const std::vector<CellSummary>& s);

}  // namespace matchembed

#endif  // MATCHEMBED_BENCH_HPP_
