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

// Embedding-based matching heuristic: embed the vertices, match on the
// Euclidean surrogate weights, then value the matching on the original ones.

#ifndef MATCHEMBED_PIPELINE_HPP_
#define MATCHEMBED_PIPELINE_HPP_

#include <chrono>
#include <cstdint>
#include <string_view>

#include "embedding.hpp"
#include "graph.hpp"
#include "points.hpp"
#include "solver_report.hpp"

namespace matchembed {

enum class SurrogateMatcher { kExact, kEuclideanGreedy };

std::string_view SurrogateMatcherName(SurrogateMatcher matcher);
SurrogateMatcher ParseSurrogateMatcher(std::string_view name);

struct SurrogateGraph {
  PointSet points;
  DenseGraph graph;  // w'(i, j) = |f(i) - f(j)|
};

SurrogateGraph BuildSurrogate(const PointSet& points, bool bipartite);

struct PipelineReport {
  // Matching found on the surrogate, valued on the ORIGINAL weights.
  SolverReport result;
  double surrogate_value = 0.0;
  double embedding_loss = 0.0;
  bool walk_graph_connected = true;
  std::chrono::nanoseconds embed_time{0};
  std::chrono::nanoseconds solve_time{0};
};

// `injected`, when given, replaces the trained embedding (test hook).
PipelineReport ApproxMatch(const DenseGraph& graph, Objective objective,
                           const EmbeddingConfig& config,
                           SurrogateMatcher matcher, std::uint64_t seed,
                           const PointSet* injected = nullptr);

}  // namespace matchembed

#endif  // MATCHEMBED_PIPELINE_HPP_
