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

#include "pipeline.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"
#include "exact.hpp"
#include "greedy.hpp"

namespace matchembed {

std::string_view SurrogateMatcherName(SurrogateMatcher matcher) {
  return matcher == SurrogateMatcher::kExact ? "exact" : "greedy";
}

SurrogateMatcher ParseSurrogateMatcher(std::string_view name) {
  if (name == "exact") return SurrogateMatcher::kExact;
  if (name == "greedy") return SurrogateMatcher::kEuclideanGreedy;
  Fail(ErrorCode::kInvalidArgument,
       "unknown surrogate matcher '" + std::string(name) + "'");
}

SurrogateGraph BuildSurrogate(const PointSet& points, bool bipartite) {
  for (double c : points.coords) {
    Require(std::isfinite(c), "embedding has non-finite entries");
  }
  const int n = points.count;
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = Distance(points[i], points[j]);
      w[static_cast<std::size_t>(i) * n + j] = d;
      w[static_cast<std::size_t>(j) * n + i] = d;
    }
  }
  SurrogateGraph s;
  s.points = points;
  s.graph = DenseGraph::FromMatrix(n, std::move(w), bipartite);
  return s;
}

PipelineReport ApproxMatch(const DenseGraph& graph, Objective objective,
                           const EmbeddingConfig& config,
                           SurrogateMatcher matcher, std::uint64_t seed,
                           const PointSet* injected) {
  Require(graph.size() % 2 == 0, "odd vertex count");
  PipelineReport report;
  Stopwatch total;

  Stopwatch embed_watch;
  PointSet points;
  if (injected != nullptr) {
    Require(injected->count == graph.size(),
            "injected embedding has the wrong vertex count");
    points = *injected;
  } else {
    Embedding e = EmbedGraph(graph, config, seed);
    report.embedding_loss = e.final_loss;
    report.walk_graph_connected = e.walk_graph_connected;
    points = std::move(e.vectors);
  }
  report.embed_time = embed_watch.Elapsed();

  Stopwatch solve_watch;
  Matching matching;
  if (matcher == SurrogateMatcher::kExact) {
    const SurrogateGraph surrogate = BuildSurrogate(points, graph.bipartite());
    SolverReport s = SolveExact(surrogate.graph, objective);
    report.surrogate_value = s.value;
    report.result.iterations = s.iterations;
    matching = std::move(s.matching);
  } else {
    Require(!graph.bipartite(),
            "the Euclidean greedy matcher does not respect a bipartition");
    matching = EuclideanGreedyMatch(points);
    std::vector<double> weights;
    for (const VertexPair& p : matching.pairs()) {
      weights.push_back(Distance(points[p.u], points[p.v]));
    }
    report.surrogate_value = EvaluateWeights(weights, points.count, objective);
  }
  report.solve_time = solve_watch.Elapsed();

  report.result.value = Evaluate(graph, matching, objective);
  report.result.uses_sentinel = UsesSentinel(graph, matching);
  report.result.matching = std::move(matching);
  report.result.wall_time = total.Elapsed();
  return report;
}

}  // namespace matchembed
