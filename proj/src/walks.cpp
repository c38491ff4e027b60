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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <thread>
#include <unordered_map>

#include "embedding.hpp"
#include "error.hpp"
#include "rng.hpp"

namespace matchembed {

std::string_view WalkMethodName(WalkMethod method) {
  return method == WalkMethod::kDeepWalk ? "deepwalk" : "node2vec";
}

WalkMethod ParseWalkMethod(std::string_view name) {
  if (name == "deepwalk") return WalkMethod::kDeepWalk;
  if (name == "node2vec") return WalkMethod::kNode2Vec;
  Fail(ErrorCode::kInvalidArgument,
       "unknown walk method '" + std::string(name) + "'");
}

std::string_view SimilarityName(Similarity similarity) {
  switch (similarity) {
    case Similarity::kInverse: return "inverse";
    case Similarity::kExpDecay: return "exp_decay";
    case Similarity::kUniform: return "uniform";
  }
  return "?";
}

Similarity ParseSimilarity(std::string_view name) {
  if (name == "inverse") return Similarity::kInverse;
  if (name == "exp_decay") return Similarity::kExpDecay;
  if (name == "uniform") return Similarity::kUniform;
  Fail(ErrorCode::kInvalidArgument,
       "unknown similarity '" + std::string(name) + "'");
}

void EmbeddingConfig::Validate() const {
  Require(dimensions >= 1, "dimensions must be >= 1");
  Require(walks_per_node >= 1, "walks_per_node must be >= 1");
  Require(walk_length >= 1, "walk_length must be >= 1");
  Require(window >= 1, "window must be >= 1");
  Require(negatives >= 1, "negatives must be >= 1");
  Require(epochs >= 1, "epochs must be >= 1");
  Require(learning_rate > 0.0 && std::isfinite(learning_rate),
          "learning_rate must be positive");
  Require(min_learning_rate >= 0.0 && min_learning_rate <= learning_rate,
          "min_learning_rate must lie in [0, learning_rate]");
  Require(p > 0.0 && std::isfinite(p), "p must be positive");
  Require(q > 0.0 && std::isfinite(q), "q must be positive");
  Require(knn >= 1, "knn must be >= 1");
  Require(walk_threads >= 1, "walk_threads must be >= 1");
}

bool WalkGraph::Adjacent(int a, int b) const {
  const auto& arcs = adjacency[a];
  auto it = std::lower_bound(arcs.begin(), arcs.end(), b,
                             [](const Arc& arc, int t) { return arc.to < t; });
  return it != arcs.end() && it->to == b;
}

double WalkGraph::Probability(int from, int to) const {
  const auto& arcs = adjacency[from];
  auto it = std::lower_bound(arcs.begin(), arcs.end(), to,
                             [](const Arc& arc, int t) { return arc.to < t; });
  return it != arcs.end() && it->to == to ? it->probability : 0.0;
}

WalkGraph BuildWalkGraph(const DenseGraph& graph,
                         const EmbeddingConfig& config) {
  config.Validate();
  const int n = graph.size();
  const int k = std::min(config.knn, n - 1);

  // Keep each vertex's k lightest genuine edges, then symmetrise.
  std::vector<std::vector<char>> keep(n, std::vector<char>(n, 0));
  std::vector<std::pair<double, int>> incident;
  for (int v = 0; v < n; ++v) {
    incident.clear();
    for (int u = 0; u < n; ++u) {
      if (graph.admissible(v, u) && !graph.is_sentinel(v, u)) {
        incident.push_back({graph.weight(v, u), u});
      }
    }
    const std::size_t take = std::min<std::size_t>(k, incident.size());
    std::partial_sort(incident.begin(), incident.begin() + take,
                      incident.end());
    for (std::size_t t = 0; t < take; ++t) {
      keep[v][incident[t].second] = 1;
      keep[incident[t].second][v] = 1;
    }
  }

  double mean = 0.0;
  std::size_t kept = 0;
  for (int v = 0; v < n; ++v) {
    for (int u = v + 1; u < n; ++u) {
      if (keep[v][u]) {
        mean += graph.weight(v, u);
        ++kept;
      }
    }
  }
  if (kept > 0) mean /= static_cast<double>(kept);

  auto similarity = [&](double w) {
    switch (config.similarity) {
      case Similarity::kInverse: return 1.0 / (w + 1e-12);
      case Similarity::kExpDecay: return mean > 0.0 ? std::exp(-w / mean) : 1.0;
      case Similarity::kUniform: return 1.0;
    }
    return 1.0;
  };

  WalkGraph wg;
  wg.adjacency.resize(n);
  wg.first_order.resize(n);
  std::vector<double> weights;
  for (int v = 0; v < n; ++v) {
    weights.clear();
    double total = 0.0;
    for (int u = 0; u < n; ++u) {
      if (!keep[v][u]) continue;
      const double s = similarity(graph.weight(v, u));
      wg.adjacency[v].push_back({u, s});
      weights.push_back(s);
      total += s;
    }
    for (auto& arc : wg.adjacency[v]) arc.probability /= total;
    if (!weights.empty()) wg.first_order[v] = AliasTable(weights);
  }

  // Connectivity, for the caller's warning.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& arc : wg.adjacency[v]) {
      if (!seen[arc.to]) {
        seen[arc.to] = 1;
        ++reached;
        stack.push_back(arc.to);
      }
    }
  }
  wg.connected = reached == n;
  return wg;
}

namespace {

class Walker {
 public:
  Walker(const WalkGraph& wg, const EmbeddingConfig& config)
      : wg_(wg), config_(config) {}

  void Walk(int start, std::uint64_t key, std::span<int> out) {
    CounterRng rng(key);
    out[0] = start;
    for (std::size_t step = 1; step < out.size(); ++step) {
      const int cur = out[step - 1];
      const auto& arcs = wg_.adjacency[cur];
      if (arcs.empty()) {
        out[step] = cur;
        continue;
      }
      if (config_.method == WalkMethod::kDeepWalk || step == 1) {
        out[step] = arcs[wg_.first_order[cur].Sample(rng)].to;
      } else {
        const int prev = out[step - 2];
        out[step] = arcs[EdgeTable(prev, cur).Sample(rng)].to;
      }
    }
  }

 private:
  // node2vec bias for stepping cur -> x after arriving from prev.
  const AliasTable& EdgeTable(int prev, int cur) {
    const std::uint64_t key =
        static_cast<std::uint64_t>(prev) * wg_.size() + cur;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<double> weights;
    weights.reserve(wg_.adjacency[cur].size());
    for (const auto& arc : wg_.adjacency[cur]) {
      double beta = 1.0 / config_.q;
      if (arc.to == prev) {
        beta = 1.0 / config_.p;
      } else if (wg_.Adjacent(prev, arc.to)) {
        beta = 1.0;
      }
      weights.push_back(arc.probability * beta);
    }
    return memo_.emplace(key, AliasTable(weights)).first->second;
  }

  const WalkGraph& wg_;
  const EmbeddingConfig& config_;
  std::unordered_map<std::uint64_t, AliasTable> memo_;
};

}  // namespace

WalkCorpus GenerateWalks(const WalkGraph& walk_graph,
                         const EmbeddingConfig& config, std::uint64_t seed) {
  config.Validate();
  const int n = walk_graph.size();
  WalkCorpus corpus;
  corpus.vertex_count = n;
  corpus.walk_length = config.walk_length;
  const std::size_t len = static_cast<std::size_t>(config.walk_length);
  corpus.tokens.resize(static_cast<std::size_t>(config.walks_per_node) * n *
                       len);

  // Each walk's stream is keyed by (start vertex, walk index) and written to
  // its canonical slot, so the corpus is independent of the worker split.
  auto work = [&](int worker, int workers) {
    Walker walker(walk_graph, config);
    for (int start = worker; start < n; start += workers) {
      for (int r = 0; r < config.walks_per_node; ++r) {
        const std::size_t w = static_cast<std::size_t>(r) * n + start;
        walker.Walk(start,
                    DeriveSeed(seed, {static_cast<std::uint64_t>(start),
                                      static_cast<std::uint64_t>(r)}),
                    std::span<int>(corpus.tokens.data() + w * len, len));
      }
    }
  };
  const int workers = std::max(1, std::min(config.walk_threads, n));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
    for (auto& th : pool) th.join();
  }
  return corpus;
}

}  // namespace matchembed
