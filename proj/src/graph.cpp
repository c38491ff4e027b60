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

#include "graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "error.hpp"
#include "text_util.hpp"

namespace matchembed {

std::string_view ObjectiveName(Objective objective) {
  switch (objective) {
    case Objective::kMcm: return "mcm";
    case Objective::kBm: return "bm";
    case Objective::kUm: return "um";
    case Objective::kMdm: return "mdm";
  }
  return "?";
}

Objective ParseObjective(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "mcm") return Objective::kMcm;
  if (lower == "bm") return Objective::kBm;
  if (lower == "um") return Objective::kUm;
  if (lower == "mdm") return Objective::kMdm;
  Fail(ErrorCode::kInvalidArgument, "unknown objective '" + lower + "'");
}

namespace {

void CheckWeight(double w) {
  Require(std::isfinite(w), "edge weight must be finite");
  Require(w >= 0.0, "edge weight must be non-negative");
}

void CheckVertexCount(int n) {
  Require(n > 0, "vertex count must be positive");
  Require(n % 2 == 0, "odd vertex count");
}

}  // namespace

DenseGraph DenseGraph::FromMatrix(int n, std::vector<double> weights,
                                  bool bipartite) {
  CheckVertexCount(n);
  Require(weights.size() == static_cast<std::size_t>(n) * n,
          "weight matrix must be n x n");
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = weights[static_cast<std::size_t>(i) * n + j];
      Require(w == weights[static_cast<std::size_t>(j) * n + i],
              "weight matrix must be symmetric");
      if (bipartite && (i < n / 2) == (j < n / 2)) continue;
      edges.push_back({i, j, w});
    }
  }
  return CompleteWithSentinels(n, edges, bipartite);
}

DenseGraph DenseGraph::CompleteWithSentinels(
    int n, std::span<const WeightedEdge> edges, bool bipartite) {
  CheckVertexCount(n);
  DenseGraph g;
  g.n_ = n;
  g.bipartite_ = bipartite;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  g.weights_.assign(cells, 0.0);
  g.sentinel_.assign(cells, 1);
  std::vector<std::uint8_t> seen(cells, 0);

  for (const WeightedEdge& e : edges) {
    Require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n,
            "edge endpoint out of range", ErrorCode::kOutOfRange);
    Require(e.u != e.v, "self-loop edges are not allowed");
    CheckWeight(e.weight);
    if (bipartite) {
      Require((e.u < n / 2) != (e.v < n / 2),
              "bipartite graph edge inside one partition");
    }
    const std::size_t a = static_cast<std::size_t>(e.u) * n + e.v;
    const std::size_t b = static_cast<std::size_t>(e.v) * n + e.u;
    if (seen[a]) {
      Require(g.weights_[a] == e.weight,
              "contradictory duplicate edge (" + std::to_string(e.u) + ", " +
                  std::to_string(e.v) + ")");
      continue;
    }
    seen[a] = seen[b] = 1;
    g.weights_[a] = g.weights_[b] = e.weight;
    g.sentinel_[a] = g.sentinel_[b] = 0;
    g.max_genuine_ = std::max(g.max_genuine_, e.weight);
  }

  const double base = g.max_genuine_ > 0.0 ? g.max_genuine_ : 1.0;
  g.sentinel_value_ = 10.0 * n * base;
  for (int i = 0; i < n; ++i) {
    g.sentinel_[static_cast<std::size_t>(i) * n + i] = 0;
    for (int j = i + 1; j < n; ++j) {
      const std::size_t a = static_cast<std::size_t>(i) * n + j;
      if (!g.sentinel_[a]) continue;
      const std::size_t b = static_cast<std::size_t>(j) * n + i;
      g.weights_[a] = g.weights_[b] = g.sentinel_value_;
      ++g.sentinel_count_;
    }
  }
  return g;
}

std::vector<WeightedEdge> DenseGraph::GenuineEdges() const {
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!is_sentinel(i, j)) edges.push_back({i, j, weight(i, j)});
    }
  }
  return edges;
}

DenseGraph DenseGraph::Permuted(std::span<const int> perm) const {
  Require(perm.size() == static_cast<std::size_t>(n_),
          "permutation size mismatch");
  DenseGraph g = *this;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const std::size_t dst = static_cast<std::size_t>(perm[i]) * n_ + perm[j];
      const std::size_t src = static_cast<std::size_t>(i) * n_ + j;
      g.weights_[dst] = weights_[src];
      g.sentinel_[dst] = sentinel_[src];
    }
  }
  return g;
}

Matching::Matching(int n, std::vector<VertexPair> pairs) : n_(n) {
  Require(n >= 0, "negative vertex count");
  std::vector<std::uint8_t> used(static_cast<std::size_t>(n), 0);
  for (VertexPair& p : pairs) {
    Require(p.u >= 0 && p.u < n && p.v >= 0 && p.v < n,
            "matching vertex index out of range", ErrorCode::kOutOfRange);
    Require(p.u != p.v, "matching pairs a vertex with itself");
    if (p.u > p.v) std::swap(p.u, p.v);
    Require(!used[p.u] && !used[p.v], "vertex appears in two matching pairs");
    used[p.u] = used[p.v] = 1;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

Matching Matching::FromMates(std::span<const int> mate) {
  const int n = static_cast<int>(mate.size());
  std::vector<VertexPair> pairs;
  for (int i = 0; i < n; ++i) {
    const int j = mate[i];
    if (j < 0) continue;
    Require(j < n && mate[j] == i, "inconsistent mate array");
    if (i < j) pairs.push_back({i, j});
  }
  return Matching(n, std::move(pairs));
}

std::vector<int> Matching::Mates() const {
  std::vector<int> mate(static_cast<std::size_t>(n_), -1);
  for (const VertexPair& p : pairs_) {
    mate[p.u] = p.v;
    mate[p.v] = p.u;
  }
  return mate;
}

double EvaluateWeights(std::span<const double> pair_weights, int n,
                       Objective objective) {
  Require(n > 0 && 2 * pair_weights.size() == static_cast<std::size_t>(n),
          "incomplete matching");
  double sum = 0.0;
  double max = pair_weights[0];
  double min = pair_weights[0];
  for (double w : pair_weights) {
    sum += w;
    max = std::max(max, w);
    min = std::min(min, w);
  }
  switch (objective) {
    case Objective::kMcm: return sum;
    case Objective::kBm: return max;
    case Objective::kUm: return max - min;
    case Objective::kMdm: return sum / n - min;
  }
  return sum;
}

double Evaluate(const DenseGraph& graph, const Matching& matching,
                Objective objective) {
  Require(matching.vertex_count() == graph.size(),
          "matching refers to a different vertex count",
          ErrorCode::kOutOfRange);
  Require(matching.is_perfect(), "incomplete matching");
  std::vector<double> weights;
  weights.reserve(matching.size());
  for (const VertexPair& p : matching.pairs()) {
    weights.push_back(graph.weight(p.u, p.v));
  }
  return EvaluateWeights(weights, graph.size(), objective);
}

bool UsesSentinel(const DenseGraph& graph, const Matching& matching) {
  return std::any_of(
      matching.pairs().begin(), matching.pairs().end(),
      [&](const VertexPair& p) { return graph.is_sentinel(p.u, p.v); });
}

DenseGraph ReadGraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  bool bipartite = false;
  std::vector<WeightedEdge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string_view> tokens = Tokenize(StripComment(line));
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (n < 0) {
      Require(tokens[0] == "n" && (tokens.size() == 2 || tokens.size() == 3),
              where + "expected header 'n <count> [bipartite]'",
              ErrorCode::kParse);
      n = ParseInt(tokens[1], where + "vertex count");
      if (tokens.size() == 3) {
        Require(tokens[2] == "bipartite",
                where + "unknown header flag '" + std::string(tokens[2]) + "'",
                ErrorCode::kParse);
        bipartite = true;
      }
      continue;
    }
    Require(tokens.size() == 3, where + "expected 'i j w'", ErrorCode::kParse);
    WeightedEdge e;
    e.u = ParseInt(tokens[0], where + "vertex index");
    e.v = ParseInt(tokens[1], where + "vertex index");
    e.weight = ParseDouble(tokens[2], where + "weight");
    edges.push_back(e);
  }
  Require(n >= 0, "missing graph header", ErrorCode::kParse);
  return DenseGraph::CompleteWithSentinels(n, edges, bipartite);
}

DenseGraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  Require(in.good(), "cannot open graph file '" + path + "'", ErrorCode::kIo);
  return ReadGraph(in);
}

void WriteGraph(std::ostream& out, const DenseGraph& graph) {
  out << "n " << graph.size();
  if (graph.bipartite()) out << " bipartite";
  out << '\n';
  for (const WeightedEdge& e : graph.GenuineEdges()) {
    out << e.u << ' ' << e.v << ' ' << FormatDouble(e.weight) << '\n';
  }
}

void WriteGraphFile(const std::string& path, const DenseGraph& graph) {
  std::ofstream out(path);
  Require(out.good(), "cannot write graph file '" + path + "'",
          ErrorCode::kIo);
  WriteGraph(out, graph);
  Require(out.good(), "failed writing graph file '" + path + "'",
          ErrorCode::kIo);
}

}  // namespace matchembed
