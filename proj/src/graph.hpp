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

// Dense weighted graphs, perfect matchings and the four matching objectives.
//
// A DenseGraph is always complete: edges that were not supplied by the caller
// are "sentinel" edges carrying a large finite weight, so every solver sees a
// graph that has a perfect matching. For bipartite graphs the left side is
// vertices [0, n/2) and the right side is [n/2, n); only cross edges can be
// genuine.

#ifndef MATCHEMBED_GRAPH_HPP_
#define MATCHEMBED_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace matchembed {

enum class Objective { kMcm, kBm, kUm, kMdm };

std::string_view ObjectiveName(Objective objective);
// Accepts "mcm", "bm", "um", "mdm" (case-insensitive).
Objective ParseObjective(std::string_view name);

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

class DenseGraph {
 public:
  DenseGraph() = default;

  // Every pair (i, j), i != j, of `weights` (row-major n x n) is a genuine
  // edge, except within-partition pairs of a bipartite graph, which become
  // sentinels. The matrix must be symmetric, finite and non-negative.
  static DenseGraph FromMatrix(int n, std::vector<double> weights,
                               bool bipartite = false);

  // Listed edges are genuine; every missing pair gets the sentinel weight.
  // Repeating an edge with the same weight is allowed, with a different
  // weight it is an error.
  static DenseGraph CompleteWithSentinels(int n,
                                          std::span<const WeightedEdge> edges,
                                          bool bipartite = false);

  int size() const { return n_; }
  bool bipartite() const { return bipartite_; }
  int half() const { return n_ / 2; }

  double weight(int i, int j) const {
    return weights_[static_cast<std::size_t>(i) * n_ + j];
  }
  bool is_sentinel(int i, int j) const {
    return sentinel_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }
  // True when (i, j) may appear in a matching of this graph kind.
  bool admissible(int i, int j) const {
    return i != j && (!bipartite_ || ((i < half()) != (j < half())));
  }

  std::span<const double> row(int i) const {
    return {weights_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }

  bool has_sentinels() const { return sentinel_count_ > 0; }
  std::size_t sentinel_count() const { return sentinel_count_; }
  double sentinel_value() const { return sentinel_value_; }
  double max_genuine_weight() const { return max_genuine_; }

  // Genuine (non-sentinel) admissible edges with u < v, in (u, v) order.
  std::vector<WeightedEdge> GenuineEdges() const;

  // Same vertex relabelled: new vertex perm[i] is old vertex i.
  DenseGraph Permuted(std::span<const int> perm) const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

 private:
  int n_ = 0;
  bool bipartite_ = false;
  std::vector<double> weights_;
  std::vector<std::uint8_t> sentinel_;
  std::size_t sentinel_count_ = 0;
  double sentinel_value_ = 0.0;
  double max_genuine_ = 0.0;
};

struct VertexPair {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// A set of disjoint vertex pairs. Pairs are stored canonically (u < v, sorted),
// so two equal matchings always have identical pair lists and identical
// floating-point evaluation order.
class Matching {
 public:
  Matching() = default;
  Matching(int n, std::vector<VertexPair> pairs);
  // mate[i] is i's partner or -1.
  static Matching FromMates(std::span<const int> mate);

  int vertex_count() const { return n_; }
  const std::vector<VertexPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool is_perfect() const {
    return n_ > 0 && 2 * pairs_.size() == static_cast<std::size_t>(n_);
  }
  std::vector<int> Mates() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  int n_ = 0;
  std::vector<VertexPair> pairs_;
};

// Objective value of a perfect matching on the graph's weights:
//   MCM  sum of weights
//   BM   max weight
//   UM   max - min
//   MDM  sum / n - min   (n = vertex count, not matching size)
double Evaluate(const DenseGraph& graph, const Matching& matching,
                Objective objective);
// The same formulas over the weights of a perfect matching's pairs, listed
// in canonical pair order, on a graph of n vertices.
double EvaluateWeights(std::span<const double> pair_weights, int n,
                       Objective objective);

bool UsesSentinel(const DenseGraph& graph, const Matching& matching);

// Text format: "n <count> [bipartite]" followed by "i j w" lines; '#' starts
// a comment. Pairs not listed are sentinel-completed.
DenseGraph ReadGraph(std::istream& in);
DenseGraph ReadGraphFile(const std::string& path);
void WriteGraph(std::ostream& out, const DenseGraph& graph);
void WriteGraphFile(const std::string& path, const DenseGraph& graph);

}  // namespace matchembed

#endif  // MATCHEMBED_GRAPH_HPP_
