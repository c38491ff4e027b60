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

// Random-walk vertex embeddings: a sparsified similarity graph is walked
// (uniform first-order walks for DeepWalk, p/q-biased second-order walks for
// node2vec) and the walk corpus is fed to skip-gram with negative sampling.

#ifndef MATCHEMBED_EMBEDDING_HPP_
#define MATCHEMBED_EMBEDDING_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "alias_table.hpp"
#include "graph.hpp"
#include "points.hpp"

namespace matchembed {

enum class WalkMethod { kDeepWalk, kNode2Vec };
enum class Similarity { kInverse, kExpDecay, kUniform };

std::string_view WalkMethodName(WalkMethod method);
WalkMethod ParseWalkMethod(std::string_view name);
std::string_view SimilarityName(Similarity similarity);
Similarity ParseSimilarity(std::string_view name);

struct EmbeddingConfig {
  int dimensions = 10;
  int walks_per_node = 20;
  int walk_length = 20;
  int window = 5;
  int negatives = 5;
  int epochs = 5;
  double learning_rate = 0.025;
  double min_learning_rate = 1e-4;
  WalkMethod method = WalkMethod::kDeepWalk;
  double p = 0.5;
  double q = 2.0;
  Similarity similarity = Similarity::kInverse;
  // Lightest incident edges kept per vertex; clamped to n - 1.
  int knn = 10;
  // Workers for walk generation; the corpus does not depend on it.
  int walk_threads = 1;

  void Validate() const;
};

// Row-stochastic transition structure over the kept edges.
struct WalkGraph {
  struct Arc {
    int to = 0;
    double probability = 0.0;
  };
  // adjacency[v] sorted by target index.
  std::vector<std::vector<Arc>> adjacency;
  std::vector<AliasTable> first_order;
  bool connected = true;

  int size() const { return static_cast<int>(adjacency.size()); }
  bool Adjacent(int a, int b) const;
  double Probability(int from, int to) const;
};

WalkGraph BuildWalkGraph(const DenseGraph& graph,
                         const EmbeddingConfig& config);

struct WalkCorpus {
  int vertex_count = 0;
  int walk_length = 0;
  // walks_per_node * n walks, flattened; walk w starts at w % n and is the
  // (w / n)-th walk from that vertex.
  std::vector<int> tokens;

  std::size_t walk_count() const {
    return walk_length == 0 ? 0 : tokens.size() / walk_length;
  }
  std::span<const int> walk(std::size_t w) const {
    return {tokens.data() + w * walk_length,
            static_cast<std::size_t>(walk_length)};
  }
};

WalkCorpus GenerateWalks(const WalkGraph& walk_graph,
                         const EmbeddingConfig& config, std::uint64_t seed);

struct Embedding {
  PointSet vectors;  // row i is vertex i
  EmbeddingConfig config;
  std::vector<double> epoch_losses;
  double final_loss = 0.0;
  bool walk_graph_connected = true;
};

// Loss of one (centre, context) pair with its negatives and its gradient
// with respect to every vector involved:
//   loss = -log s(u.v+) - sum_k log s(-u.v-_k),  s = logistic.
struct SgnsPairGradient {
  double loss = 0.0;
  std::vector<double> grad_center;
  std::vector<double> grad_positive;
  std::vector<std::vector<double>> grad_negatives;
};
SgnsPairGradient SgnsLossAndGradient(
    std::span<const double> center, std::span<const double> positive,
    std::span<const std::span<const double>> negatives);

Embedding TrainSgns(const WalkCorpus& corpus, const EmbeddingConfig& config,
                    std::uint64_t seed);

Embedding EmbedGraph(const DenseGraph& graph, const EmbeddingConfig& config,
                     std::uint64_t seed);

// "n d" header, then "index v1 ... vd" per vertex.
void WriteEmbedding(std::ostream& out, const Embedding& embedding);
PointSet ReadEmbeddingPoints(std::istream& in);

}  // namespace matchembed

#endif  // MATCHEMBED_EMBEDDING_HPP_
