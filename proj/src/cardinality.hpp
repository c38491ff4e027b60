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
#ifndef MATCHEMBED_CARDINALITY_HPP_
#define MATCHEMBED_CARDINALITY_HPP_

#include <span>
#include <vector>

namespace matchembed {

// Adjacency lists; adj[u] holds the neighbours of u.
using Adjacency = std::vector<std::vector<int>>;

// Maximum-cardinality matching in a bipartite graph whose left side is
// [0, left) and right side [left, n). The mate array is used as the starting
// matching and updated in place (-1 = exposed). Returns augmentations made.
int HopcroftKarp(const Adjacency& adj, int left, std::vector<int>& mate);

// Edmonds' blossom-shrinking search for general graphs, warm-started from the
// given mates (updated in place). Returns augmentations made.
int EdmondsCardinality(const Adjacency& adj, std::vector<int>& mate);

}  // namespace matchembed

#endif  // MATCHEMBED_CARDINALITY_HPP_
