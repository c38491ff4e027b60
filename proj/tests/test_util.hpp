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

#ifndef MATCHEMBED_TESTS_TEST_UTIL_HPP_
#define MATCHEMBED_TESTS_TEST_UTIL_HPP_

#include <initializer_list>
#include <vector>

#include "graph.hpp"

namespace matchembed::testing {

// Complete graph from a list of (i, j, w); every pair must be listed.
inline DenseGraph Complete(int n, std::initializer_list<WeightedEdge> edges,
                           bool bipartite = false) {
  std::vector<WeightedEdge> list(edges);
  return DenseGraph::CompleteWithSentinels(n, list, bipartite);
}

inline Matching Pairs(int n, std::initializer_list<VertexPair> pairs) {
  return Matching(n, std::vector<VertexPair>(pairs));
}

}  // namespace matchembed::testing

#endif  // MATCHEMBED_TESTS_TEST_UTIL_HPP_
