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

#ifndef MATCHEMBED_KDTREE_HPP_
#define MATCHEMBED_KDTREE_HPP_

#include <vector>

#include "greedy.hpp"
#include "points.hpp"

namespace matchembed {

// Static k-d tree with deletions. Nodes keep bounding boxes and live counts;
// removed points stay in place and empty subtrees are skipped.
class KdTree {
 public:
  explicit KdTree(const PointSet& points, int leaf_size = 8);

  void Remove(int point);
  bool alive(int point) const { return alive_[point] != 0; }
  int live_count() const { return nodes_.empty() ? 0 : nodes_[0].live; }

  struct Neighbor {
    int index = -1;
    double distance = 0.0;
  };
  // Live point other than `query` minimising (distance, tie key, index
  // pair); index -1 when none exists.
  Neighbor Nearest(int query, const TieBreak& ties) const;

 private:
  struct Node {
    int begin = 0;
    int end = 0;
    int left = -1;
    int right = -1;
    int parent = -1;
    int live = 0;
  };

  int Build(int begin, int end, int parent);
  double BoxLowerBound(int node, std::span<const double> q) const;
  void Search(int node, int query, std::span<const double> q,
              const TieBreak& ties, Neighbor& best, std::uint64_t& best_key)
      const;

  const PointSet& points_;
  int leaf_size_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  std::vector<double> boxes_;  // per node: dim mins then dim maxes
  std::vector<int> leaf_of_;
  std::vector<char> alive_;
};

}  // namespace matchembed

#endif  // MATCHEMBED_KDTREE_HPP_
