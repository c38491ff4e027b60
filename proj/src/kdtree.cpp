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

#include "kdtree.hpp"

#include <algorithm>
#include <limits>

namespace matchembed {

KdTree::KdTree(const PointSet& points, int leaf_size)
    : points_(points),
      leaf_size_(std::max(1, leaf_size)),
      order_(points.count),
      leaf_of_(points.count, -1),
      alive_(points.count, 1) {
  for (int i = 0; i < points.count; ++i) order_[i] = i;
  if (points.count > 0) Build(0, points.count, -1);
}

int KdTree::Build(int begin, int end, int parent) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back({begin, end, -1, -1, parent, end - begin});
  const int d = points_.dim;
  const std::size_t box = boxes_.size();
  boxes_.resize(box + 2 * static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    boxes_[box + k] = std::numeric_limits<double>::infinity();
    boxes_[box + d + k] = -std::numeric_limits<double>::infinity();
  }
  for (int t = begin; t < end; ++t) {
    const auto p = points_[order_[t]];
    for (int k = 0; k < d; ++k) {
      boxes_[box + k] = std::min(boxes_[box + k], p[k]);
      boxes_[box + d + k] = std::max(boxes_[box + d + k], p[k]);
    }
  }
  if (end - begin <= leaf_size_) {
    for (int t = begin; t < end; ++t) leaf_of_[order_[t]] = id;
    return id;
  }
  int split = 0;
  double widest = -1.0;
  for (int k = 0; k < d; ++k) {
    const double extent = boxes_[box + d + k] - boxes_[box + k];
    if (extent > widest) {
      widest = extent;
      split = k;
    }
  }
  const int mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid,
                   order_.begin() + end, [&](int a, int b) {
                     const double pa = points_[a][split];
                     const double pb = points_[b][split];
                     return pa < pb || (pa == pb && a < b);
                   });
  const int left = Build(begin, mid, id);
  const int right = Build(mid, end, id);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

void KdTree::Remove(int point) {
  if (!alive_[point]) return;
  alive_[point] = 0;
  for (int node = leaf_of_[point]; node >= 0; node = nodes_[node].parent) {
    --nodes_[node].live;
  }
}

// Every term is a clamped coordinate gap no larger than the corresponding
// term of SquaredDistance for any point in the box, summed in the same order,
// so the bound never exceeds a contained point's computed distance.
double KdTree::BoxLowerBound(int node, std::span<const double> q) const {
  const int d = points_.dim;
  const double* lo = boxes_.data() + static_cast<std::size_t>(node) * 2 * d;
  const double* hi = lo + d;
  double s = 0.0;
  for (int k = 0; k < d; ++k) {
    double gap = 0.0;
    if (q[k] < lo[k]) {
      gap = lo[k] - q[k];
    } else if (q[k] > hi[k]) {
      gap = q[k] - hi[k];
    }
    s += gap * gap;
  }
  return std::sqrt(s);
}

void KdTree::Search(int node, int query, std::span<const double> q,
                    const TieBreak& ties, Neighbor& best,
                    std::uint64_t& best_key) const {
  const Node& nd = nodes_[node];
  if (nd.live == 0) return;
  if (best.index >= 0 && BoxLowerBound(node, q) > best.distance) return;
  if (nd.left < 0) {
    for (int t = nd.begin; t < nd.end; ++t) {
      const int x = order_[t];
      if (x == query || !alive_[x]) continue;
      const double dist = Distance(q, points_[x]);
      if (best.index >= 0 && dist > best.distance) continue;
      const int lo = std::min(query, x);
      const int hi = std::max(query, x);
      const std::uint64_t key = ties.Key(lo, hi);
      if (best.index >= 0 && dist == best.distance) {
        // Same query on both sides: ordering by the other endpoint's index
        // is the (lower, higher) pair order.
        if (key > best_key || (key == best_key && x > best.index)) continue;
      }
      best = {x, dist};
      best_key = key;
    }
    return;
  }
  const double dl = BoxLowerBound(nd.left, q);
  const double dr = BoxLowerBound(nd.right, q);
  if (dl <= dr) {
    Search(nd.left, query, q, ties, best, best_key);
    Search(nd.right, query, q, ties, best, best_key);
  } else {
    Search(nd.right, query, q, ties, best, best_key);
    Search(nd.left, query, q, ties, best, best_key);
  }
}

KdTree::Neighbor KdTree::Nearest(int query, const TieBreak& ties) const {
  Neighbor best;
  std::uint64_t best_key = 0;
  if (!nodes_.empty()) Search(0, query, points_[query], ties, best, best_key);
  return best;
}

}  // namespace matchembed
