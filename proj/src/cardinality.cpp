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
#include "cardinality.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "error.hpp"

namespace matchembed {

int HopcroftKarp(const Adjacency& adj, int left, std::vector<int>& mate) {
  const int n = static_cast<int>(adj.size());
  Require(static_cast<int>(mate.size()) == n, "mate array size mismatch");
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(left);
  std::vector<int> it(left);
  int augmentations = 0;

  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < left; ++u) {
      if (mate[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        const int w = mate[v];
        if (w < 0) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  // Iterative layered DFS.
  auto dfs = [&](int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      bool advanced = false;
      for (; it[u] < static_cast<int>(adj[u].size()); ++it[u]) {
        const int v = adj[u][it[u]];
        const int w = mate[v];
        if (w < 0) {
          // Flip the path recorded on the stack.
          int right = v;
          for (int k = static_cast<int>(stack.size()) - 1; k >= 0; --k) {
            const int l = stack[k];
            const int next = mate[l];
            mate[l] = right;
            mate[right] = l;
            right = next;
          }
          return true;
        }
        if (dist[w] == dist[u] + 1) {
          ++it[u];
          stack.push_back(w);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist[u] = kInf;
        stack.pop_back();
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int u = 0; u < left; ++u) {
      if (mate[u] < 0 && dfs(u)) ++augmentations;
    }
  }
  return augmentations;
}

namespace {

class EdmondsSearch {
 public:
  EdmondsSearch(const Adjacency& adj, std::vector<int>& mate)
      : adj_(adj),
        n_(static_cast<int>(adj.size())),
        mate_(mate),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_),
        lca_mark_(n_) {}

  // BFS over alternating trees rooted at root; on success the augmenting
  // path is applied and true is returned.
  bool Augment(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(used_.begin(), used_.end(), 0);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    queue_.clear();
    queue_.push_back(root);
    std::size_t head = 0;
    while (head < queue_.size()) {
      const int v = queue_[head++];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          const int cur = Lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          MarkPath(v, cur, to);
          MarkPath(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue_.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) {
            int u = to;
            while (u != -1) {
              const int pv = parent_[u];
              const int ppv = mate_[pv];
              mate_[u] = pv;
              mate_[pv] = u;
              u = ppv;
            }
            return true;
          }
          used_[mate_[to]] = 1;
          queue_.push_back(mate_[to]);
        }
      }
    }
    return false;
  }

 private:
  int Lca(int a, int b) {
    ++stamp_;
    while (true) {
      a = base_[a];
      lca_mark_[a] = stamp_;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b] == stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  const Adjacency& adj_;
  int n_;
  std::vector<int>& mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::vector<int> lca_mark_;
  int stamp_ = 0;
  std::vector<int> queue_;
};

}  // namespace

int EdmondsCardinality(const Adjacency& adj, std::vector<int>& mate) {
  const int n = static_cast<int>(adj.size());
  Require(static_cast<int>(mate.size()) == n, "mate array size mismatch");
  EdmondsSearch search(adj, mate);
  int augmentations = 0;
  for (int v = 0; v < n; ++v) {
    if (mate[v] == -1 && search.Augment(v)) ++augmentations;
  }
  return augmentations;
}

}  // namespace matchembed
