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
// Port of the classic O(n^3) weighted blossom algorithm (Galil's exposition
// of Edmonds' method, as structured in van Rantwijk's reference code).
//
// Vertices are 0..n-1, non-trivial blossoms n..2n-1. An edge k has two
// endpoints 2k (its u side) and 2k+1 (its v side); mate[] and labelend[]
// store endpoints so the edge used is always recoverable.

#include "blossom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace matchembed {
namespace {

// Python-style indexing, used where the walk around a blossom runs with a
// negative cursor.
template <typename T>
T& Wrap(std::vector<T>& v, int j) {
  const int size = static_cast<int>(v.size());
  return v[static_cast<std::size_t>(((j % size) + size) % size)];
}

class Solver {
 public:
  Solver(int n, std::span<const BlossomEdge> edges, bool max_cardinality)
      : n_(n), edges_(edges.begin(), edges.end()),
        max_cardinality_(max_cardinality) {
    const int m = static_cast<int>(edges_.size());
    double max_weight = 0.0;
    for (const BlossomEdge& e : edges_) max_weight = std::max(max_weight, e.weight);
    endpoint_.resize(2 * static_cast<std::size_t>(m));
    neighbend_.assign(n_, {});
    for (int k = 0; k < m; ++k) {
      const BlossomEdge& e = edges_[k];
      endpoint_[2 * k] = e.u;
      endpoint_[2 * k + 1] = e.v;
      neighbend_[e.u].push_back(2 * k + 1);
      neighbend_[e.v].push_back(2 * k);
    }
    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    labelend_.assign(2 * n_, -1);
    inblossom_.resize(n_);
    for (int i = 0; i < n_; ++i) inblossom_[i] = i;
    blossomparent_.assign(2 * n_, -1);
    blossomchilds_.assign(2 * n_, {});
    blossombase_.assign(2 * n_, -1);
    for (int i = 0; i < n_; ++i) blossombase_[i] = i;
    blossomendps_.assign(2 * n_, {});
    bestedge_.assign(2 * n_, -1);
    blossombestedges_.assign(2 * n_, {});
    has_bestedges_.assign(2 * n_, 0);
    for (int b = 2 * n_ - 1; b >= n_; --b) unused_.push_back(b);
    dualvar_.assign(2 * n_, 0.0);
    for (int i = 0; i < n_; ++i) dualvar_[i] = max_weight;
    allowedge_.assign(m, 0);
  }

  std::int64_t Run() {
    std::int64_t stages = 0;
    for (int t = 0; t < n_; ++t) {
      ++stages;
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n_; b < 2 * n_; ++b) {
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();
      for (int v = 0; v < n_; ++v) {
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) AssignLabel(v, 1, -1);
      }

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            const int k = p / 2;
            const int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            double kslack = 0.0;
            if (!allowedge_[k]) {
              kslack = Slack(k);
              if (kslack <= 0.0) allowedge_[k] = 1;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                AssignLabel(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                const int base = ScanBlossom(v, w);
                if (base >= 0) {
                  AddBlossom(base, k);
                } else {
                  AugmentMatching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              const int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < Slack(bestedge_[b])) {
                bestedge_[b] = k;
              }
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < Slack(bestedge_[w])) {
                bestedge_[w] = k;
              }
            }
          }
        }
        if (augmented) break;

        // No augmenting path on tight edges: move the duals.
        int deltatype = -1;
        double delta = 0.0;
        int deltaedge = -1;
        int deltablossom = -1;
        if (!max_cardinality_) {
          deltatype = 1;
          delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
        }
        for (int v = 0; v < n_; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            const double d = Slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * n_; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            const double d = Slack(bestedge_[b]) / 2.0;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 &&
              label_[b] == 2 && (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          deltatype = 1;
          delta = std::max(
              0.0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
        }

        for (int v = 0; v < n_; ++v) {
          const int l = label_[inblossom_[v]];
          if (l == 1) {
            dualvar_[v] -= delta;
          } else if (l == 2) {
            dualvar_[v] += delta;
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) {
              dualvar_[b] += delta;
            } else if (label_[b] == 2) {
              dualvar_[b] -= delta;
            }
          }
        }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = 1;
          int i = edges_[deltaedge].u;
          int j = edges_[deltaedge].v;
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = 1;
          queue_.push_back(edges_[deltaedge].u);
        } else {
          ExpandBlossom(deltablossom, false);
        }
      }

      if (!augmented) break;
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 &&
            label_[b] == 1 && dualvar_[b] == 0.0) {
          ExpandBlossom(b, true);
        }
      }
    }
    return stages;
  }

  std::vector<int> Mates() const {
    std::vector<int> mate(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) mate[v] = endpoint_[mate_[v]];
    }
    return mate;
  }

  // Complementary slackness on the final primal/dual pair. Returns the worst
  // violation: negative edge slack, non-zero slack on a matched edge, or a
  // negative blossom dual.
  double CertificateViolation() const {
    double worst = 0.0;
    for (int b = n_; b < 2 * n_; ++b) {
      if (blossombase_[b] >= 0) worst = std::max(worst, -dualvar_[b]);
    }
    std::vector<int> ichain;
    std::vector<int> jchain;
    for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
      const int i = edges_[k].u;
      const int j = edges_[k].v;
      double s = dualvar_[i] + dualvar_[j] - 2.0 * edges_[k].weight;
      Chain(i, ichain);
      Chain(j, jchain);
      auto ib = ichain.rbegin();
      auto jb = jchain.rbegin();
      for (; ib != ichain.rend() && jb != jchain.rend(); ++ib, ++jb) {
        if (*ib != *jb) break;
        s += 2.0 * dualvar_[*ib];
      }
      worst = std::max(worst, -s);
      const bool matched = mate_[i] >= 0 && mate_[i] / 2 == k;
      if (matched) worst = std::max(worst, std::abs(s));
    }
    if (!max_cardinality_) {
      for (int v = 0; v < n_; ++v) {
        if (mate_[v] < 0) worst = std::max(worst, std::abs(dualvar_[v]));
      }
    }
    return worst;
  }

 private:
  double Slack(int k) const {
    const BlossomEdge& e = edges_[k];
    return dualvar_[e.u] + dualvar_[e.v] - 2.0 * e.weight;
  }

  void Chain(int v, std::vector<int>& out) const {
    out.clear();
    out.push_back(v);
    while (blossomparent_[out.back()] != -1) {
      out.push_back(blossomparent_[out.back()]);
    }
  }

  void Leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) Leaves(t, out);
  }

  std::vector<int> Leaves(int b) const {
    std::vector<int> out;
    Leaves(b, out);
    return out;
  }

  void AssignLabel(int w, int t, int p) {
    const int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      Leaves(b, queue_);
    } else if (t == 2) {
      const int base = blossombase_[b];
      AssignLabel(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  // Walks up from v and w in parallel; returns the base of the new blossom,
  // or -1 when the two trees differ (augmenting path found).
  int ScanBlossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void AddBlossom(int base, int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    const int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    const int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<int>& path = blossomchilds_[b];
    std::vector<int>& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0.0;
    for (int leaf : Leaves(b)) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }

    std::vector<int> bestedgeto(2 * n_, -1);
    for (int child : path) {
      std::vector<std::vector<int>> lists;
      if (!has_bestedges_[child]) {
        for (int leaf : Leaves(child)) {
          std::vector<int> ks;
          ks.reserve(neighbend_[leaf].size());
          for (int p : neighbend_[leaf]) ks.push_back(p / 2);
          lists.push_back(std::move(ks));
        }
      } else {
        lists.push_back(blossombestedges_[child]);
      }
      for (const std::vector<int>& list : lists) {
        for (int kk : list) {
          int i = edges_[kk].u;
          int j = edges_[kk].v;
          if (inblossom_[j] == b) std::swap(i, j);
          const int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 &&
              (bestedgeto[bj] == -1 || Slack(kk) < Slack(bestedgeto[bj]))) {
            bestedgeto[bj] = kk;
          }
        }
      }
      blossombestedges_[child].clear();
      has_bestedges_[child] = 0;
      bestedge_[child] = -1;
    }
    blossombestedges_[b].clear();
    for (int kk : bestedgeto) {
      if (kk != -1) blossombestedges_[b].push_back(kk);
    }
    has_bestedges_[b] = 1;
    bestedge_[b] = -1;
    for (int kk : blossombestedges_[b]) {
      if (bestedge_[b] == -1 || Slack(kk) < Slack(bestedge_[b])) {
        bestedge_[b] = kk;
      }
    }
  }

  void ExpandBlossom(int b, bool endstage) {
    const std::vector<int> childs = blossomchilds_[b];
    for (int s : childs) {
      blossomparent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0.0) {
        ExpandBlossom(s, endstage);
      } else {
        for (int leaf : Leaves(s)) inblossom_[leaf] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      std::vector<int>& ch = blossomchilds_[b];
      std::vector<int>& ep = blossomendps_[b];
      const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) -
                               ch.begin());
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= static_cast<int>(ch.size());
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[Wrap(ep, j - endptrick) ^ endptrick ^ 1]] = 0;
        AssignLabel(endpoint_[p ^ 1], 2, p);
        allowedge_[Wrap(ep, j - endptrick) / 2] = 1;
        j += jstep;
        p = Wrap(ep, j - endptrick) ^ endptrick;
        allowedge_[p / 2] = 1;
        j += jstep;
      }
      int bv = Wrap(ch, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (Wrap(ch, j) != entrychild) {
        bv = Wrap(ch, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int labelled = -1;
        for (int leaf : Leaves(bv)) {
          if (label_[leaf] != 0) {
            labelled = leaf;
            break;
          }
        }
        if (labelled >= 0) {
          label_[labelled] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          AssignLabel(labelled, 2, labelend_[labelled]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = 0;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  // Swaps matched/unmatched edges on the even-length path through blossom b
  // from vertex v to the base, and rotates b so v's child becomes the base.
  void AugmentBlossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= n_) AugmentBlossom(t, v);
    std::vector<int>& ch = blossomchilds_[b];
    std::vector<int>& ep = blossomendps_[b];
    const int i =
        static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= static_cast<int>(ch.size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = Wrap(ch, j);
      const int p = Wrap(ep, j - endptrick) ^ endptrick;
      if (t >= n_) AugmentBlossom(t, endpoint_[p]);
      j += jstep;
      t = Wrap(ch, j);
      if (t >= n_) AugmentBlossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    blossombase_[b] = blossombase_[ch[0]];
  }

  void AugmentMatching(int k) {
    const int starts[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
    for (const auto& start : starts) {
      int s = start[0];
      int p = start[1];
      while (true) {
        const int bs = inblossom_[s];
        if (bs >= n_) AugmentBlossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        const int t = endpoint_[labelend_[bs]];
        const int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        const int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= n_) AugmentBlossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int n_;
  std::vector<BlossomEdge> edges_;
  bool max_cardinality_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unused_;
  std::vector<double> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

BlossomResult MaxWeightMatching(int n, std::span<const BlossomEdge> edges,
                                bool max_cardinality,
                                double certificate_tolerance) {
  Require(n >= 0, "negative vertex count");
  double scale = 0.0;
  for (const BlossomEdge& e : edges) {
    Require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n && e.u != e.v,
            "blossom edge endpoint out of range", ErrorCode::kOutOfRange);
    Require(std::isfinite(e.weight), "blossom edge weight must be finite");
    scale = std::max(scale, std::abs(e.weight));
  }
  BlossomResult result;
  if (n == 0) return result;
  Solver solver(n, edges, max_cardinality);
  result.stages = solver.Run();
  result.mate = solver.Mates();
  result.max_certificate_violation = solver.CertificateViolation();
  const double limit = certificate_tolerance * 2.0 * std::max(scale, 1e-300);
  Require(result.max_certificate_violation <= limit,
          "blossom dual certificate violated by " +
              std::to_string(result.max_certificate_violation),
          ErrorCode::kRuntime);
  return result;
}

}  // namespace matchembed
