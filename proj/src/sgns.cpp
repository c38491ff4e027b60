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

#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "embedding.hpp"
#include "error.hpp"
#include "rng.hpp"
#include "text_util.hpp"

namespace matchembed {
namespace {

double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// log(sigmoid(x)) without overflow.
double LogSigmoid(double x) {
  return x >= 0.0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

SgnsPairGradient SgnsLossAndGradient(
    std::span<const double> center, std::span<const double> positive,
    std::span<const std::span<const double>> negatives) {
  const std::size_t d = center.size();
  SgnsPairGradient g;
  g.grad_center.assign(d, 0.0);
  g.grad_positive.assign(d, 0.0);

  const double fp = Dot(center, positive);
  g.loss = -LogSigmoid(fp);
  const double cp = Sigmoid(fp) - 1.0;  // d loss / d (u.v+)
  for (std::size_t k = 0; k < d; ++k) {
    g.grad_center[k] += cp * positive[k];
    g.grad_positive[k] = cp * center[k];
  }
  for (std::span<const double> neg : negatives) {
    const double fn = Dot(center, neg);
    g.loss -= LogSigmoid(-fn);
    const double cn = Sigmoid(fn);  // d loss / d (u.v-)
    std::vector<double> gn(d);
    for (std::size_t k = 0; k < d; ++k) {
      g.grad_center[k] += cn * neg[k];
      gn[k] = cn * center[k];
    }
    g.grad_negatives.push_back(std::move(gn));
  }
  return g;
}

Embedding TrainSgns(const WalkCorpus& corpus, const EmbeddingConfig& config,
                    std::uint64_t seed) {
  config.Validate();
  Require(!corpus.tokens.empty(), "empty walk corpus");
  const int n = corpus.vertex_count;
  const int d = config.dimensions;
  const std::size_t walks = corpus.walk_count();
  const int len = corpus.walk_length;

  std::vector<double> counts(n, 0.0);
  for (int t : corpus.tokens) counts[t] += 1.0;
  std::vector<double> noise(n);
  for (int i = 0; i < n; ++i) noise[i] = std::pow(counts[i], 0.75);
  const AliasTable negatives(noise);

  std::vector<double> in(static_cast<std::size_t>(n) * d);
  std::vector<double> out(static_cast<std::size_t>(n) * d, 0.0);
  {
    CounterRng init(DeriveSeed(seed, {0}));
    for (double& x : in) x = (init.NextDouble() - 0.5) / d;
  }
  auto in_row = [&](int i) {
    return std::span<double>(in.data() + static_cast<std::size_t>(i) * d, d);
  };
  auto out_row = [&](int i) {
    return std::span<double>(out.data() + static_cast<std::size_t>(i) * d, d);
  };

  Embedding result;
  result.config = config;
  const double total_steps =
      static_cast<double>(config.epochs) * static_cast<double>(walks) * len;
  double step = 0.0;
  std::vector<std::size_t> order(walks);
  std::vector<double> grad_center(d);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    CounterRng shuffle(DeriveSeed(seed, {1, static_cast<std::uint64_t>(epoch)}));
    for (std::size_t i = walks; i > 1; --i) {
      std::swap(order[i - 1], order[shuffle.NextBelow(i)]);
    }
    CounterRng noise_rng(
        DeriveSeed(seed, {2, static_cast<std::uint64_t>(epoch)}));

    double epoch_loss = 0.0;
    std::size_t pairs = 0;
    for (std::size_t w : order) {
      const std::span<const int> walk = corpus.walk(w);
      for (int pos = 0; pos < len; ++pos) {
        const double lr = std::max(
            config.min_learning_rate,
            config.learning_rate * (1.0 - step / total_steps));
        step += 1.0;
        const int center = walk[pos];
        const int lo = std::max(0, pos - config.window);
        const int hi = std::min(len - 1, pos + config.window);
        for (int c = lo; c <= hi; ++c) {
          if (c == pos) continue;
          const int context = walk[c];
          std::span<double> u = in_row(center);
          std::fill(grad_center.begin(), grad_center.end(), 0.0);
          double loss = 0.0;
          // Positive target first, then negatives; each output row is
          // stepped immediately and the centre row once at the end.
          for (int s = 0; s <= config.negatives; ++s) {
            int target = context;
            if (s > 0) {
              target = static_cast<int>(negatives.Sample(noise_rng));
              if (target == context) continue;
            }
            std::span<double> v = out_row(target);
            const double f = Dot(u, v);
            // One exp serves both s(f) and log s(+-f).
            const double e = std::exp(-std::abs(f));
            const double sig = f >= 0.0 ? 1.0 / (1.0 + e) : e / (1.0 + e);
            const double log1pe = std::log1p(e);
            double coeff;
            if (s == 0) {
              loss += f >= 0.0 ? log1pe : log1pe - f;
              coeff = sig - 1.0;
            } else {
              loss += f >= 0.0 ? log1pe + f : log1pe;
              coeff = sig;
            }
            for (int k = 0; k < d; ++k) {
              grad_center[k] += coeff * v[k];
              v[k] -= lr * coeff * u[k];
            }
          }
          for (int k = 0; k < d; ++k) u[k] -= lr * grad_center[k];
          if (!std::isfinite(loss)) {
            Fail(ErrorCode::kDivergence,
                 "divergence: non-finite SGNS loss (learning rate too high?)");
          }
          epoch_loss += loss;
          ++pairs;
        }
      }
    }
    const double mean = pairs > 0 ? epoch_loss / static_cast<double>(pairs) : 0.0;
    if (!std::isfinite(mean)) {
      Fail(ErrorCode::kDivergence, "divergence: non-finite SGNS loss");
    }
    result.epoch_losses.push_back(mean);
  }
  for (double x : in) {
    if (!std::isfinite(x)) {
      Fail(ErrorCode::kDivergence, "divergence: non-finite embedding entry");
    }
  }
  result.final_loss =
      result.epoch_losses.empty() ? 0.0 : result.epoch_losses.back();
  result.vectors = PointSet(n, d, std::move(in));
  return result;
}

Embedding EmbedGraph(const DenseGraph& graph, const EmbeddingConfig& config,
                     std::uint64_t seed) {
  const WalkGraph wg = BuildWalkGraph(graph, config);
  const WalkCorpus corpus = GenerateWalks(wg, config, DeriveSeed(seed, {10}));
  Embedding e = TrainSgns(corpus, config, DeriveSeed(seed, {20}));
  e.walk_graph_connected = wg.connected;
  return e;
}

void WriteEmbedding(std::ostream& out, const Embedding& embedding) {
  const PointSet& pts = embedding.vectors;
  out << pts.count << ' ' << pts.dim << '\n';
  for (int i = 0; i < pts.count; ++i) {
    out << i;
    for (double x : pts[i]) out << ' ' << FormatDouble(x);
    out << '\n';
  }
}

PointSet ReadEmbeddingPoints(std::istream& in) {
  std::string line;
  int n = -1;
  int d = -1;
  std::vector<double> coords;
  std::vector<char> seen;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = Tokenize(StripComment(line));
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (n < 0) {
      Require(tokens.size() == 2, where + "expected header 'n d'",
              ErrorCode::kParse);
      n = ParseInt(tokens[0], where + "count");
      d = ParseInt(tokens[1], where + "dimension");
      Require(n >= 0 && d >= 1, where + "bad header", ErrorCode::kParse);
      coords.assign(static_cast<std::size_t>(n) * d, 0.0);
      seen.assign(n, 0);
      continue;
    }
    Require(static_cast<int>(tokens.size()) == d + 1,
            where + "expected index and " + std::to_string(d) + " values",
            ErrorCode::kParse);
    const int i = ParseInt(tokens[0], where + "index");
    Require(i >= 0 && i < n && !seen[i], where + "bad or repeated index",
            ErrorCode::kParse);
    seen[i] = 1;
    for (int k = 0; k < d; ++k) {
      coords[static_cast<std::size_t>(i) * d + k] =
          ParseDouble(tokens[k + 1], where + "coordinate");
    }
  }
  Require(n >= 0, "missing embedding header", ErrorCode::kParse);
  for (int i = 0; i < n; ++i) {
    Require(seen[i], "embedding row " + std::to_string(i) + " missing",
            ErrorCode::kParse);
  }
  return PointSet(n, d, std::move(coords));
}

}  // namespace matchembed
