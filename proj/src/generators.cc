// Copyright 2026 The ccround Authors.
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

#include "ccround/generators.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "ccround/errors.h"
#include "ccround/rng.h"

namespace ccround {

namespace {

void CheckProbability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ContractViolation(std::string(what) + " must lie in [0,1]");
  }
}

EdgeLabel Flip(EdgeLabel l) {
  return l == EdgeLabel::kPlus ? EdgeLabel::kMinus : EdgeLabel::kPlus;
}

}  // namespace

Instance GenerateCompleteRandom(int n, double plus_prob, std::uint64_t seed) {
  if (n < 1) throw ContractViolation("n must be at least 1");
  CheckProbability(plus_prob, "plus_prob");
  SplitMix64 rng(seed);
  PairMatrix<EdgeLabel> labels(n, EdgeLabel::kMinus);
  for (EdgeLabel& l : labels.flat()) {
    l = rng.Bernoulli(plus_prob) ? EdgeLabel::kPlus : EdgeLabel::kMinus;
  }
  return Instance::Complete(std::move(labels));
}

Instance GenerateKPartiteRandom(const std::vector<int>& part_sizes,
                                double plus_prob, std::uint64_t seed) {
  CheckProbability(plus_prob, "plus_prob");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw ContractViolation("part sizes must be >= 1");
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]),
                   static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  if (n < 1) throw ContractViolation("k-partite instance needs a part");
  SplitMix64 rng(seed);
  PairMatrix<EdgeLabel> labels(n, EdgeLabel::kNeutral);
  ForEachPair(n, [&](int u, int v) {
    if (part_of[u] == part_of[v]) return;
    labels(u, v) =
        rng.Bernoulli(plus_prob) ? EdgeLabel::kPlus : EdgeLabel::kMinus;
  });
  return Instance::KPartite(std::move(part_of), std::move(labels));
}

Instance GenerateWeightedRandom(int n, bool triangle_inequality,
                                std::uint64_t seed) {
  if (n < 1) throw ContractViolation("n must be at least 1");
  SplitMix64 rng(seed);
  PairMatrix<double> lambda_plus(n, 0.0);
  if (triangle_inequality) {
    std::vector<double> t(static_cast<std::size_t>(n));
    for (double& ti : t) ti = rng.Uniform();
    ForEachPair(n, [&](int u, int v) {
      lambda_plus(u, v) = 1.0 - std::abs(t[u] - t[v]);
    });
  } else {
    for (double& w : lambda_plus.flat()) w = rng.Uniform();
  }
  return Instance::Weighted(std::move(lambda_plus), triangle_inequality);
}

PlantedInstance GeneratePlanted(int n, int k, double corruption,
                                std::uint64_t seed) {
  if (k < 1 || k > n) throw ContractViolation("need 1 <= k <= n");
  CheckProbability(corruption, "corruption");
  std::vector<int> block(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    block[v] = static_cast<int>(static_cast<std::int64_t>(v) * k / n);
  }
  SplitMix64 rng(seed);
  PairMatrix<EdgeLabel> labels(n, EdgeLabel::kMinus);
  ForEachPair(n, [&](int u, int v) {
    EdgeLabel l = block[u] == block[v] ? EdgeLabel::kPlus : EdgeLabel::kMinus;
    if (rng.Bernoulli(corruption)) l = Flip(l);
    labels(u, v) = l;
  });
  return {Instance::Complete(std::move(labels)), Clustering(std::move(block))};
}

Instance GenerateGapTriangleInequality(int n) {
  if (n < 1) throw ContractViolation("half-size must be at least 1");
  const int total = 2 * n;
  PairMatrix<double> lambda_plus(total, 0.0);
  ForEachPair(total, [&](int u, int v) {
    const bool across = (u < n) != (v < n);
    const double lambda_minus = across ? 1.0 / 3.0 : 2.0 / 3.0;
    lambda_plus(u, v) = 1.0 - lambda_minus;
  });
  return Instance::Weighted(std::move(lambda_plus), true);
}

BipartiteGraph EvenCycle(int half_length) {
  if (half_length < 1) throw ContractViolation("cycle half-length >= 1");
  BipartiteGraph g;
  g.left = half_length;
  g.right = half_length;
  if (half_length == 1) {
    // Degenerate case: a single edge, K_{1,1}.
    g.edges = {{0, 0}};
    return g;
  }
  // Left i is adjacent to right i and right i+1 (mod half_length).
  for (int i = 0; i < half_length; ++i) {
    g.edges.emplace_back(i, i);
    g.edges.emplace_back(i, (i + 1) % half_length);
  }
  return g;
}

GapKPartitePoint GapKPartiteLpPoint(const BipartiteGraph& graph) {
  if (graph.left < 1 || graph.right < 1) {
    throw ContractViolation("both sides of the bipartite graph need vertices");
  }
  const int n = graph.left + graph.right;
  std::vector<int> part_of(static_cast<std::size_t>(n), 0);
  for (int v = graph.left; v < n; ++v) part_of[v] = 1;

  PairMatrix<EdgeLabel> labels(n, EdgeLabel::kNeutral);
  LpSolution lp(n, 2.0 / 3.0);
  ForEachPair(n, [&](int u, int v) {
    if (part_of[u] != part_of[v]) {
      labels(u, v) = EdgeLabel::kMinus;
      lp.set(u, v, 1.0);
    }
  });
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : graph.edges) {
    if (i < 0 || i >= graph.left || j < 0 || j >= graph.right) {
      throw ContractViolation("bipartite edge endpoint out of range");
    }
    if (!seen.insert({i, j}).second) {
      throw ContractViolation("duplicate bipartite edge");
    }
    labels(i, graph.left + j) = EdgeLabel::kPlus;
    lp.set(i, graph.left + j, 1.0 / 3.0);
  }
  Instance inst = Instance::KPartite(std::move(part_of), std::move(labels));
  const ValidationReport report = ValidateSolution(lp, 1e-12);
  if (!report.feasible) {
    throw ContractViolation("gap LP point is infeasible for this graph");
  }
  return {std::move(inst), std::move(lp)};
}

Blowup WeightedToUnweighted(const Instance& weighted, int copies,
                            std::uint64_t seed, int max_vertices) {
  if (!weighted.weighted()) {
    throw ContractViolation("blow-up needs a weighted instance");
  }
  if (copies < 1) throw ContractViolation("copies must be at least 1");
  const std::int64_t total =
      static_cast<std::int64_t>(weighted.n()) * copies;
  if (total > max_vertices) {
    throw ContractViolation("blow-up would have " + std::to_string(total) +
                            " vertices, limit is " +
                            std::to_string(max_vertices));
  }
  const int n = static_cast<int>(total);
  Blowup out;
  out.copies = copies;
  out.original_of.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.original_of[i] = i / copies;

  SplitMix64 rng(seed);
  PairMatrix<EdgeLabel> labels(n, EdgeLabel::kPlus);
  ForEachPair(n, [&](int a, int b) {
    const int u = out.original_of[a];
    const int v = out.original_of[b];
    if (u == v) return;
    labels(a, b) = rng.Bernoulli(weighted.lambda_plus(u, v))
                       ? EdgeLabel::kPlus
                       : EdgeLabel::kMinus;
  });
  out.instance = Instance::Complete(std::move(labels));
  return out;
}

Clustering LiftClustering(const Clustering& blown_up,
                          const std::vector<int>& original_of,
                          std::uint64_t seed) {
  if (static_cast<int>(original_of.size()) != blown_up.size()) {
    throw ContractViolation("vertex map does not match the clustering");
  }
  int originals = 0;
  for (int u : original_of) {
    if (u < 0) throw ContractViolation("negative original vertex");
    originals = std::max(originals, u + 1);
  }
  std::vector<std::vector<int>> copies(static_cast<std::size_t>(originals));
  for (int i = 0; i < blown_up.size(); ++i) copies[original_of[i]].push_back(i);

  SplitMix64 rng(seed);
  std::vector<int> assignment(static_cast<std::size_t>(originals));
  for (int u = 0; u < originals; ++u) {
    if (copies[u].empty()) {
      throw ContractViolation("original vertex without copies");
    }
    const auto pick = rng.Below(copies[u].size());
    assignment[u] = blown_up[copies[u][pick]];
  }
  return Clustering(std::move(assignment));
}

}  // namespace ccround
