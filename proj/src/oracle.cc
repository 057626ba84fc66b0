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

#include "ccround/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ccround/errors.h"
#include "ccround/pivot.h"
#include "ccround/triple.h"

namespace ccround {

namespace {

constexpr double kTieTolerance = 1e-9;

class DenseCosts {
 public:
  explicit DenseCosts(const Instance& inst)
      : n_(inst.n()),
        cut_(static_cast<std::size_t>(n_) * n_, 0.0),
        join_(cut_.size(), 0.0) {
    ForEachPair(n_, [&](int u, int v) {
      cut_[Idx(u, v)] = cut_[Idx(v, u)] = inst.cut_cost(u, v);
      join_[Idx(u, v)] = join_[Idx(v, u)] = inst.join_cost(u, v);
    });
  }
  double cut(int u, int v) const { return cut_[Idx(u, v)]; }
  double join(int u, int v) const { return join_[Idx(u, v)]; }

 private:
  std::size_t Idx(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  int n_;
  std::vector<double> cut_;
  std::vector<double> join_;
};

// Moves single vertices to the cluster (or a new one) that lowers the cost
// most, until no move helps.
std::vector<int> LocalSearch(const DenseCosts& c, std::vector<int> a) {
  const int n = static_cast<int>(a.size());
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < n; ++v) {
      const int k = n + 1;
      // cost of v against every cluster id, plus an unused id
      std::vector<double> join_cost(k, 0.0);
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        join_cost[a[u]] += c.join(u, v) - c.cut(u, v);
      }
      int best = a[v];
      double best_delta = join_cost[a[v]];
      for (int id = 0; id < k; ++id) {
        if (join_cost[id] < best_delta - 1e-12) {
          best_delta = join_cost[id];
          best = id;
        }
      }
      if (best != a[v]) {
        a[v] = best;
        improved = true;
      }
    }
  }
  return Clustering(std::move(a)).assignment();
}

class Search {
 public:
  Search(const Instance& inst, double incumbent)
      : n_(inst.n()),
        costs_(inst),
        incumbent_(incumbent),
        assign_(n_, -1),
        cutsum_(n_, 0.0),
        gain_(static_cast<std::size_t>(n_) * n_, 0.0) {}

  void Run() { Dfs(0, 0, 0.0); }

  bool found() const { return found_; }
  const std::vector<int>& best() const { return best_assign_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  double& Gain(int w, int c) { return gain_[static_cast<std::size_t>(w) * n_ + c]; }

  double LowerBound(int next, int clusters, double prefix) {
    double lb = prefix;
    for (int w = next; w < n_; ++w) {
      double save = 0.0;
      for (int c = 0; c < clusters; ++c) save = std::max(save, Gain(w, c));
      lb += cutsum_[w] - save;
    }
    return lb;
  }

  void Dfs(int i, int clusters, double prefix) {
    ++nodes_;
    if (i == n_) {
      if (!found_ || prefix < best_cost_ - kTieTolerance) {
        found_ = true;
        best_cost_ = prefix;
        best_assign_ = assign_;
      }
      return;
    }
    const double lb = LowerBound(i, clusters, prefix);
    const double limit =
        found_ ? best_cost_ - kTieTolerance / 2 : incumbent_ + kTieTolerance / 2;
    if (found_ ? lb >= limit : lb > limit) return;

    for (int c = 0; c <= clusters; ++c) {
      const double delta = c < clusters ? cutsum_[i] - Gain(i, c) : cutsum_[i];
      assign_[i] = c;
      for (int w = i + 1; w < n_; ++w) {
        const double cut = costs_.cut(i, w);
        cutsum_[w] += cut;
        Gain(w, c) += cut - costs_.join(i, w);
      }
      Dfs(i + 1, c == clusters ? clusters + 1 : clusters, prefix + delta);
      for (int w = i + 1; w < n_; ++w) {
        const double cut = costs_.cut(i, w);
        cutsum_[w] -= cut;
        Gain(w, c) -= cut - costs_.join(i, w);
      }
    }
    assign_[i] = -1;
  }

  int n_;
  DenseCosts costs_;
  double incumbent_;
  std::vector<int> assign_;
  std::vector<double> cutsum_;
  std::vector<double> gain_;
  bool found_ = false;
  double best_cost_ = 0.0;
  std::vector<int> best_assign_;
  std::int64_t nodes_ = 0;
};

double StepCost(const DenseCosts& c, const std::vector<int>& cluster,
                const std::vector<int>& rest) {
  double total = 0.0;
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    for (std::size_t j = i + 1; j < cluster.size(); ++j) {
      total += c.join(cluster[i], cluster[j]);
    }
    for (int r : rest) total += c.cut(cluster[i], r);
  }
  return total;
}

}  // namespace

PartitionIterator::PartitionIterator(int n)
    : a_(std::max(0, n), 0), prefix_max_(std::max(0, n), 0) {
  if (n < 0) throw ContractViolation("negative partition size");
}

void PartitionIterator::Next() {
  const int n = static_cast<int>(a_.size());
  for (int i = n - 1; i >= 1; --i) {
    if (a_[i] <= prefix_max_[i - 1]) {
      ++a_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], a_[i]);
      for (int j = i + 1; j < n; ++j) {
        a_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return;
    }
  }
  done_ = true;
}

std::uint64_t BellNumber(int n) {
  if (n < 0 || n > 25) throw ContractViolation("Bell number out of range");
  // Bell triangle.
  std::vector<std::uint64_t> row = {1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next = {row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

BruteForceResult BruteForceOpt(const Instance& inst,
                               const BruteForceOptions& options) {
  const int cap = options.max_n > 0 ? options.max_n : kDefaultBruteForceCap;
  const int n = inst.n();
  if (n > cap) {
    throw ContractViolation("brute force limited to n <= " + std::to_string(cap) +
                            ", got n=" + std::to_string(n));
  }
  const DenseCosts costs(inst);
  double incumbent = std::numeric_limits<double>::infinity();
  std::vector<Clustering> seeds = {Clustering::OneCluster(n),
                                   Clustering::Singletons(n)};
  for (const auto& h : options.hints) {
    if (h.size() != n) throw ContractViolation("hint size differs from n");
    seeds.push_back(h);
  }
  for (const auto& s : seeds) {
    incumbent = std::min(incumbent, ClusteringCost(inst, s));
    const Clustering improved(LocalSearch(costs, s.assignment()));
    incumbent = std::min(incumbent, ClusteringCost(inst, improved));
  }

  Search search(inst, incumbent);
  search.Run();
  if (!search.found()) {
    throw NumericalError("branch and bound pruned every partition");
  }
  BruteForceResult result;
  result.clustering = Clustering(search.best());
  result.cost = ClusteringCost(inst, result.clustering);
  result.nodes = search.nodes();
  return result;
}

IntegralityRatio ComputeIntegralityRatio(const Instance& inst,
                                         const BruteForceOptions& brute,
                                         const LpOptions& lp) {
  IntegralityRatio r;
  const auto opt = BruteForceOpt(inst, brute);
  r.opt = opt.cost;
  r.opt_clustering = opt.clustering;
  r.lp = SolveRelaxation(inst, lp).stats.objective;
  if (r.lp > 1e-12) {
    r.ratio = r.opt / r.lp;
  } else {
    r.ratio = r.opt <= 1e-12 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return r;
}

StepExpectation ExactExpectedStepCost(const Instance& inst, const LpSolution& x,
                                      const RoundingScheme& s) {
  const int n = inst.n();
  if (n > 12) throw ContractViolation("step enumeration limited to n <= 12");
  const auto p = CutProbabilities(inst, x, s);
  const DenseCosts costs(inst);
  StepExpectation e;
  if (n == 0) return e;
  for (int w = 0; w < n; ++w) {
    std::vector<int> others;
    for (int u = 0; u < n; ++u) {
      if (u != w) others.push_back(u);
    }
    const int m = static_cast<int>(others.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      double prob = 1.0 / n;
      std::vector<int> cluster = {w};
      std::vector<int> rest;
      for (int b = 0; b < m; ++b) {
        const int u = others[b];
        if ((mask >> b) & 1u) {
          prob *= 1.0 - p(u, w);
          cluster.push_back(u);
        } else {
          prob *= p(u, w);
          rest.push_back(u);
        }
      }
      if (prob == 0.0) continue;
      e.e_alg_0 += prob * StepCost(costs, cluster, rest);
      double volume = 0.0;
      ForEachPair(n, [&](int u, int v) {
        const bool in_u = std::find(rest.begin(), rest.end(), u) == rest.end();
        const bool in_v = std::find(rest.begin(), rest.end(), v) == rest.end();
        if (in_u || in_v) {
          volume += costs.cut(u, v) * x(u, v) + costs.join(u, v) * (1.0 - x(u, v));
        }
      });
      e.e_lp_0 += prob * volume;
    }
  }
  return e;
}

StepExpectation PairwiseExpectedStepCost(const Instance& inst,
                                         const LpSolution& x,
                                         const RoundingScheme& s) {
  const int n = inst.n();
  const auto p = CutProbabilities(inst, x, s);
  auto P = [&](int u, int w) { return u == w ? 0.0 : p(u, w); };
  StepExpectation e;
  if (n == 0) return e;
  for (int w = 0; w < n; ++w) {
    ForEachPair(n, [&](int u, int v) {
      const EdgeLabel t = inst.label(u, v);
      e.e_alg_0 += EdgeCostGivenPivot(t, P(u, w), P(v, w));
      e.e_lp_0 += EdgeLpGivenPivot(t, x(u, v), P(u, w), P(v, w));
    });
  }
  e.e_alg_0 /= n;
  e.e_lp_0 /= n;
  return e;
}

double ExactExpectedPivotCost(const Instance& inst, const PairMatrix<double>& p) {
  const int n = inst.n();
  if (n > 10) throw ContractViolation("pivot expectation limited to n <= 10");
  if (p.size() != n) throw ContractViolation("probability matrix size mismatch");
  const DenseCosts costs(inst);
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<double> expect(full + 1u, 0.0);
  // Subsets in increasing order, so every proper subset is already done.
  for (std::uint32_t set = 1; set <= full; ++set) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if ((set >> v) & 1u) members.push_back(v);
    }
    double total = 0.0;
    for (int w : members) {
      const std::uint32_t others = set & ~(1u << w);
      // Enumerate subsets T of `others` joining the pivot.
      std::uint32_t t = others;
      while (true) {
        double prob = 1.0;
        std::vector<int> cluster = {w};
        std::vector<int> rest;
        for (int u : members) {
          if (u == w) continue;
          if ((t >> u) & 1u) {
            prob *= 1.0 - p(u, w);
            cluster.push_back(u);
          } else {
            prob *= p(u, w);
            rest.push_back(u);
          }
        }
        if (prob != 0.0) {
          total += prob * (StepCost(costs, cluster, rest) + expect[others & ~t]);
        }
        if (t == 0) break;
        t = (t - 1) & others;
      }
    }
    expect[set] = total / static_cast<double>(members.size());
  }
  return expect[full];
}

double ExactExpectedWeightedPivotCost(const Instance& inst, const LpSolution& x,
                                      const RoundingScheme& s) {
  if (!inst.weighted()) throw ContractViolation("weighted instance expected");
  const int n = inst.n();
  const std::size_t pairs = PairCount(n);
  if (pairs > 12) throw ContractViolation("coin enumeration limited to 12 pairs");
  std::vector<std::pair<int, int>> list;
  ForEachPair(n, [&](int u, int v) { list.emplace_back(u, v); });
  double total = 0.0;
  for (std::uint32_t coins = 0; coins < (1u << pairs); ++coins) {
    double prob = 1.0;
    PairMatrix<double> p(n, 0.0);
    for (std::size_t i = 0; i < pairs; ++i) {
      const auto [u, v] = list[i];
      const double lp = inst.lambda_plus(u, v);
      if ((coins >> i) & 1u) {
        prob *= lp;
        p(u, v) = s.f_plus(x(u, v));
      } else {
        prob *= 1.0 - lp;
        p(u, v) = s.f_minus(x(u, v));
      }
    }
    if (prob != 0.0) total += prob * ExactExpectedPivotCost(inst, p);
  }
  return total;
}

}  // namespace ccround
