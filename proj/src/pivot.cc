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

#include "ccround/pivot.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <utility>
#include <vector>

#include "ccround/errors.h"

namespace ccround {

namespace {

void CheckSizes(const Instance& inst, const LpSolution& x) {
  if (inst.n() != x.n()) {
    throw ContractViolation("LP point and instance differ in size");
  }
}

}  // namespace

PairMatrix<double> CutProbabilities(const Instance& inst, const LpSolution& x,
                                    const RoundingScheme& s) {
  CheckSizes(inst, x);
  if (inst.weighted()) {
    throw ContractViolation("CutProbabilities needs a labeled instance");
  }
  PairMatrix<double> p(inst.n(), 0.0);
  ForEachPair(inst.n(), [&](int u, int v) {
    p(u, v) = s.Eval(inst.label(u, v), x(u, v));
  });
  return p;
}

PivotResult PivotWithProbabilities(const PairMatrix<double>& p,
                                   SplitMix64& rng) {
  const int n = p.size();
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = v;
  std::vector<int> assignment(n, -1);
  PivotResult result;
  int next_id = 0;
  while (!active.empty()) {
    const int w = active[rng.Below(active.size())];
    PivotStep step{w, {}};
    std::vector<int> rest;
    for (int u : active) {
      if (u == w || !rng.Bernoulli(p(u, w))) {
        step.cluster.push_back(u);
        assignment[u] = next_id;
      } else {
        rest.push_back(u);
      }
    }
    ++next_id;
    result.trace.push_back(std::move(step));
    active = std::move(rest);
  }
  result.clustering = Clustering(std::move(assignment));
  return result;
}

PivotResult PivotRound(const Instance& inst, const LpSolution& x,
                       const RoundingScheme& s, std::uint64_t seed) {
  const auto p = CutProbabilities(inst, x, s);
  SplitMix64 rng(seed);
  return PivotWithProbabilities(p, rng);
}

PivotResult PivotRoundWeighted(const Instance& inst, const LpSolution& x,
                               const RoundingScheme& s, std::uint64_t seed) {
  CheckSizes(inst, x);
  if (!inst.weighted()) {
    throw ContractViolation("PivotRoundWeighted needs a weighted instance");
  }
  SplitMix64 coins(SplitMix64::DeriveSeed(seed, 1));
  PairMatrix<double> p(inst.n(), 0.0);
  ForEachPair(inst.n(), [&](int u, int v) {
    const bool plus = coins.Bernoulli(inst.lambda_plus(u, v));
    p(u, v) = plus ? s.f_plus(x(u, v)) : s.f_minus(x(u, v));
  });
  SplitMix64 rng(seed);
  return PivotWithProbabilities(p, rng);
}

PivotResult RoundOnce(const Instance& inst, const LpSolution& x,
                      const RoundingScheme& s, std::uint64_t seed) {
  return inst.weighted() ? PivotRoundWeighted(inst, x, s, seed)
                         : PivotRound(inst, x, s, seed);
}

MonteCarloStats MonteCarloRatio(const Instance& inst, const LpSolution& x,
                                const RoundingScheme& s, int trials,
                                std::uint64_t seed, int jobs) {
  if (trials < 1) throw ContractViolation("trials must be positive");
  jobs = std::clamp(jobs, 1, trials);
  std::vector<double> costs(trials);
  auto work = [&](int first) {
    for (int i = first; i < trials; i += jobs) {
      const auto r = RoundOnce(inst, x, s, SplitMix64::DeriveSeed(seed, i));
      costs[i] = ClusteringCost(inst, r.clustering);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }

  MonteCarloStats stats;
  stats.trials = trials;
  stats.min = costs[0];
  stats.max = costs[0];
  double mean = 0.0;
  double m2 = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double c = costs[i];
    const double delta = c - mean;
    mean += delta / (i + 1);
    m2 += delta * (c - mean);
    stats.min = std::min(stats.min, c);
    stats.max = std::max(stats.max, c);
  }
  stats.mean = mean;
  stats.stddev = trials > 1 ? std::sqrt(m2 / (trials - 1)) : 0.0;
  stats.sem = stats.stddev / std::sqrt(static_cast<double>(trials));
  stats.lp = LpObjective(inst, x);
  if (stats.lp > 1e-12) {
    stats.ratio = stats.mean / stats.lp;
  } else {
    stats.ratio = stats.mean <= 1e-12 ? 1.0
                                      : std::numeric_limits<double>::infinity();
  }
  return stats;
}

}  // namespace ccround
