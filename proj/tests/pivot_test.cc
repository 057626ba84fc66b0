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
#include <functional>
#include <vector>

#include "ccround/generators.h"
#include "ccround/lp.h"
#include "ccround/oracle.h"
#include "ccround/rng.h"
#include "ccround/triple.h"
#include "gtest/gtest.h"

namespace ccround {
namespace {

constexpr EdgeLabel kP = EdgeLabel::kPlus;
constexpr EdgeLabel kM = EdgeLabel::kMinus;

void ExpectValidTrace(const PivotResult& r, int n) {
  ASSERT_EQ(r.clustering.size(), n);
  std::vector<int> seen(n, 0);
  for (const PivotStep& step : r.trace) {
    EXPECT_TRUE(std::is_sorted(step.cluster.begin(), step.cluster.end()));
    EXPECT_TRUE(std::binary_search(step.cluster.begin(), step.cluster.end(),
                                   step.pivot));
    for (int v : step.cluster) {
      ++seen[v];
      EXPECT_TRUE(r.clustering.Together(v, step.pivot));
    }
  }
  for (int v = 0; v < n; ++v) EXPECT_EQ(seen[v], 1) << v;
  EXPECT_EQ(static_cast<int>(r.trace.size()), r.clustering.num_clusters());
}

// Expected pivot-algorithm cost by recursion over the remaining vertices,
// branching on every pivot and every join/cut outcome. Also accumulates the
// expected cost of the edge opposite the first pivot (n = 3 only).
struct Enumerated {
  double total = 0.0;
  double opposite_first = 0.0;
};

Enumerated EnumeratePivot(const Instance& inst, const PairMatrix<double>& p) {
  Enumerated out;
  const int n = inst.n();
  std::function<void(std::vector<int>, double, bool)> rec =
      [&](std::vector<int> rest, double prob, bool first) {
        if (rest.empty()) return;
        const double pick = prob / static_cast<double>(rest.size());
        for (int w : rest) {
          std::vector<int> others;
          for (int u : rest) {
            if (u != w) others.push_back(u);
          }
          const int m = static_cast<int>(others.size());
          for (int mask = 0; mask < (1 << m); ++mask) {
            double q = pick;
            std::vector<int> in = {w};
            std::vector<int> out_set;
            for (int b = 0; b < m; ++b) {
              const int u = others[b];
              if (mask & (1 << b)) {
                q *= 1.0 - p(u, w);
                in.push_back(u);
              } else {
                q *= p(u, w);
                out_set.push_back(u);
              }
            }
            double cost = 0.0;
            for (int a : in) {
              for (int b : in) {
                if (a < b) cost += inst.join_cost(a, b);
              }
              for (int b : out_set) cost += inst.cut_cost(a, b);
            }
            out.total += q * cost;
            if (first && n == 3) {
              const int a = others[0];
              const int b = others[1];
              const bool a_in = (mask & 1) != 0;
              const bool b_in = (mask & 2) != 0;
              // Both cut: the edge is still open after this step.
              if (a_in && b_in) out.opposite_first += q * inst.join_cost(a, b);
              if (a_in != b_in) out.opposite_first += q * inst.cut_cost(a, b);
            }
            rec(out_set, q, false);
          }
        }
      };
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  rec(all, 1.0, true);
  return out;
}

TEST(PivotRoundTest, AllPlusAtZeroIsOneCluster) {
  const Instance inst = GenerateCompleteRandom(8, 1.0, 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PivotResult r =
        PivotRound(inst, LpSolution(8, 0.0), PresetScheme("complete206"), seed);
    EXPECT_EQ(r.clustering.num_clusters(), 1);
    ExpectValidTrace(r, 8);
  }
}

TEST(PivotRoundTest, AllMinusAtOneIsSingletons) {
  const Instance inst = GenerateCompleteRandom(7, 0.0, 1);
  const PivotResult r =
      PivotRound(inst, LpSolution(7, 1.0), PresetScheme("complete206"), 3);
  EXPECT_EQ(r.clustering.num_clusters(), 7);
}

TEST(PivotRoundTest, ValidTracesAndReproducible) {
  const RoundingScheme s = PresetScheme("kpartite3");
  const Instance inst = GenerateKPartiteRandom({3, 3, 4}, 0.5, 8);
  const LpResult lp = SolveRelaxation(inst);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PivotResult a = PivotRound(inst, lp.x, s, seed);
    ExpectValidTrace(a, inst.n());
    const PivotResult b = PivotRound(inst, lp.x, s, seed);
    EXPECT_EQ(a.clustering, b.clustering);
  }
}

TEST(PivotRoundTest, CutProbabilities) {
  const Instance inst = GenerateKPartiteRandom({2, 2}, 0.5, 3);
  LpSolution x(4, 0.5);
  const RoundingScheme s = PresetScheme("kpartite3");
  const auto p = CutProbabilities(inst, x, s);
  ForEachPair(4, [&](int u, int v) {
    EXPECT_EQ(p(u, v), s.Eval(inst.label(u, v), 0.5));
  });
}

TEST(PivotRoundTest, BadTriangleMatchesEnumeration) {
  PairMatrix<EdgeLabel> labels(3, kP);
  labels(0, 1) = kM;
  const Instance inst = Instance::Complete(labels);
  LpSolution x(3, 0.25);
  x.set(0, 1, 0.5);
  const RoundingScheme s = PresetScheme("complete206");
  const auto p = CutProbabilities(inst, x, s);
  const Enumerated e = EnumeratePivot(inst, p);
  EXPECT_NEAR(ExactExpectedPivotCost(inst, p), e.total, 1e-14);
  // Vertex k is opposite position k.
  const TriangleTypes types = {kP, kP, kM};
  const TripleCosts t = TripleCostsFor(types, {0.25, 0.25, 0.5}, s, 2.06);
  EXPECT_NEAR(t.alg / 3.0, e.opposite_first, 1e-14);
}

TEST(PivotRoundTest, ExactCostMatchesEnumerationOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = GenerateCompleteRandom(6, 0.5, seed);
    const LpResult lp = SolveRelaxation(inst);
    const auto p = CutProbabilities(inst, lp.x, PresetScheme("acn_linear"));
    EXPECT_NEAR(ExactExpectedPivotCost(inst, p), EnumeratePivot(inst, p).total,
                1e-12);
  }
}

TEST(PivotRoundTest, EmpiricalMeanMatchesExpectation) {
  const Instance inst = GenerateCompleteRandom(7, 0.5, 12);
  const LpResult lp = SolveRelaxation(inst);
  const RoundingScheme s = PresetScheme("complete206");
  const MonteCarloStats mc = MonteCarloRatio(inst, lp.x, s, 20000, 99);
  const double exact = ExactExpectedPivotCost(inst, CutProbabilities(inst, lp.x, s));
  EXPECT_LE(std::abs(mc.mean - exact), 3.0 * mc.sem);
}

TEST(PivotRoundWeightedTest, AllPlusMatchesLabeledRun) {
  const Instance weighted = Instance::Weighted(PairMatrix<double>(6, 1.0), true);
  const Instance labeled = GenerateCompleteRandom(6, 1.0, 0);
  const RoundingScheme s = PresetScheme("weighted_ti_150");
  LpSolution x(6, 0.0);
  ForEachPair(6, [&](int u, int v) { x.set(u, v, 0.1 * ((u + v) % 4)); });
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PivotResult a = PivotRoundWeighted(weighted, x, s, seed);
    const PivotResult b = PivotRound(labeled, x, s, seed);
    EXPECT_EQ(a.clustering, b.clustering);
    ExpectValidTrace(a, 6);
  }
}

TEST(PivotRoundWeightedTest, AllMinusAtOneIsSingletons) {
  const Instance inst = Instance::Weighted(PairMatrix<double>(5, 0.0), true);
  const PivotResult r =
      RoundOnce(inst, LpSolution(5, 1.0), PresetScheme("weighted_ti_153"), 4);
  EXPECT_EQ(r.clustering.num_clusters(), 5);
}

TEST(PivotRoundWeightedTest, EmpiricalMeanMatchesExpectation) {
  const RoundingScheme s = PresetScheme("weighted_ti_150");
  for (std::uint64_t seed : {2, 5}) {
    const Instance inst = GenerateWeightedRandom(3, true, seed);
    const LpResult lp = SolveRelaxation(inst);
    const MonteCarloStats mc = MonteCarloRatio(inst, lp.x, s, 20000, seed);
    const double exact = ExactExpectedWeightedPivotCost(inst, lp.x, s);
    EXPECT_LE(std::abs(mc.mean - exact), 3.0 * mc.sem) << seed;
  }
}

TEST(MonteCarloTest, Basics) {
  const Instance plus = GenerateCompleteRandom(6, 1.0, 0);
  const RoundingScheme s = PresetScheme("complete206");
  const MonteCarloStats zero = MonteCarloRatio(plus, LpSolution(6, 0.0), s, 50, 1);
  EXPECT_EQ(zero.mean, 0.0);
  EXPECT_EQ(zero.ratio, 1.0);

  const Instance inst = GenerateCompleteRandom(9, 0.5, 4);
  const LpResult lp = SolveRelaxation(inst);
  const MonteCarloStats one = MonteCarloRatio(inst, lp.x, s, 1, 77);
  const double single = ClusteringCost(
      inst, RoundOnce(inst, lp.x, s, SplitMix64::DeriveSeed(77, 0)).clustering);
  EXPECT_EQ(one.mean, single);
  EXPECT_EQ(one.min, single);
  EXPECT_EQ(one.max, single);
}

TEST(MonteCarloTest, IndependentOfJobs) {
  const Instance inst = GenerateCompleteRandom(9, 0.5, 6);
  const LpResult lp = SolveRelaxation(inst);
  const RoundingScheme s = PresetScheme("complete206");
  const MonteCarloStats a = MonteCarloRatio(inst, lp.x, s, 301, 5, 1);
  const MonteCarloStats b = MonteCarloRatio(inst, lp.x, s, 301, 5, 4);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.stddev, b.stddev);
  EXPECT_EQ(a.min, b.min);
  EXPECT_EQ(a.max, b.max);
}

TEST(MonteCarloTest, RatioWithinGuarantee) {
  const Instance inst = GenerateCompleteRandom(9, 0.5, 3);
  const LpResult lp = SolveRelaxation(inst);
  const MonteCarloStats mc =
      MonteCarloRatio(inst, lp.x, PresetScheme("complete206"), 2000, 11, 2);
  EXPECT_LE(mc.ratio, 2.06 + 3.0 * mc.sem / mc.lp);
  EXPECT_NEAR(mc.sem, mc.stddev / std::sqrt(2000.0), 1e-12);
}

}  // namespace
}  // namespace ccround
