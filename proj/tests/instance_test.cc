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

#include "ccround/instance.h"

#include <cmath>
#include <string>
#include <vector>

#include "ccround/errors.h"
#include "ccround/generators.h"
#include "ccround/instance_io.h"
#include "ccround/oracle.h"
#include "gtest/gtest.h"

namespace ccround {
namespace {

Instance Triangle(EdgeLabel a, EdgeLabel b, EdgeLabel c) {
  PairMatrix<EdgeLabel> labels(3, EdgeLabel::kPlus);
  labels(1, 2) = a;
  labels(0, 2) = b;
  labels(0, 1) = c;
  return Instance::Complete(labels);
}

constexpr EdgeLabel kP = EdgeLabel::kPlus;
constexpr EdgeLabel kM = EdgeLabel::kMinus;
constexpr EdgeLabel k0 = EdgeLabel::kNeutral;

TEST(ClusteringCostTest, AllPlusTriangleOneClusterIsFree) {
  EXPECT_EQ(ClusteringCost(Triangle(kP, kP, kP), Clustering::OneCluster(3)), 0.0);
}

TEST(ClusteringCostTest, BadTriangleCostsAtLeastOneEverywhere) {
  const Instance inst = Triangle(kP, kP, kM);
  int partitions = 0;
  for (PartitionIterator it(3); !it.done(); it.Next()) {
    EXPECT_GE(ClusteringCost(inst, Clustering(it.rgs())), 1.0);
    ++partitions;
  }
  EXPECT_EQ(partitions, 5);
}

TEST(ClusteringCostTest, WeightedPair) {
  PairMatrix<double> lp(2, 0.7);
  const Instance inst = Instance::Weighted(lp, false);
  EXPECT_DOUBLE_EQ(ClusteringCost(inst, Clustering::Singletons(2)), 0.7);
  EXPECT_NEAR(ClusteringCost(inst, Clustering::OneCluster(2)), 0.3, 1e-15);
}

TEST(ClusteringCostTest, InvariantUnderRelabeling) {
  const Instance inst = GenerateCompleteRandom(7, 0.5, 11);
  const Clustering a({0, 1, 0, 2, 1, 2, 0});
  const Clustering b({5, 3, 5, 9, 3, 9, 5});
  EXPECT_EQ(ClusteringCost(inst, a), ClusteringCost(inst, b));
}

TEST(ClusteringCostTest, MatchesDirectPairCount) {
  const Instance inst = GenerateCompleteRandom(8, 0.4, 2);
  const Clustering c({0, 0, 1, 1, 2, 0, 1, 3});
  int disagreements = 0;
  ForEachPair(8, [&](int u, int v) {
    const bool together = c[u] == c[v];
    if (inst.label(u, v) == kP && !together) ++disagreements;
    if (inst.label(u, v) == kM && together) ++disagreements;
  });
  EXPECT_EQ(ClusteringCost(inst, c), disagreements);
}

TEST(InstanceTest, ClassValidation) {
  PairMatrix<EdgeLabel> labels(3, kP);
  labels(0, 1) = k0;
  EXPECT_THROW(Instance::Complete(labels), ContractViolation);
  PairMatrix<EdgeLabel> across(3, kP);
  EXPECT_THROW(Instance::KPartite({0, 0, 1}, across), ContractViolation);
  PairMatrix<double> bad(2, 1.5);
  EXPECT_THROW(Instance::Weighted(bad, false), ContractViolation);
}

TEST(InstanceTest, TriangleInequalityOnLambdaMinus) {
  PairMatrix<double> lp(3, 1.0);
  lp(0, 1) = 0.0;  // lambda- = 1 on one side, 0 on the others
  EXPECT_THROW(Instance::Weighted(lp, true), ContractViolation);
  EXPECT_NO_THROW(Instance::Weighted(lp, false));
  EXPECT_NEAR(WorstLambdaMinusTriangleViolation(lp), 1.0, 1e-15);
}

TEST(GeneratorTest, CompleteRandom) {
  EXPECT_EQ(PairCount(GenerateCompleteRandom(1, 0.3, 5).n()), 0u);
  const Instance all_plus = GenerateCompleteRandom(5, 1.0, 9);
  int plus = 0;
  ForEachPair(5, [&](int u, int v) { plus += all_plus.label(u, v) == kP; });
  EXPECT_EQ(plus, 10);
  EXPECT_EQ(GenerateCompleteRandom(20, 0.5, 7), GenerateCompleteRandom(20, 0.5, 7));
  EXPECT_NE(GenerateCompleteRandom(20, 0.5, 7), GenerateCompleteRandom(20, 0.5, 8));
}

TEST(GeneratorTest, KPartiteRandom) {
  const Instance two = GenerateKPartiteRandom({2, 2}, 1.0, 1);
  int plus = 0;
  int neutral = 0;
  ForEachPair(4, [&](int u, int v) {
    plus += two.label(u, v) == kP;
    neutral += two.label(u, v) == k0;
  });
  EXPECT_EQ(plus, 4);
  EXPECT_EQ(neutral, 2);
  const Instance one = GenerateKPartiteRandom({3}, 0.5, 1);
  ForEachPair(3, [&](int u, int v) { EXPECT_EQ(one.label(u, v), k0); });
  EXPECT_EQ(GenerateKPartiteRandom({2, 3}, 0.5, 4),
            GenerateKPartiteRandom({2, 3}, 0.5, 4));
}

TEST(GeneratorTest, Planted) {
  const auto clean = GeneratePlanted(10, 3, 0.0, 5);
  EXPECT_EQ(ClusteringCost(clean.instance, clean.planted), 0.0);
  const auto flipped = GeneratePlanted(6, 1, 1.0, 5);
  EXPECT_EQ(ClusteringCost(flipped.instance, flipped.planted), 15.0);
  const auto noisy = GeneratePlanted(12, 3, 0.1, 21);
  EXPECT_LE(BruteForceOpt(noisy.instance).cost,
            ClusteringCost(noisy.instance, noisy.planted));
}

TEST(GeneratorTest, GapTriangleInequality) {
  const Instance one = GenerateGapTriangleInequality(1);
  ASSERT_EQ(one.n(), 2);
  EXPECT_NEAR(one.lambda_minus(0, 1), 1.0 / 3.0, 1e-15);
  const Instance four = GenerateGapTriangleInequality(4);
  EXPECT_TRUE(four.triangle_inequality());
  EXPECT_NEAR(ClusteringCost(four, Clustering::OneCluster(8)), 40.0 / 3.0, 1e-12);
  LpSolution x(8, 1.0);
  for (int u = 0; u < 4; ++u) {
    for (int v = 4; v < 8; ++v) x.set(u, v, 0.5);
  }
  EXPECT_NEAR(LpObjective(four, x), 12.0, 1e-12);
}

TEST(GeneratorTest, GapKPartitePoint) {
  const auto c4 = GapKPartiteLpPoint(EvenCycle(2));
  EXPECT_NEAR(LpObjective(c4.instance, c4.lp), 4.0 / 3.0, 1e-12);
  EXPECT_TRUE(ValidateSolution(c4.lp, 1e-12).feasible);
  const auto edge = GapKPartiteLpPoint(BipartiteGraph{1, 1, {{0, 0}}});
  EXPECT_NEAR(LpObjective(edge.instance, edge.lp), 1.0 / 3.0, 1e-12);
  const auto c6 = GapKPartiteLpPoint(EvenCycle(3));
  EXPECT_NEAR(LpObjective(c6.instance, c6.lp), 2.0, 1e-12);
  EXPECT_GE(BruteForceOpt(c6.instance).cost, 2.0 - 1e-9);
}

TEST(GeneratorTest, BlowupDegenerateWeights) {
  const Instance ones = Instance::Weighted(PairMatrix<double>(3, 1.0), true);
  const Blowup b = WeightedToUnweighted(ones, 3, 4);
  ForEachPair(9, [&](int u, int v) { EXPECT_EQ(b.instance.label(u, v), kP); });

  PairMatrix<double> lp(3, 1.0);
  lp(0, 2) = 0.0;
  const Blowup same = WeightedToUnweighted(Instance::Weighted(lp, false), 1, 4);
  EXPECT_EQ(same.instance.label(0, 1), kP);
  EXPECT_EQ(same.instance.label(0, 2), kM);
  EXPECT_EQ(same.instance.label(1, 2), kP);
}

TEST(GeneratorTest, BlowupMatchesWeightedOptimumAtSmallScale) {
  const Instance w = GenerateWeightedRandom(3, true, 3);
  const Blowup b = WeightedToUnweighted(w, 4, 17);
  const double w_opt = BruteForceOpt(w).cost;
  const double b_opt = BruteForceOpt(b.instance).cost;
  EXPECT_NEAR(b_opt / 16.0, w_opt, 0.15);
}

TEST(GeneratorTest, LiftClustering) {
  const Instance w = GenerateWeightedRandom(3, true, 8);
  const Blowup one = WeightedToUnweighted(w, 1, 2);
  const Clustering c({0, 1, 0});
  EXPECT_EQ(LiftClustering(c, one.original_of, 5), c);

  const Blowup four = WeightedToUnweighted(w, 4, 2);
  const Clustering lifted =
      LiftClustering(Clustering::OneCluster(12), four.original_of, 5);
  EXPECT_EQ(lifted.num_clusters(), 1);

  const Clustering mixed({0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3});
  EXPECT_EQ(LiftClustering(mixed, four.original_of, 9),
            LiftClustering(mixed, four.original_of, 9));
}

TEST(InstanceIoTest, RoundTripRandomInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Instance inst;
    switch (seed % 4) {
      case 0:
        inst = GenerateCompleteRandom(1 + seed % 9, 0.5, seed);
        break;
      case 1:
        inst = GenerateKPartiteRandom({1 + static_cast<int>(seed % 3), 2, 3}, 0.5, seed);
        break;
      case 2:
        inst = GenerateWeightedRandom(2 + seed % 6, true, seed);
        break;
      default:
        inst = GenerateWeightedRandom(2 + seed % 6, false, seed);
        break;
    }
    EXPECT_EQ(ParseInstance(SerializeInstance(inst)), inst) << seed;
    EXPECT_EQ(ParseInstance(SerializeInstance(inst, InstanceFormat::kJson)), inst)
        << seed;
  }
}

TEST(InstanceIoTest, EdgeListLine) {
  const Instance inst = ParseInstance("cc complete 2\n0 1 +\n");
  EXPECT_EQ(inst.label(0, 1), kP);
}

TEST(InstanceIoTest, CommentsAndReversedPairs) {
  const Instance inst =
      ParseInstance("# header comment\ncc complete 3\n1 0 -  # reversed\n2 0 +\n1 2 +\n");
  EXPECT_EQ(inst.label(0, 1), kM);
}

TEST(InstanceIoTest, Rejections) {
  EXPECT_THROW(ParseInstance("cc weighted 2\n0 1 0.5 0.6\n"), DataFormatError);
  EXPECT_THROW(ParseInstance("cc complete 2\n"), DataFormatError);
  EXPECT_THROW(ParseInstance("cc complete 2\n0 1 +\n0 1 +\n"), DataFormatError);
  EXPECT_THROW(ParseInstance("cc complete 2\n0 2 +\n"), DataFormatError);
  EXPECT_THROW(ParseInstance("cc complete 2\n0 1 *\n"), DataFormatError);
  EXPECT_THROW(ParseInstance("cc complete 2\n0 0 +\n0 1 +\n"), DataFormatError);
  EXPECT_THROW(ParseInstance("hello"), DataFormatError);
  EXPECT_THROW(ParseInstance("{\"class\": \"complete\"}"), DataFormatError);
  EXPECT_THROW(ParseInstance("{not json"), DataFormatError);
  EXPECT_THROW(ParseInstance("cc weighted 3 ti\n0 1 0\n0 2 1\n1 2 1\n"),
               DataFormatError);
}

TEST(InstanceIoTest, ClusteringJson) {
  const Clustering c({0, 1, 1, 2});
  EXPECT_EQ(ClusteringFromJson(ClusteringToJson(c)), c);
}

}  // namespace
}  // namespace ccround
