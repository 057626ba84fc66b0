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

#ifndef CCROUND_ORACLE_H_
#define CCROUND_ORACLE_H_

#include <cstdint>
#include <vector>

#include "ccround/instance.h"
#include "ccround/lp.h"
#include "ccround/pair_matrix.h"
#include "ccround/scheme.h"

namespace ccround {

// Enumerates the set partitions of {0..n-1} as restricted growth strings
// a[0..n-1] (a[0] = 0, a[i] <= 1 + max(a[0..i-1])), in lexicographic order.
class PartitionIterator {
 public:
  explicit PartitionIterator(int n);

  bool done() const { return done_; }
  const std::vector<int>& rgs() const { return a_; }
  void Next();

 private:
  std::vector<int> a_;
  std::vector<int> prefix_max_;  // max of a[0..i]
  bool done_ = false;
};

// Bell number B(n) for n <= 25.
std::uint64_t BellNumber(int n);

inline constexpr int kDefaultBruteForceCap = 13;

struct BruteForceOptions {
  // Largest n accepted; 0 means kDefaultBruteForceCap.
  int max_n = 0;
  // Clusterings whose costs seed the search bound (sizes must match).
  std::vector<Clustering> hints;
};

struct BruteForceResult {
  Clustering clustering;  // first optimal partition in enumeration order
  double cost = 0.0;
  std::int64_t nodes = 0;
};

// Exact optimum by depth-first search over restricted growth strings with
// incremental costs. A subtree is skipped when
//   prefix cost + sum over unplaced w of
//     (cut cost to placed vertices - max(0, best saving of joining one
//      existing cluster))
// shows it cannot beat the incumbent; this bound ignores pairs of unplaced
// vertices, which cost at least 0. The incumbent starts from the one-cluster
// and singleton partitions, the hints, and a local search on them. Throws
// ContractViolation when n exceeds the cap.
BruteForceResult BruteForceOpt(const Instance& inst,
                               const BruteForceOptions& options = {});

struct IntegralityRatio {
  double opt = 0.0;
  double lp = 0.0;
  double ratio = 1.0;  // opt / lp; 1 when both vanish, inf when only lp does
  Clustering opt_clustering;
};

IntegralityRatio ComputeIntegralityRatio(
    const Instance& inst, const BruteForceOptions& brute = {},
    const LpOptions& lp = {});

struct StepExpectation {
  double e_alg_0 = 0.0;
  double e_lp_0 = 0.0;
};

// Expected cost and LP volume settled by the first pivot step, by
// enumerating the pivot and all 2^(n-1) join/cut outcomes. Labeled classes,
// n <= 12.
StepExpectation ExactExpectedStepCost(const Instance& inst, const LpSolution& x,
                                      const RoundingScheme& s);

// Same quantity from the pairwise formula
//   E[ALG_0] = (1/n) sum over w, u < v of e.cost_w(u,v)
// (and likewise for the LP volume), without enumeration.
StepExpectation PairwiseExpectedStepCost(const Instance& inst,
                                         const LpSolution& x,
                                         const RoundingScheme& s);

// Expected cost of the full pivot algorithm on fixed cut probabilities,
// by dynamic programming over the subsets of remaining vertices. n <= 10.
double ExactExpectedPivotCost(const Instance& inst, const PairMatrix<double>& p);

// Expected cost of PivotRoundWeighted: averages ExactExpectedPivotCost over
// all 2^(pairs) coin outcomes. At most 12 pairs.
double ExactExpectedWeightedPivotCost(const Instance& inst, const LpSolution& x,
                                      const RoundingScheme& s);

}  // namespace ccround

#endif  // CCROUND_ORACLE_H_
