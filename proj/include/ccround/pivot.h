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

#ifndef CCROUND_PIVOT_H_
#define CCROUND_PIVOT_H_

#include <cstdint>
#include <vector>

#include "ccround/instance.h"
#include "ccround/lp.h"
#include "ccround/pair_matrix.h"
#include "ccround/rng.h"
#include "ccround/scheme.h"

namespace ccround {

struct PivotStep {
  int pivot = 0;
  std::vector<int> cluster;  // ascending, contains pivot
};

using PivotTrace = std::vector<PivotStep>;

struct PivotResult {
  Clustering clustering;
  PivotTrace trace;
};

// p_uv = f^{type(u,v)}(x_uv) for a labeled instance.
PairMatrix<double> CutProbabilities(const Instance& inst, const LpSolution& x,
                                    const RoundingScheme& s);

// The pivot loop on fixed cut probabilities: pick a pivot uniformly among
// the remaining vertices, then visit the other remaining vertices in
// ascending id and keep each with probability 1 - p_uw. Draws from `rng`.
PivotResult PivotWithProbabilities(const PairMatrix<double>& p,
                                   SplitMix64& rng);

// Labeled classes. One SplitMix64 stream seeded with `seed`.
PivotResult PivotRound(const Instance& inst, const LpSolution& x,
                       const RoundingScheme& s, std::uint64_t seed);

// Weighted class: every pair first flips a coin (in PairIndex order, on the
// stream DeriveSeed(seed, 1)) and takes p = f+(x) with probability lambda+,
// p = f-(x) otherwise; the pivot loop then runs on SplitMix64(seed). With
// lambda+ in {0,1} this matches PivotRound on the induced labels.
PivotResult PivotRoundWeighted(const Instance& inst, const LpSolution& x,
                               const RoundingScheme& s, std::uint64_t seed);

// Dispatches on the instance class.
PivotResult RoundOnce(const Instance& inst, const LpSolution& x,
                      const RoundingScheme& s, std::uint64_t seed);

struct MonteCarloStats {
  int trials = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double sem = 0.0;     // stddev / sqrt(trials)
  double min = 0.0;
  double max = 0.0;
  double lp = 0.0;
  double ratio = 0.0;   // mean / lp; 1 if both are 0, inf if only lp is
};

// Trial i runs RoundOnce with seed DeriveSeed(seed, i). Trials are split
// over `jobs` threads; the result does not depend on `jobs`.
MonteCarloStats MonteCarloRatio(const Instance& inst, const LpSolution& x,
                                const RoundingScheme& s, int trials,
                                std::uint64_t seed, int jobs = 1);

}  // namespace ccround

#endif  // CCROUND_PIVOT_H_
