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

#ifndef CCROUND_DERANDOMIZE_H_
#define CCROUND_DERANDOMIZE_H_

#include <vector>

#include "ccround/instance.h"
#include "ccround/lp.h"
#include "ccround/pivot.h"
#include "ccround/scheme.h"

namespace ccround {

struct DerandomizeResult {
  Clustering clustering;
  PivotTrace trace;
  // Per step: the surplus sum over pivots with the scheme's probabilities,
  // after rounding every probability to 0/1, and of the chosen pivot alone.
  std::vector<double> initial_surplus;
  std::vector<double> rounded_surplus;
  std::vector<double> pivot_surplus;
  // Smallest change of the surplus sum caused by a single 0/1 flip.
  double min_flip_gain = 0.0;
};

// Deterministic pivot rounding for the labeled classes. At every step the
// cut probabilities p_uw = f(x_uw) among the remaining vertices are rounded
// one pair at a time, in lexicographic order, to whichever of 0 and 1 gives
// the larger surplus
//
//   F = sum over pivots w, pairs u < v of alpha * e.lp_w(u,v) - e.cost_w(u,v)
//       - [complete] sum over w, u of p_uw (1 - p_uw)
//
// (ties go to 0). The pivot is then the w with the largest surplus term
// (ties to the smaller id) and its cluster is w plus every u with p_uw = 0.
// The last sum is the positive self-loop of each vertex in the complete
// class. Throws ContractViolation on a weighted instance.
DerandomizeResult DerandomizeRound(const Instance& inst, const LpSolution& x,
                                   const RoundingScheme& s, double alpha);

}  // namespace ccround

#endif  // CCROUND_DERANDOMIZE_H_
