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

#ifndef CCROUND_STEP_INEQUALITY_H_
#define CCROUND_STEP_INEQUALITY_H_

#include "ccround/instance.h"
#include "ccround/lp.h"
#include "ccround/scheme.h"

namespace ccround {

struct StepInequality {
  double lhs = 0.0;  // expected ALG of the first pivot step
  double rhs = 0.0;  // alpha times its expected LP volume
  bool holds = true;
};

// First-step expectations as triple sums: ALG(uvw) and LP(uvw) summed over
// all ordered triples of vertices (repeats included) and divided by 6|V|. In
// the complete class every vertex carries a positive self-loop of length 0,
// which only adds to the left side. holds is lhs <= rhs + 1e-9 max(1, rhs).
// Labeled classes only.
StepInequality StepInequalityCheck(const Instance& inst, const LpSolution& x,
                                   const RoundingScheme& s, double alpha);

}  // namespace ccround

#endif  // CCROUND_STEP_INEQUALITY_H_
