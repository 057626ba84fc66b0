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

#ifndef CCROUND_TRIPLE_H_
#define CCROUND_TRIPLE_H_

#include <array>
#include <string>
#include <vector>

#include "ccround/instance.h"
#include "ccround/scheme.h"

namespace ccround {

// Expected cost of edge (u,v) when w is the pivot, with p_u = p_uw and
// p_v = p_vw: a + edge is violated when exactly one endpoint leaves, a -
// edge when both join.
double EdgeCostGivenPivot(EdgeLabel type, double p_u, double p_v);

// LP mass of (u,v) removed when w is the pivot: the edge leaves the graph
// unless both endpoints are cut from w.
double EdgeLpGivenPivot(EdgeLabel type, double x, double p_u, double p_v);

// Edge types of a triangle. Position k is the edge opposite to vertex k:
// for vertices (u, v, w), position 0 is (v,w), 1 is (w,u), 2 is (u,v).
using TriangleTypes = std::array<EdgeLabel, 3>;
using TriangleLengths = std::array<double, 3>;

// Sorted in the order +, -, 0.
TriangleTypes CanonicalTypes(TriangleTypes t);
std::string TypesToString(const TriangleTypes& t);

// The 4 complete-class types or the 7 k-partite ones (types with exactly two
// neutral edges cannot occur; all-neutral contributes nothing).
std::vector<TriangleTypes> AdmissibleTypes(GraphClass c);

struct TripleCosts {
  double alg = 0.0;
  double lp = 0.0;
  double surplus = 0.0;  // alpha * lp - alg
};

// ALG(uvw) and LP(uvw) summed over the three pivot choices, with the cut
// probability of each edge given explicitly.
TripleCosts TripleCostsFromProbabilities(const TriangleTypes& types,
                                         const TriangleLengths& lengths,
                                         const std::array<double, 3>& p,
                                         double alpha);

// Same with p_k = s.Eval(types[k], lengths[k]). Throws ContractViolation if
// the lengths leave [0,1] or break the triangle inequality by more than
// 1e-12.
TripleCosts TripleCostsFor(const TriangleTypes& types,
                           const TriangleLengths& lengths,
                           const RoundingScheme& s, double alpha);

}  // namespace ccround

#endif  // CCROUND_TRIPLE_H_
