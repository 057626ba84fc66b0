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

#include "ccround/triple.h"

#include <algorithm>

#include "ccround/errors.h"

namespace ccround {

namespace {

constexpr double kLengthSlack = 1e-12;

int TypeRank(EdgeLabel t) {
  switch (t) {
    case EdgeLabel::kPlus:
      return 0;
    case EdgeLabel::kMinus:
      return 1;
    case EdgeLabel::kNeutral:
      return 2;
  }
  return 3;
}

}  // namespace

double EdgeCostGivenPivot(EdgeLabel type, double p_u, double p_v) {
  switch (type) {
    case EdgeLabel::kPlus:
      return p_u * (1.0 - p_v) + (1.0 - p_u) * p_v;
    case EdgeLabel::kMinus:
      return (1.0 - p_u) * (1.0 - p_v);
    case EdgeLabel::kNeutral:
      return 0.0;
  }
  return 0.0;
}

double EdgeLpGivenPivot(EdgeLabel type, double x, double p_u, double p_v) {
  switch (type) {
    case EdgeLabel::kPlus:
      return (1.0 - p_u * p_v) * x;
    case EdgeLabel::kMinus:
      return (1.0 - p_u * p_v) * (1.0 - x);
    case EdgeLabel::kNeutral:
      return 0.0;
  }
  return 0.0;
}

TriangleTypes CanonicalTypes(TriangleTypes t) {
  std::sort(t.begin(), t.end(), [](EdgeLabel a, EdgeLabel b) {
    return TypeRank(a) < TypeRank(b);
  });
  return t;
}

std::string TypesToString(const TriangleTypes& t) {
  std::string s = "(";
  for (int k = 0; k < 3; ++k) {
    if (k > 0) s += ',';
    s += t[k] == EdgeLabel::kNeutral ? '0' : LabelChar(t[k]);
  }
  return s + ")";
}

std::vector<TriangleTypes> AdmissibleTypes(GraphClass c) {
  constexpr EdgeLabel P = EdgeLabel::kPlus;
  constexpr EdgeLabel M = EdgeLabel::kMinus;
  constexpr EdgeLabel O = EdgeLabel::kNeutral;
  std::vector<TriangleTypes> out = {{P, P, P}, {P, P, M}, {P, M, M}, {M, M, M}};
  if (c == GraphClass::kKPartite) {
    out.push_back({P, P, O});
    out.push_back({P, M, O});
    out.push_back({M, M, O});
  }
  return out;
}

TripleCosts TripleCostsFromProbabilities(const TriangleTypes& types,
                                         const TriangleLengths& lengths,
                                         const std::array<double, 3>& p,
                                         double alpha) {
  TripleCosts c;
  // Edge k is opposite the vertex that pivots for it; the other two edges
  // join that vertex to the endpoints of k.
  for (int k = 0; k < 3; ++k) {
    const double pi = p[(k + 1) % 3];
    const double pj = p[(k + 2) % 3];
    c.alg += EdgeCostGivenPivot(types[k], pi, pj);
    c.lp += EdgeLpGivenPivot(types[k], lengths[k], pi, pj);
  }
  c.surplus = alpha * c.lp - c.alg;
  return c;
}

TripleCosts TripleCostsFor(const TriangleTypes& types,
                           const TriangleLengths& lengths,
                           const RoundingScheme& s, double alpha) {
  for (int k = 0; k < 3; ++k) {
    const double a = lengths[k];
    if (!(a >= -kLengthSlack && a <= 1.0 + kLengthSlack)) {
      throw ContractViolation("triangle length outside [0,1]");
    }
    if (a > lengths[(k + 1) % 3] + lengths[(k + 2) % 3] + kLengthSlack) {
      throw ContractViolation("lengths violate the triangle inequality");
    }
  }
  const std::array<double, 3> p = {s.Eval(types[0], lengths[0]),
                                   s.Eval(types[1], lengths[1]),
                                   s.Eval(types[2], lengths[2])};
  return TripleCostsFromProbabilities(types, lengths, p, alpha);
}

}  // namespace ccround
