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

#include "ccround/step_inequality.h"

#include <algorithm>
#include <vector>

#include "ccround/errors.h"
#include "ccround/triple.h"

namespace ccround {

StepInequality StepInequalityCheck(const Instance& inst, const LpSolution& x,
                                   const RoundingScheme& s, double alpha) {
  if (inst.weighted()) {
    throw ContractViolation("step inequality check needs a labeled instance");
  }
  if (inst.n() != x.n()) throw ContractViolation("LP point size mismatch");
  const int n = inst.n();
  StepInequality out;
  if (n == 0) return out;

  const EdgeLabel loop = inst.graph_class() == GraphClass::kComplete
                             ? EdgeLabel::kPlus
                             : EdgeLabel::kNeutral;
  std::vector<EdgeLabel> type(static_cast<std::size_t>(n) * n);
  std::vector<double> len(type.size());
  std::vector<double> p(type.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::size_t i = static_cast<std::size_t>(a) * n + b;
      type[i] = a == b ? loop : inst.label(a, b);
      len[i] = x(a, b);
      p[i] = a == b ? 0.0 : s.Eval(type[i], len[i]);
    }
  }
  auto at = [n](int a, int b) { return static_cast<std::size_t>(a) * n + b; };
  // e.cost_c(a, b) and e.lp_c(a, b): edge (a, b) with pivot c.
  auto cost = [&](int a, int b, int c) {
    return EdgeCostGivenPivot(type[at(a, b)], p[at(a, c)], p[at(b, c)]);
  };
  auto lp = [&](int a, int b, int c) {
    return EdgeLpGivenPivot(type[at(a, b)], len[at(a, b)], p[at(a, c)],
                            p[at(b, c)]);
  };

  double alg = 0.0;
  double volume = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        alg += cost(u, v, w) + cost(v, w, u) + cost(w, u, v);
        volume += lp(u, v, w) + lp(v, w, u) + lp(w, u, v);
      }
    }
  }
  out.lhs = alg / (6.0 * n);
  out.rhs = alpha * volume / (6.0 * n);
  out.holds = out.lhs <= out.rhs + 1e-9 * std::max(1.0, out.rhs);
  return out;
}

}  // namespace ccround
