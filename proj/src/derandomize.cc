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

#include "ccround/derandomize.h"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "ccround/errors.h"
#include "ccround/triple.h"

namespace ccround {

namespace {

class StepSurplus {
 public:
  StepSurplus(const Instance& inst, const LpSolution& x, double alpha,
              const std::vector<int>& active, PairMatrix<double>& p)
      : inst_(inst),
        x_(x),
        alpha_(alpha),
        self_loops_(inst.graph_class() == GraphClass::kComplete),
        active_(active),
        p_(p) {}

  double P(int u, int w) const { return u == w ? 0.0 : p_(u, w); }

  // Terms of F that involve p_bw, with p_bw replaced by q.
  double Local(int w, int b, double q) const {
    double total = 0.0;
    for (int v : active_) {
      if (v == b) continue;
      const EdgeLabel t = inst_.label(b, v);
      const double pv = P(v, w);
      total += alpha_ * EdgeLpGivenPivot(t, x_(b, v), q, pv) -
               EdgeCostGivenPivot(t, q, pv);
    }
    if (self_loops_) total -= q * (1.0 - q);
    return total;
  }

  // Surplus term of pivot w.
  double Pivot(int w) const {
    double total = 0.0;
    for (std::size_t i = 0; i < active_.size(); ++i) {
      const int u = active_[i];
      const double pu = P(u, w);
      for (std::size_t j = i + 1; j < active_.size(); ++j) {
        const int v = active_[j];
        const EdgeLabel t = inst_.label(u, v);
        const double pv = P(v, w);
        total += alpha_ * EdgeLpGivenPivot(t, x_(u, v), pu, pv) -
                 EdgeCostGivenPivot(t, pu, pv);
      }
      if (self_loops_) total -= pu * (1.0 - pu);
    }
    return total;
  }

  double Total() const {
    double total = 0.0;
    for (int w : active_) total += Pivot(w);
    return total;
  }

 private:
  const Instance& inst_;
  const LpSolution& x_;
  double alpha_;
  bool self_loops_;
  const std::vector<int>& active_;
  PairMatrix<double>& p_;
};

}  // namespace

DerandomizeResult DerandomizeRound(const Instance& inst, const LpSolution& x,
                                   const RoundingScheme& s, double alpha) {
  if (inst.weighted()) {
    throw ContractViolation("derandomized rounding needs a labeled instance");
  }
  const PairMatrix<double> base = CutProbabilities(inst, x, s);
  PairMatrix<double> p = base;
  const int n = inst.n();
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = v;
  std::vector<int> assignment(n, -1);

  DerandomizeResult result;
  result.min_flip_gain = std::numeric_limits<double>::infinity();
  int next_id = 0;
  while (!active.empty()) {
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        p(active[i], active[j]) = base(active[i], active[j]);
      }
    }
    StepSurplus surplus(inst, x, alpha, active, p);
    result.initial_surplus.push_back(surplus.Total());

    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const int a = active[i];
        const int b = active[j];
        auto value = [&](double q) {
          return surplus.Local(a, b, q) + surplus.Local(b, a, q);
        };
        const double before = value(p(a, b));
        const double v0 = value(0.0);
        const double v1 = value(1.0);
        const double chosen = v1 > v0 ? 1.0 : 0.0;
        result.min_flip_gain =
            std::min(result.min_flip_gain, std::max(v0, v1) - before);
        p(a, b) = chosen;
      }
    }
    result.rounded_surplus.push_back(surplus.Total());

    int pivot = active.front();
    double best = surplus.Pivot(pivot);
    for (int w : active) {
      const double g = surplus.Pivot(w);
      if (g > best) {
        best = g;
        pivot = w;
      }
    }
    result.pivot_surplus.push_back(best);

    PivotStep step{pivot, {}};
    std::vector<int> rest;
    for (int u : active) {
      if (u == pivot || p(u, pivot) == 0.0) {
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
  if (result.min_flip_gain == std::numeric_limits<double>::infinity()) {
    result.min_flip_gain = 0.0;
  }
  result.clustering = Clustering(std::move(assignment));
  return result;
}

}  // namespace ccround
