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

#ifndef CCROUND_SRC_TRIANGLE_LP_H_
#define CCROUND_SRC_TRIANGLE_LP_H_

#include <cstdint>
#include <vector>

#include "ccround/lp.h"

namespace ccround::internal {

// Dense-tableau dual simplex for
//
//   min  sum_j cost[j] * x[j]
//   s.t. x[long] - x[a] - x[b] + s = 0,  s >= 0   (one row per cut)
//        0 <= x[j] <= 1
//
// Structural variables are the pair distances. Upper bounds are handled
// implicitly, so the tableau only has one row per triangle cut. With no rows
// the basis is empty and every variable sits at the bound its cost prefers,
// which is dual feasible; adding a cut keeps dual feasibility and
// Reoptimize() restores primal feasibility. Leaving rows are picked by
// largest infeasibility; after a run of pivots without objective progress
// the choice switches to Bland's smallest-index rule, which cannot cycle.
class TriangleLp {
 public:
  TriangleLp(std::vector<double> cost, std::int64_t max_pivots);

  // Adds x[long_side] <= x[side_a] + x[side_b]. Columns are pair indices.
  void AddCut(int long_side, int side_a, int side_b);

  // Runs dual simplex pivots until the working relaxation is optimal.
  void Reoptimize();

  // Current primal point, clamped to [0,1].
  std::vector<double> Values() const;

  int num_rows() const { return static_cast<int>(rows_.size()); }
  std::int64_t pivots() const { return pivots_; }

 private:
  enum class Status : std::int8_t { kBasic, kAtLower, kAtUpper };

  struct Cut {
    int long_side;
    int side_a;
    int side_b;
  };

  double Upper(int col) const;
  double NonbasicValue(int col) const;
  double CurrentValue(int col) const;
  void RecomputeBasicValues();
  void Pivot(int row, int col);
  double DualObjective() const;

  int structurals_;
  std::vector<double> cost_;        // per column, slacks cost 0
  std::vector<double> reduced_;     // reduced cost per column
  std::vector<Status> status_;      // per column
  std::vector<int> basic_row_;      // row of a basic column, -1 otherwise
  std::vector<std::vector<double>> rows_;  // tableau rows, one per cut
  std::vector<int> basis_;          // basic column per row
  std::vector<double> beta_;        // basic value per row
  std::vector<Cut> cuts_;
  std::int64_t pivots_ = 0;
  std::int64_t max_pivots_;
};

}  // namespace ccround::internal

#endif  // CCROUND_SRC_TRIANGLE_LP_H_
