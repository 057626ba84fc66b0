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

#include "triangle_lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "ccround/errors.h"

namespace ccround::internal {

namespace {

constexpr double kPrimalTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kDropTol = 1e-13;
constexpr int kStallPivotsBeforeBland = 50;

}  // namespace

TriangleLp::TriangleLp(std::vector<double> cost, std::int64_t max_pivots)
    : structurals_(static_cast<int>(cost.size())),
      cost_(std::move(cost)),
      reduced_(cost_),
      status_(cost_.size()),
      basic_row_(cost_.size(), -1),
      max_pivots_(max_pivots) {
  for (std::size_t j = 0; j < cost_.size(); ++j) {
    status_[j] = cost_[j] < 0.0 ? Status::kAtUpper : Status::kAtLower;
  }
}

double TriangleLp::Upper(int col) const {
  return col < structurals_ ? 1.0 : std::numeric_limits<double>::infinity();
}

double TriangleLp::NonbasicValue(int col) const {
  return status_[col] == Status::kAtUpper ? 1.0 : 0.0;
}

double TriangleLp::CurrentValue(int col) const {
  const int row = basic_row_[col];
  return row >= 0 ? beta_[row] : NonbasicValue(col);
}

void TriangleLp::AddCut(int long_side, int side_a, int side_b) {
  const std::size_t slack = cost_.size();
  for (auto& row : rows_) row.push_back(0.0);

  std::vector<double> row(slack + 1, 0.0);
  row[long_side] += 1.0;
  row[side_a] -= 1.0;
  row[side_b] -= 1.0;
  // Express the cut in terms of the nonbasic columns.
  for (int col : {long_side, side_a, side_b}) {
    const int basic = basic_row_[col];
    const double coef = row[col];
    if (basic < 0 || coef == 0.0) continue;
    const auto& src = rows_[basic];
    for (std::size_t j = 0; j < src.size(); ++j) row[j] -= coef * src[j];
    row[col] = 0.0;
  }
  row[slack] = 1.0;

  const double slack_value = -(CurrentValue(long_side) -
                               CurrentValue(side_a) - CurrentValue(side_b));
  cost_.push_back(0.0);
  reduced_.push_back(0.0);
  status_.push_back(Status::kBasic);
  basic_row_.push_back(static_cast<int>(rows_.size()));
  basis_.push_back(static_cast<int>(slack));
  beta_.push_back(slack_value);
  rows_.push_back(std::move(row));
  cuts_.push_back({long_side, side_a, side_b});
}

void TriangleLp::RecomputeBasicValues() {
  // Every right-hand side is zero, so x_B = -sum over nonbasic-at-upper
  // columns of the tableau column.
  std::vector<int> at_upper;
  for (std::size_t j = 0; j < status_.size(); ++j) {
    if (status_[j] == Status::kAtUpper) at_upper.push_back(static_cast<int>(j));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    double v = 0.0;
    for (int j : at_upper) v -= rows_[i][j];
    beta_[i] = v;
  }
}

double TriangleLp::DualObjective() const {
  double obj = 0.0;
  for (int j = 0; j < structurals_; ++j) obj += cost_[j] * CurrentValue(j);
  return obj;
}

void TriangleLp::Pivot(int row, int col) {
  const int leaving = basis_[row];
  const double target = beta_[row] < 0.0 ? 0.0 : Upper(leaving);
  auto& pivot_row = rows_[row];
  const double piv = pivot_row[col];
  const double step = (beta_[row] - target) / piv;

  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (static_cast<int>(i) != row) beta_[i] -= rows_[i][col] * step;
  }
  beta_[row] = NonbasicValue(col) + step;

  status_[leaving] = target == 0.0 ? Status::kAtLower : Status::kAtUpper;
  basic_row_[leaving] = -1;

  const std::size_t width = pivot_row.size();
  for (std::size_t j = 0; j < width; ++j) pivot_row[j] /= piv;
  pivot_row[col] = 1.0;

  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < width; ++j) {
    if (pivot_row[j] != 0.0) support.push_back(j);
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (static_cast<int>(i) == row) continue;
    auto& r = rows_[i];
    const double f = r[col];
    if (f == 0.0) continue;
    for (std::size_t j : support) {
      double v = r[j] - f * pivot_row[j];
      r[j] = std::abs(v) < kDropTol ? 0.0 : v;
    }
    r[col] = 0.0;
  }
  const double fd = reduced_[col];
  if (fd != 0.0) {
    for (std::size_t j : support) {
      double v = reduced_[j] - fd * pivot_row[j];
      reduced_[j] = std::abs(v) < kDropTol ? 0.0 : v;
    }
  }
  reduced_[col] = 0.0;

  basis_[row] = col;
  basic_row_[col] = row;
  status_[col] = Status::kBasic;
  ++pivots_;
}

void TriangleLp::Reoptimize() {
  RecomputeBasicValues();
  double last_objective = DualObjective();
  int stalled = 0;
  bool bland = false;
  const int columns = static_cast<int>(cost_.size());

  while (true) {
    int row = -1;
    double worst = kPrimalTol;
    for (int i = 0; i < num_rows(); ++i) {
      const double v = beta_[i];
      const double infeasible = std::max(-v, v - Upper(basis_[i]));
      if (infeasible <= kPrimalTol) continue;
      if (bland) {
        if (row < 0 || basis_[i] < basis_[row]) row = i;
      } else if (infeasible > worst) {
        worst = infeasible;
        row = i;
      }
    }
    if (row < 0) break;
    if (pivots_ >= max_pivots_) {
      throw NumericalError("dual simplex pivot limit reached");
    }

    const bool increase = beta_[row] < 0.0;
    const auto& r = rows_[row];
    int entering = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    double best_coef = 0.0;
    for (int j = 0; j < columns; ++j) {
      if (status_[j] == Status::kBasic) continue;
      const double t = r[j];
      if (std::abs(t) < kPivotTol) continue;
      const bool at_lower = status_[j] == Status::kAtLower;
      const bool eligible = increase ? (at_lower ? t < 0.0 : t > 0.0)
                                     : (at_lower ? t > 0.0 : t < 0.0);
      if (!eligible) continue;
      const double ratio = std::abs(reduced_[j]) / std::abs(t);
      if (ratio < best_ratio - 1e-12) {
        best_ratio = ratio;
        best_coef = std::abs(t);
        entering = j;
      } else if (ratio <= best_ratio + 1e-12 && !bland &&
                 std::abs(t) > best_coef) {
        best_coef = std::abs(t);
        entering = j;
      }
    }
    if (entering < 0) {
      throw NumericalError("working relaxation reported infeasible");
    }
    Pivot(row, entering);

    const double objective = DualObjective();
    if (objective > last_objective + 1e-12) {
      last_objective = objective;
      stalled = 0;
      bland = false;
    } else if (++stalled >= kStallPivotsBeforeBland) {
      bland = true;
    }
  }
  RecomputeBasicValues();
}

std::vector<double> TriangleLp::Values() const {
  std::vector<double> x(static_cast<std::size_t>(structurals_));
  for (int j = 0; j < structurals_; ++j) {
    x[j] = std::clamp(CurrentValue(j), 0.0, 1.0);
  }
  return x;
}

}  // namespace ccround::internal
