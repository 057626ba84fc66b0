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

#ifndef CCROUND_BOUNDS_H_
#define CCROUND_BOUNDS_H_

#include <optional>
#include <vector>

namespace ccround {

// Necessary conditions on the rounding functions of the complete class for
// a target ratio alpha. Each curve is empty where it gives no constraint.
class BoundCurves {
 public:
  explicit BoundCurves(double alpha);

  double alpha() const { return alpha_; }

  // From (+,-,-) triangles of lengths (0, x, x): f-(x) >= sqrt(1 - a(1-x)).
  // Empty where the radicand is negative.
  std::optional<double> FMinusLower(double x) const;

  // From (+,+,+) triangles of lengths (x, x, 0): f+(x) <= 1 - sqrt(1 - a x),
  // defined for x <= 1/a.
  std::optional<double> FPlusUpper(double x) const;

  // From (+,+,-) triangles of lengths (x, x, 2x) with f-(x) = x: the smaller
  // root of the surplus quadratic in f+(x), for x in [0, 1/2]. Empty outside
  // that range or when the quadratic has no real root.
  std::optional<double> FPlusLower(double x) const;

 private:
  double alpha_;
};

struct BoundRow {
  double x = 0.0;
  std::optional<double> f_minus_lower;
  std::optional<double> f_plus_upper;
  std::optional<double> f_plus_lower;
};

// Rows at x = 0, step, 2 step, ..., 1.
std::vector<BoundRow> TabulateBounds(double alpha, double step);

struct LowerBoundResult {
  double alpha = 0.0;
  double x = 0.0;
  // 1 - alpha (1 - 2x) >= 0, i.e. the lower curve for f-(2x) is defined.
  bool constrained = false;
  // The quadratic in f+(x) obtained from (+,+,-) triangles (x, x, 2x) with
  // f-(2x) at its lower curve has real roots.
  bool real_roots = false;
  double root_lo = 0.0;
  double root_hi = 0.0;
  // Roots rounded outward to 3 decimals.
  double root_lo_rounded = 0.0;
  double root_hi_rounded = 0.0;
  // 1 - sqrt(1 - alpha x), defined for alpha x <= 1.
  bool cap_defined = false;
  double cap = 0.0;
  // No value of f+(x) satisfies both constraints.
  bool contradiction = false;
};

LowerBoundResult LowerBoundCheck(double alpha, double x);

}  // namespace ccround

#endif  // CCROUND_BOUNDS_H_
