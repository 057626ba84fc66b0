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

#include "ccround/bounds.h"

#include <cmath>

#include "ccround/errors.h"

namespace ccround {

BoundCurves::BoundCurves(double alpha) : alpha_(alpha) {
  if (!(alpha > 1.0)) throw ContractViolation("bound curves need alpha > 1");
}

std::optional<double> BoundCurves::FMinusLower(double x) const {
  const double r = 1.0 - alpha_ * (1.0 - x);
  if (r < 0.0) return std::nullopt;
  return std::sqrt(r);
}

std::optional<double> BoundCurves::FPlusUpper(double x) const {
  const double r = 1.0 - alpha_ * x;
  if (r < 0.0) return std::nullopt;
  return 1.0 - std::sqrt(r);
}

std::optional<double> BoundCurves::FPlusLower(double x) const {
  if (x < 0.0 || x > 0.5) return std::nullopt;
  // alpha LP - ALG = c + b f - a f^2 with f = f+(x).
  const double a = 1.0 + alpha_ - 2.0 * alpha_ * x;
  const double b = 8.0 * x - 4.0 * alpha_ * x * x;
  const double c = alpha_ - 1.0 - 4.0 * x;
  const double disc = b * b + 4.0 * a * c;
  if (disc < 0.0) return std::nullopt;
  return (b - std::sqrt(disc)) / (2.0 * a);
}

std::vector<BoundRow> TabulateBounds(double alpha, double step) {
  if (!(step > 0.0)) throw ContractViolation("step must be positive");
  const BoundCurves curves(alpha);
  std::vector<BoundRow> rows;
  const auto count = static_cast<long long>(std::floor(1.0 / step + 1e-9));
  for (long long i = 0; i <= count; ++i) {
    const double x = std::min(1.0, static_cast<double>(i) * step);
    rows.push_back({x, curves.FMinusLower(x), curves.FPlusUpper(x),
                    curves.FPlusLower(x)});
  }
  return rows;
}

LowerBoundResult LowerBoundCheck(double alpha, double x) {
  LowerBoundResult r;
  r.alpha = alpha;
  r.x = x;
  const double rad = 1.0 - alpha * (1.0 - 2.0 * x);
  r.constrained = rad >= 0.0 && x >= 0.0 && 2.0 * x <= 1.0;
  if (alpha * x <= 1.0) {
    r.cap_defined = true;
    r.cap = 1.0 - std::sqrt(1.0 - alpha * x);
  }
  if (!r.constrained) return r;

  const double s = std::sqrt(rad);
  const double a = 1.0 + alpha - 2.0 * alpha * x;
  const double half_b = (2.0 - alpha * x) * s;
  const double c = 2.0 * s - alpha + 1.0;
  const double disc = half_b * half_b - a * c;
  r.real_roots = disc >= 0.0;
  if (r.real_roots) {
    const double d = std::sqrt(disc);
    r.root_lo = (half_b - d) / a;
    r.root_hi = (half_b + d) / a;
    r.root_lo_rounded = std::floor(r.root_lo * 1000.0) / 1000.0;
    r.root_hi_rounded = std::ceil(r.root_hi * 1000.0) / 1000.0;
  }
  // The derivation needs the upper curve for f+(x), so without it there is
  // nothing to contradict.
  r.contradiction = r.cap_defined && (!r.real_roots || r.cap < r.root_lo);
  return r;
}

}  // namespace ccround
