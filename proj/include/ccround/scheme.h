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

#ifndef CCROUND_SCHEME_H_
#define CCROUND_SCHEME_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccround/instance.h"

namespace ccround {

enum class PieceKind {
  kConstant,   // params {c}
  kLinear,     // params {slope, intercept}
  kQuadratic,  // params {anchor, coef}: coef * (x - anchor)^2
  kSqrt,       // params {anchor, coef}: coef * sqrt(x - anchor)
};

std::string_view PieceKindName(PieceKind kind);

struct Piece {
  double from = 0.0;
  double to = 1.0;
  PieceKind kind = PieceKind::kConstant;
  std::vector<double> params;
  bool include_from = true;
  bool include_to = false;

  // The piece's formula, regardless of the interval.
  double Formula(double x) const;
  bool Contains(double x) const;
};

// A function [0,1] -> R given by consecutive pieces. Each shared endpoint is
// owned by exactly one of its two pieces.
class PiecewiseFunction {
 public:
  PiecewiseFunction() = default;
  // Throws ContractViolation unless the pieces tile [0,1].
  explicit PiecewiseFunction(std::vector<Piece> pieces);

  // Inputs within 1e-12 outside [0,1] are clamped; anything further is a
  // ContractViolation.
  double operator()(double x) const;

  // Values of the piece formulas at x from the left and from the right; they
  // differ from operator() only at a jump.
  double LeftLimit(double x) const;
  double RightLimit(double x) const;

  // All piece endpoints, sorted, 0 and 1 included.
  std::vector<double> Breakpoints() const;
  const std::vector<Piece>& pieces() const { return pieces_; }

 private:
  std::vector<Piece> pieces_;
};

// Cut-probability functions per edge type.
struct RoundingScheme {
  std::string name;
  PiecewiseFunction f_plus;
  PiecewiseFunction f_minus;
  std::optional<PiecewiseFunction> f_neutral;

  // p for an edge of the given type at LP length x. Throws ContractViolation
  // for a neutral edge when f_neutral is absent.
  double Eval(EdgeLabel type, double x) const;
  const PiecewiseFunction& Function(EdgeLabel type) const;
};

// Preset ids: acn_linear, complete206, kpartite3, weighted_ti_150,
// weighted_ti_153.
std::vector<std::string> PresetSchemeNames();
RoundingScheme PresetScheme(std::string_view name);

// {"name", "f_plus": [piece...], "f_minus": [...], "f_neutral"?: [...]} with
// piece {"from", "to", "kind", "params", "include_from"?, "include_to"?}.
// Unspecified endpoint ownership defaults to left-closed pieces with the last
// piece closed at 1. Throws DataFormatError.
RoundingScheme SchemeFromJson(std::string_view text);
std::string SchemeToJson(const RoundingScheme& s);

// Resolves a preset id, or otherwise reads a JSON scheme file at that path.
RoundingScheme LoadScheme(const std::string& id_or_path);

struct EligibilityReport {
  bool zero_at_zero = true;
  bool in_unit_range = true;
  bool monotone = true;
  bool plus_piecewise_convex = true;
  bool minus_piecewise_concave = true;
  std::vector<std::string> problems;

  // Hypotheses of the tight-triangle reduction.
  bool eligible() const {
    return zero_at_zero && in_unit_range && monotone &&
           plus_piecewise_convex && minus_piecewise_concave;
  }
};

// Numerical check on a grid of step 1e-3 (and per piece for the convexity
// and concavity midpoint tests).
EligibilityReport CheckEligibility(const RoundingScheme& s);

}  // namespace ccround

#endif  // CCROUND_SCHEME_H_
