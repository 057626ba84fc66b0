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

#ifndef CCROUND_LP_H_
#define CCROUND_LP_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccround/instance.h"
#include "ccround/pair_matrix.h"

namespace ccround {

// Feasibility tolerance for returned LP points.
inline constexpr double kLpFeasibilityTolerance = 1e-6;

// Pairwise distances x_uv in [0,1] with x_uu = 0, one entry per unordered
// pair.
class LpSolution {
 public:
  LpSolution() = default;
  explicit LpSolution(int n, double fill = 0.0) : x_(n, fill) {}
  explicit LpSolution(PairMatrix<double> x) : x_(std::move(x)) {}

  int n() const { return x_.size(); }
  double operator()(int u, int v) const { return u == v ? 0.0 : x_(u, v); }
  void set(int u, int v, double value) { x_(u, v) = value; }
  const PairMatrix<double>& values() const { return x_; }

 private:
  PairMatrix<double> x_;
};

struct LpStats {
  double objective = 0.0;
  std::int64_t iterations = 0;  // simplex pivots
  std::int64_t constraints_generated = 0;
  int separation_rounds = 0;
};

// The triangle constraint x_uw <= x_uv + x_vw: u and w span the long side,
// v is the apex. Stored with u < w.
struct Triangle {
  int u = 0;
  int v = 0;
  int w = 0;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct TriangleViolation {
  Triangle triangle;
  double violation = 0.0;  // x_uw - x_uv - x_vw
};

// Full O(n^3) scan. Returns every triangle constraint violated by more than
// tol, most violated first (ties in lexicographic (u, v, w) order).
std::vector<TriangleViolation> SeparateTriangleViolations(const LpSolution& x,
                                                          double tol);

// sum over pairs of cut_cost * x + join_cost * (1 - x).
double LpObjective(const Instance& inst, const LpSolution& x);

struct ValidationReport {
  double box_violation = 0.0;       // max over pairs of max(-x, x - 1, 0)
  double diagonal_violation = 0.0;  // always 0: the diagonal is not stored
  double triangle_violation = 0.0;  // max of x_uw - x_uv - x_vw, or 0
  Triangle worst_triangle;
  bool feasible = true;             // every family within tol
};

ValidationReport ValidateSolution(const LpSolution& x, double tol);

struct LpOptions {
  // A separation round adds triangles violated by more than this.
  double separation_tol = 1e-9;
  // Cuts added per round; 0 means 5n.
  int max_cuts_per_round = 0;
  std::int64_t max_pivots = 20'000'000;
  int max_rounds = 100'000;
};

struct LpResult {
  LpSolution x;
  LpStats stats;
  // Working-relaxation optimum after each separation round.
  std::vector<double> round_objectives;
  // Constraint set of the final working relaxation.
  std::vector<Triangle> working_set;
};

// Minimizes LpObjective over the metric polytope by lazy triangle
// separation. Starts from box bounds only, i.e. from the label-consistent
// point (0 where joining is free, 1 where cutting is free), and adds the most
// violated triangles each round until none exceeds options.separation_tol.
// Throws NumericalError on iteration caps or loss of feasibility.
LpResult SolveRelaxation(const Instance& inst, const LpOptions& options = {});

// Solves the relaxation restricted to the given triangle constraints, with no
// separation.
LpResult SolveWithConstraints(const Instance& inst,
                              const std::vector<Triangle>& constraints,
                              const LpOptions& options = {});

// JSON dump {n, x: n x n matrix, objective}.
std::string LpSolutionToJson(const LpSolution& x, double objective);

// Accepts `x` as an n x n matrix (symmetric, zero diagonal) or as the flat
// row-major upper triangle of length n(n-1)/2. Throws DataFormatError.
LpSolution LpSolutionFromJson(const std::string& text);

}  // namespace ccround

#endif  // CCROUND_LP_H_
