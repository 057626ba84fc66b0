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

#include "ccround/lp.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ccround/errors.h"
#include "json.hpp"
#include "triangle_lp.h"

namespace ccround {

namespace {

using nlohmann::json;

std::vector<double> CostVector(const Instance& inst) {
  std::vector<double> cost;
  cost.reserve(PairCount(inst.n()));
  ForEachPair(inst.n(), [&](int u, int v) {
    cost.push_back(inst.cut_cost(u, v) - inst.join_cost(u, v));
  });
  return cost;
}

LpSolution ToSolution(int n, const std::vector<double>& values) {
  PairMatrix<double> x(n, 0.0);
  x.flat() = values;
  return LpSolution(std::move(x));
}

void AddTriangle(internal::TriangleLp& lp, int n, const Triangle& t) {
  lp.AddCut(static_cast<int>(PairIndex(n, t.u, t.w)),
            static_cast<int>(PairIndex(n, t.u, t.v)),
            static_cast<int>(PairIndex(n, t.v, t.w)));
}

void CheckTriangle(const Triangle& t, int n) {
  if (t.u < 0 || t.v < 0 || t.w < 0 || t.u >= n || t.v >= n || t.w >= n ||
      t.u >= t.w || t.v == t.u || t.v == t.w) {
    throw ContractViolation("malformed triangle constraint");
  }
}

}  // namespace

std::vector<TriangleViolation> SeparateTriangleViolations(const LpSolution& x,
                                                          double tol) {
  const int n = x.n();
  std::vector<TriangleViolation> out;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      const double xuv = x(u, v);
      for (int w = u + 1; w < n; ++w) {
        if (w == v) continue;
        const double violation = x(u, w) - xuv - x(v, w);
        if (violation > tol) out.push_back({{u, v, w}, violation});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TriangleViolation& a, const TriangleViolation& b) {
                     return a.violation > b.violation;
                   });
  return out;
}

double LpObjective(const Instance& inst, const LpSolution& x) {
  if (x.n() != inst.n()) throw ContractViolation("LP point size mismatch");
  double total = 0.0;
  ForEachPair(inst.n(), [&](int u, int v) {
    total += inst.cut_cost(u, v) * x(u, v) +
             inst.join_cost(u, v) * (1.0 - x(u, v));
  });
  return total;
}

ValidationReport ValidateSolution(const LpSolution& x, double tol) {
  ValidationReport report;
  const int n = x.n();
  for (double value : x.values().flat()) {
    report.box_violation =
        std::max({report.box_violation, -value, value - 1.0});
    if (!std::isfinite(value)) report.box_violation = INFINITY;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      for (int w = u + 1; w < n; ++w) {
        if (w == v) continue;
        const double violation = x(u, w) - x(u, v) - x(v, w);
        if (violation > report.triangle_violation) {
          report.triangle_violation = violation;
          report.worst_triangle = {u, v, w};
        }
      }
    }
  }
  report.feasible = report.box_violation <= tol &&
                    report.diagonal_violation <= tol &&
                    report.triangle_violation <= tol;
  return report;
}

LpResult SolveRelaxation(const Instance& inst, const LpOptions& options) {
  const int n = inst.n();
  LpResult result;
  internal::TriangleLp lp(CostVector(inst), options.max_pivots);
  const int per_round =
      options.max_cuts_per_round > 0 ? options.max_cuts_per_round : 5 * n;
  std::set<Triangle> working;

  for (int round = 0;; ++round) {
    if (round >= options.max_rounds) {
      throw NumericalError("separation round limit reached");
    }
    lp.Reoptimize();
    result.x = ToSolution(n, lp.Values());
    result.round_objectives.push_back(LpObjective(inst, result.x));
    ++result.stats.separation_rounds;

    const auto violations =
        SeparateTriangleViolations(result.x, options.separation_tol);
    int added = 0;
    for (const auto& v : violations) {
      if (added >= per_round) break;
      if (!working.insert(v.triangle).second) continue;
      AddTriangle(lp, n, v.triangle);
      ++added;
    }
    if (added == 0) {
      // Violations left only on rows already present come from round-off in
      // the tableau.
      if (!violations.empty() &&
          violations.front().violation > kLpFeasibilityTolerance) {
        throw NumericalError("working relaxation drifted off a cut");
      }
      break;
    }
  }
  result.stats.objective = result.round_objectives.back();
  result.stats.iterations = lp.pivots();
  result.stats.constraints_generated = static_cast<std::int64_t>(working.size());
  result.working_set.assign(working.begin(), working.end());
  return result;
}

LpResult SolveWithConstraints(const Instance& inst,
                              const std::vector<Triangle>& constraints,
                              const LpOptions& options) {
  const int n = inst.n();
  LpResult result;
  internal::TriangleLp lp(CostVector(inst), options.max_pivots);
  std::set<Triangle> working;
  for (const auto& t : constraints) {
    CheckTriangle(t, n);
    if (working.insert(t).second) AddTriangle(lp, n, t);
  }
  lp.Reoptimize();
  result.x = ToSolution(n, lp.Values());
  result.round_objectives.push_back(LpObjective(inst, result.x));
  result.stats.objective = result.round_objectives.back();
  result.stats.iterations = lp.pivots();
  result.stats.constraints_generated = static_cast<std::int64_t>(working.size());
  result.working_set.assign(working.begin(), working.end());
  return result;
}

std::string LpSolutionToJson(const LpSolution& x, double objective) {
  const int n = x.n();
  json matrix = json::array();
  for (int u = 0; u < n; ++u) {
    json row = json::array();
    for (int v = 0; v < n; ++v) row.push_back(x(u, v));
    matrix.push_back(std::move(row));
  }
  json doc = {{"n", n}, {"x", std::move(matrix)}, {"objective", objective}};
  return doc.dump(2) + "\n";
}

LpSolution LpSolutionFromJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DataFormatError(std::string("LP JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("x") || !doc["x"].is_array()) {
    throw DataFormatError("LP JSON: expected an object with an array 'x'");
  }
  const json& xs = doc["x"];
  auto number = [](const json& v) {
    if (!v.is_number()) throw DataFormatError("LP JSON: non-numeric entry");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw DataFormatError("LP JSON: non-finite entry");
    return d;
  };

  const bool matrix_form = !xs.empty() && xs[0].is_array();
  int n = -1;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<int>() < 0) {
      throw DataFormatError("LP JSON: 'n' must be a non-negative integer");
    }
    n = doc["n"].get<int>();
  }
  if (matrix_form) {
    const int rows = static_cast<int>(xs.size());
    if (n >= 0 && n != rows) throw DataFormatError("LP JSON: n mismatch");
    n = rows;
    LpSolution x(n);
    for (int u = 0; u < n; ++u) {
      if (!xs[u].is_array() || static_cast<int>(xs[u].size()) != n) {
        throw DataFormatError("LP JSON: matrix is not square");
      }
    }
    for (int u = 0; u < n; ++u) {
      if (std::abs(number(xs[u][u])) > 1e-9) {
        throw DataFormatError("LP JSON: nonzero diagonal");
      }
      for (int v = u + 1; v < n; ++v) {
        const double a = number(xs[u][v]);
        const double b = number(xs[v][u]);
        if (std::abs(a - b) > 1e-9) {
          throw DataFormatError("LP JSON: matrix is not symmetric");
        }
        x.set(u, v, a);
      }
    }
    return x;
  }

  const std::size_t len = xs.size();
  if (n < 0) {
    n = 0;
    while (PairCount(n) < len) ++n;
  }
  if (PairCount(n) != len) {
    throw DataFormatError("LP JSON: flat 'x' has the wrong length");
  }
  PairMatrix<double> m(n, 0.0);
  for (std::size_t i = 0; i < len; ++i) m.flat()[i] = number(xs[i]);
  return LpSolution(std::move(m));
}

}  // namespace ccround
