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

#ifndef CCROUND_CERTIFY_H_
#define CCROUND_CERTIFY_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ccround/instance.h"
#include "ccround/scheme.h"
#include "ccround/triple.h"

namespace ccround {

struct CertifyWitness {
  TriangleTypes types{};
  TriangleLengths lengths{};
  std::array<double, 3> p{};
  // Weighted certification only: lambda+ of each edge.
  std::array<double, 3> lambda_plus{};
  double surplus = 0.0;
};

struct CornerResult {
  TriangleTypes types{};
  TriangleLengths lengths{};
  double surplus = 0.0;
};

struct TypeResult {
  std::string label;  // e.g. "(+,+,-)", or "weighted"
  TriangleTypes type{};
  double min_surplus = 0.0;
  CertifyWitness witness;
  double min_corner_surplus = 0.0;
  std::vector<CornerResult> corner_results;
  std::int64_t points = 0;
};

enum class Verdict { kPass, kFail, kIneligible };
std::string_view VerdictName(Verdict v);

struct CertificateReport {
  std::string scheme;
  double alpha = 0.0;
  std::string graph_class;
  double grid_step = 0.0;
  double lambda_step = 0.0;  // weighted only
  double tol = 0.0;
  std::string method;  // "tight+corners" or "full-grid"
  EligibilityReport eligibility;
  std::vector<TypeResult> types;
  double min_surplus = 0.0;
  CertifyWitness witness;
  Verdict verdict = Verdict::kFail;
};

struct CertifyOptions {
  double grid_step = 0.005;
  double tol = 1e-9;
  // Run the full 3-D grid when the scheme fails the eligibility checks.
  bool allow_fallback = true;
  // Use the full 3-D grid even for eligible schemes.
  bool force_full_grid = false;
  int jobs = 1;
};

// Minimum of alpha * LP(uvw) - ALG(uvw) per admissible triangle type of a
// labeled class. Eligible schemes are checked on the tight families
// (x, y, x+y) and (x, x+z, z), for every placement of the types, plus the
// corner set: + lengths in the endpoints of the pieces of f+, - lengths in
// those of f-, neutral lengths in {0, 1} and the breakpoints of f0. Grid
// coordinates are the multiples of grid_step together with every
// breakpoint; at a jump both one-sided values of the function are tried.
// Otherwise the full grid over the triangle-inequality polytope is used.
// PASS iff every minimum is >= -tol. The minimum is reported with the
// lexicographically smallest witness, so reports do not depend on jobs.
CertificateReport Certify(const RoundingScheme& s, double alpha,
                          GraphClass graph_class,
                          const CertifyOptions& options = {});

struct WeightedCertifyOptions {
  double grid_step = 0.01;  // lengths
  double lambda_step = 0.0;  // 0 means grid_step
  double tol = 1e-7;
  bool force_full_grid = false;
  int jobs = 1;
};

// Weighted complete graphs with lambda- a metric. Each edge rounds with f+
// with probability lambda+ and with f- otherwise, so the surplus is the
// lambda-weighted mixture of the 8 unweighted surpluses of the coin
// outcomes. Lengths range over the tight families and the corners of
// A+ and A- (or the full grid); lambda- over m1, m2 on the lambda grid and,
// since the mixture is affine in m3, the two ends of the metric range
// [|m1 - m2|, min(1, m1 + m2)] for m3.
CertificateReport CertifyWeightedTi(const RoundingScheme& s, double alpha,
                                    const WeightedCertifyOptions& options = {});

// JSON with a meta block (version, grid, tolerance).
std::string ReportToJson(const CertificateReport& r);

}  // namespace ccround

#endif  // CCROUND_CERTIFY_H_
