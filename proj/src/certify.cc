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

#include "ccround/certify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "ccround/errors.h"
#include "ccround/version.h"
#include "json.hpp"

namespace ccround {

namespace {

using nlohmann::json;

constexpr double kTriangleSlack = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

int Rank(EdgeLabel t) {
  return t == EdgeLabel::kPlus ? 0 : t == EdgeLabel::kMinus ? 1 : 2;
}

auto WitnessKey(const CertifyWitness& w) {
  return std::make_tuple(w.lengths, Rank(w.types[0]), Rank(w.types[1]),
                         Rank(w.types[2]), w.lambda_plus, w.p);
}

bool Better(const CertifyWitness& a, const CertifyWitness& b) {
  if (a.surplus != b.surplus) return a.surplus < b.surplus;
  return WitnessKey(a) < WitnessKey(b);
}

struct Accum {
  CertifyWitness best;
  bool has = false;
  std::int64_t points = 0;

  void Offer(const CertifyWitness& w) {
    ++points;
    if (!has || Better(w, best)) {
      best = w;
      has = true;
    }
  }
  void Merge(const Accum& o) {
    points += o.points;
    if (o.has && (!has || Better(o.best, best))) {
      best = o.best;
      has = true;
    }
  }
};

std::vector<double> Coordinates(double step,
                                const std::vector<const PiecewiseFunction*>& fs) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw ContractViolation("grid step must lie in (0, 1]");
  }
  std::vector<double> c;
  const auto count = static_cast<long long>(std::floor(1.0 / step + 1e-9));
  for (long long i = 0; i <= count; ++i) {
    c.push_back(std::min(1.0, static_cast<double>(i) * step));
  }
  c.push_back(1.0);
  for (const auto* f : fs) {
    for (double b : f->Breakpoints()) c.push_back(b);
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

// f(x) and, at a jump, the one-sided values.
std::vector<double> Candidates(const PiecewiseFunction& f, double x) {
  std::vector<double> out = {f(x)};
  for (double v : {f.LeftLimit(x), f.RightLimit(x)}) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

bool SatisfiesTriangle(const TriangleLengths& l) {
  return l[0] <= l[1] + l[2] + kTriangleSlack &&
         l[1] <= l[0] + l[2] + kTriangleSlack &&
         l[2] <= l[0] + l[1] + kTriangleSlack;
}

// Tight triangles with short side coords[i]: (x, y, x+y) and (x, x+y, y)
// for y on the grid, and the same with the long side on the grid instead,
// so that breakpoints are reached by the long side as well.
std::vector<TriangleLengths> TightFace(const std::vector<double>& coords, int i) {
  std::vector<TriangleLengths> out;
  const double x = coords[i];
  for (double y : coords) {
    if (x + y > 1.0 + kTriangleSlack) break;
    const double z = std::min(1.0, x + y);
    out.push_back({x, y, z});
    out.push_back({x, z, y});
  }
  for (double z : coords) {
    if (z < x) continue;
    const double y = z - x;
    out.push_back({x, y, z});
    out.push_back({x, z, y});
  }
  return out;
}

// Minimum over the candidate probabilities at one length triple.
CertifyWitness EvaluateLabeled(const RoundingScheme& s, double alpha,
                               const TriangleTypes& types,
                               const TriangleLengths& lengths) {
  std::array<std::vector<double>, 3> cand;
  for (int k = 0; k < 3; ++k) cand[k] = Candidates(s.Function(types[k]), lengths[k]);
  CertifyWitness best;
  bool has = false;
  for (double p0 : cand[0]) {
    for (double p1 : cand[1]) {
      for (double p2 : cand[2]) {
        CertifyWitness w;
        w.types = types;
        w.lengths = lengths;
        w.p = {p0, p1, p2};
        w.surplus = TripleCostsFromProbabilities(types, lengths, w.p, alpha).surplus;
        if (!has || Better(w, best)) {
          best = w;
          has = true;
        }
      }
    }
  }
  return best;
}

std::vector<TriangleTypes> Placements(TriangleTypes t) {
  std::sort(t.begin(), t.end(),
            [](EdgeLabel a, EdgeLabel b) { return Rank(a) < Rank(b); });
  std::vector<TriangleTypes> out;
  do {
    out.push_back(t);
  } while (std::next_permutation(t.begin(), t.end(), [](EdgeLabel a, EdgeLabel b) {
    return Rank(a) < Rank(b);
  }));
  return out;
}

template <typename Body>
void ParallelFor(int count, int jobs, Body&& body) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) body(0, i);
    return;
  }
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      for (int i = j; i < count; i += jobs) body(j, i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<double> CornerValues(const RoundingScheme& s, EdgeLabel t) {
  if (t == EdgeLabel::kNeutral) {
    std::vector<double> v = {0.0, 1.0};
    if (s.f_neutral) {
      for (double b : s.f_neutral->Breakpoints()) v.push_back(b);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }
  return s.Function(t).Breakpoints();
}

void Finish(CertificateReport& r) {
  r.min_surplus = kInf;
  bool pass = true;
  for (const auto& t : r.types) {
    if (t.min_surplus < r.min_surplus ||
        (t.min_surplus == r.min_surplus && Better(t.witness, r.witness))) {
      r.min_surplus = t.min_surplus;
      r.witness = t.witness;
    }
    if (t.min_surplus < -r.tol || t.min_corner_surplus < -r.tol) pass = false;
  }
  r.verdict = pass ? Verdict::kPass : Verdict::kFail;
}

json TypesJson(const TriangleTypes& t) {
  json a = json::array();
  for (EdgeLabel l : t) a.push_back(std::string(1, LabelChar(l)));
  return a;
}

json WitnessJson(const CertifyWitness& w, bool weighted) {
  json j = {{"lengths", w.lengths}, {"surplus", w.surplus}};
  if (weighted) {
    j["lambda_plus"] = w.lambda_plus;
  } else {
    j["types"] = TypesJson(w.types);
    j["p"] = w.p;
  }
  return j;
}

}  // namespace

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kIneligible:
      return "INELIGIBLE";
  }
  return "?";
}

CertificateReport Certify(const RoundingScheme& s, double alpha,
                          GraphClass graph_class,
                          const CertifyOptions& options) {
  if (graph_class == GraphClass::kWeightedComplete) {
    throw ContractViolation("use CertifyWeightedTi for weighted instances");
  }
  const bool kpartite = graph_class == GraphClass::kKPartite;
  if (kpartite && !s.f_neutral) {
    throw ContractViolation("k-partite certification needs a neutral-edge function");
  }
  CertificateReport r;
  r.scheme = s.name;
  r.alpha = alpha;
  r.graph_class = std::string(GraphClassName(graph_class));
  r.grid_step = options.grid_step;
  r.tol = options.tol;
  r.eligibility = CheckEligibility(s);
  const bool full = options.force_full_grid || !r.eligibility.eligible();
  r.method = full ? "full-grid" : "tight+corners";
  if (!r.eligibility.eligible() && !options.allow_fallback) {
    r.verdict = Verdict::kIneligible;
    return r;
  }

  std::vector<const PiecewiseFunction*> fs = {&s.f_plus, &s.f_minus};
  if (kpartite) fs.push_back(&*s.f_neutral);
  const std::vector<double> coords = Coordinates(options.grid_step, fs);
  const int m = static_cast<int>(coords.size());

  for (const TriangleTypes& type : AdmissibleTypes(graph_class)) {
    TypeResult tr;
    tr.type = type;
    tr.label = TypesToString(type);
    const auto placements = Placements(type);
    std::vector<Accum> acc(std::max(1, options.jobs));
    ParallelFor(m, options.jobs, [&](int job, int i) {
      const double x = coords[i];
      if (full) {
        for (int j = 0; j < m; ++j) {
          for (int k = 0; k < m; ++k) {
            const TriangleLengths l = {x, coords[j], coords[k]};
            if (SatisfiesTriangle(l)) acc[job].Offer(EvaluateLabeled(s, alpha, type, l));
          }
        }
        return;
      }
      for (const TriangleLengths& l : TightFace(coords, i)) {
        for (const auto& t : placements) acc[job].Offer(EvaluateLabeled(s, alpha, t, l));
      }
    });
    Accum total;
    for (const auto& a : acc) total.Merge(a);

    // Corner set, one placement suffices since every position ranges over
    // its own corner values.
    tr.min_corner_surplus = kInf;
    const auto c0 = CornerValues(s, type[0]);
    const auto c1 = CornerValues(s, type[1]);
    const auto c2 = CornerValues(s, type[2]);
    for (double a : c0) {
      for (double b : c1) {
        for (double c : c2) {
          const TriangleLengths l = {a, b, c};
          if (!SatisfiesTriangle(l)) continue;
          const CertifyWitness w = EvaluateLabeled(s, alpha, type, l);
          total.Offer(w);
          tr.corner_results.push_back({type, l, w.surplus});
          tr.min_corner_surplus = std::min(tr.min_corner_surplus, w.surplus);
        }
      }
    }
    tr.points = total.points;
    tr.min_surplus = total.best.surplus;
    tr.witness = total.best;
    r.types.push_back(std::move(tr));
  }
  Finish(r);
  return r;
}

CertificateReport CertifyWeightedTi(const RoundingScheme& s, double alpha,
                                    const WeightedCertifyOptions& options) {
  CertificateReport r;
  r.scheme = s.name;
  r.alpha = alpha;
  r.graph_class = std::string(GraphClassName(GraphClass::kWeightedComplete));
  r.grid_step = options.grid_step;
  r.lambda_step = options.lambda_step > 0.0 ? options.lambda_step : options.grid_step;
  r.tol = options.tol;
  r.eligibility = CheckEligibility(s);
  r.method = options.force_full_grid ? "full-grid" : "tight+corners";
  if (!r.eligibility.eligible() && !options.force_full_grid) {
    r.verdict = Verdict::kIneligible;
    return r;
  }

  const std::vector<double> coords =
      Coordinates(options.grid_step, {&s.f_plus, &s.f_minus});
  std::vector<TriangleLengths> lengths;
  const int m = static_cast<int>(coords.size());
  if (options.force_full_grid) {
    for (double a : coords) {
      for (double b : coords) {
        for (double c : coords) {
          const TriangleLengths l = {a, b, c};
          if (SatisfiesTriangle(l)) lengths.push_back(l);
        }
      }
    }
  } else {
    for (int i = 0; i < m; ++i) {
      for (const TriangleLengths& l : TightFace(coords, i)) lengths.push_back(l);
    }
  }
  const std::size_t tight_count = lengths.size();
  std::vector<double> corner = s.f_plus.Breakpoints();
  for (double b : s.f_minus.Breakpoints()) corner.push_back(b);
  std::sort(corner.begin(), corner.end());
  corner.erase(std::unique(corner.begin(), corner.end()), corner.end());
  for (double a : corner) {
    for (double b : corner) {
      for (double c : corner) {
        const TriangleLengths l = {a, b, c};
        if (SatisfiesTriangle(l)) lengths.push_back(l);
      }
    }
  }

  std::vector<double> ms;
  const auto count = static_cast<long long>(std::floor(1.0 / r.lambda_step + 1e-9));
  for (long long i = 0; i <= count; ++i) {
    ms.push_back(std::min(1.0, static_cast<double>(i) * r.lambda_step));
  }
  if (ms.back() != 1.0) ms.push_back(1.0);

  constexpr EdgeLabel P = EdgeLabel::kPlus;
  constexpr EdgeLabel M = EdgeLabel::kMinus;
  const int jobs = std::max(1, options.jobs);
  std::vector<Accum> acc(jobs);
  std::vector<double> per_length(lengths.size(), kInf);

  ParallelFor(static_cast<int>(lengths.size()), jobs, [&](int job, int idx) {
    const TriangleLengths& l = lengths[idx];
    const std::array<double, 3> pp = {s.f_plus(l[0]), s.f_plus(l[1]), s.f_plus(l[2])};
    const std::array<double, 3> pm = {s.f_minus(l[0]), s.f_minus(l[1]), s.f_minus(l[2])};
    // S[b] for coin outcome b: bit k set means edge k rounds as a - edge.
    double S[8];
    for (int b = 0; b < 8; ++b) {
      TriangleTypes t;
      std::array<double, 3> p;
      for (int k = 0; k < 3; ++k) {
        const bool minus = (b >> k) & 1;
        t[k] = minus ? M : P;
        p[k] = minus ? pm[k] : pp[k];
      }
      S[b] = TripleCostsFromProbabilities(t, l, p, alpha).surplus;
    }
    double local_min = kInf;
    CertifyWitness best;
    bool has = false;
    std::int64_t points = 0;
    for (double m0 : ms) {
      for (double m1 : ms) {
        const double w0[2] = {1.0 - m0, m0};
        const double w1[2] = {1.0 - m1, m1};
        double a[2];
        for (int s2 = 0; s2 < 2; ++s2) {
          double v = 0.0;
          for (int s0 = 0; s0 < 2; ++s0) {
            for (int s1 = 0; s1 < 2; ++s1) {
              v += w0[s0] * w1[s1] * S[s0 | (s1 << 1) | (s2 << 2)];
            }
          }
          a[s2] = v;
        }
        const double ends[2] = {std::abs(m0 - m1), std::min(1.0, m0 + m1)};
        for (double m2 : ends) {
          ++points;
          const double value = (1.0 - m2) * a[0] + m2 * a[1];
          if (value > local_min) continue;
          CertifyWitness w;
          w.lengths = l;
          w.types = {P, P, P};
          w.lambda_plus = {1.0 - m0, 1.0 - m1, 1.0 - m2};
          w.surplus = value;
          if (!has || Better(w, best)) {
            best = w;
            has = true;
            local_min = value;
          }
        }
      }
    }
    per_length[idx] = local_min;
    Accum here;
    here.best = best;
    here.has = has;
    here.points = points;
    acc[job].Merge(here);
  });
  Accum total;
  for (const auto& a : acc) total.Merge(a);

  TypeResult tr;
  tr.label = "weighted";
  tr.type = {P, P, P};
  tr.points = total.points;
  tr.min_surplus = total.best.surplus;
  tr.witness = total.best;
  tr.min_corner_surplus = kInf;
  for (std::size_t i = tight_count; i < lengths.size(); ++i) {
    tr.corner_results.push_back({{P, P, P}, lengths[i], per_length[i]});
    tr.min_corner_surplus = std::min(tr.min_corner_surplus, per_length[i]);
  }
  r.types.push_back(std::move(tr));
  Finish(r);
  return r;
}

std::string ReportToJson(const CertificateReport& r) {
  const bool weighted = r.graph_class == GraphClassName(GraphClass::kWeightedComplete);
  json meta = {{"version", kVersion},
               {"grid_step", r.grid_step},
               {"tol", r.tol},
               {"method", r.method}};
  if (weighted) meta["lambda_step"] = r.lambda_step;
  json types = json::array();
  for (const auto& t : r.types) {
    json corners = json::array();
    for (const auto& c : t.corner_results) {
      json cj = {{"lengths", c.lengths}, {"surplus", c.surplus}};
      if (!weighted) cj["types"] = TypesJson(c.types);
      corners.push_back(std::move(cj));
    }
    types.push_back({{"type", t.label},
                     {"min_surplus", t.min_surplus},
                     {"witness", WitnessJson(t.witness, weighted)},
                     {"grid_step", r.grid_step},
                     {"min_corner_surplus", t.min_corner_surplus},
                     {"corner_results", std::move(corners)},
                     {"points", t.points}});
  }
  json doc = {{"meta", std::move(meta)},
              {"scheme", r.scheme},
              {"alpha", r.alpha},
              {"class", r.graph_class},
              {"eligibility",
               {{"eligible", r.eligibility.eligible()},
                {"problems", r.eligibility.problems}}},
              {"types", std::move(types)},
              {"min_surplus", r.min_surplus},
              {"witness", WitnessJson(r.witness, weighted)},
              {"verdict", std::string(VerdictName(r.verdict))}};
  return doc.dump(2) + "\n";
}

}  // namespace ccround
