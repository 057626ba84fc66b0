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

#include "ccround/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccround/bounds.h"
#include "ccround/certify.h"
#include "ccround/derandomize.h"
#include "ccround/errors.h"
#include "ccround/generators.h"
#include "ccround/instance.h"
#include "ccround/instance_io.h"
#include "ccround/lp.h"
#include "ccround/oracle.h"
#include "ccround/pivot.h"
#include "ccround/rng.h"
#include "ccround/scheme.h"
#include "ccround/step_inequality.h"
#include "ccround/version.h"
#include "json.hpp"

namespace ccround {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kMaxBruteCapOverride = 40;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
  if (!file) throw UsageError("write to '" + path + "' failed");
}

json Meta(const std::string& command) {
  return {{"version", kVersion}, {"command", command}};
}

std::string Num(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string Opt(const std::optional<double>& v) {
  return v ? Num(*v) : std::string();
}

double SafeRatio(double num, double den) {
  if (den > 1e-12) return num / den;
  return num <= 1e-12 ? 1.0 : std::numeric_limits<double>::infinity();
}

// Ratio targets certified for the presets.
std::optional<double> DefaultAlpha(const std::string& scheme) {
  static const std::map<std::string, double> kAlpha = {
      {"complete206", 2.06},     {"kpartite3", 3.0},
      {"acn_linear", 3.0},       {"weighted_ti_150", 1.5},
      {"weighted_ti_153", 1.53}};
  const auto it = kAlpha.find(scheme);
  if (it == kAlpha.end()) return std::nullopt;
  return it->second;
}

int BruteCapFromEnv() {
  const char* env = std::getenv("CC_MAX_BRUTE_N");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > kMaxBruteCapOverride) {
    throw UsageError("CC_MAX_BRUTE_N must be an integer in [1, " +
                     std::to_string(kMaxBruteCapOverride) + "]");
  }
  return static_cast<int>(v);
}

RoundingScheme LoadSchemeArg(const std::string& id_or_path) {
  const auto names = PresetSchemeNames();
  if (std::find(names.begin(), names.end(), id_or_path) == names.end() &&
      !std::filesystem::is_regular_file(id_or_path)) {
    throw UsageError("unknown scheme '" + id_or_path + "'");
  }
  return LoadScheme(id_or_path);
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

// ---- gen ----

struct GenArgs {
  std::string family;
  int n = 0;
  double p = 0.5;
  std::optional<std::uint64_t> seed;
  std::vector<int> parts;
  int k = 1;
  double corruption = 0.0;
  int cycle = 0;
  std::string graph;
  std::string lp_out;
  std::string truth;
  bool ti = false;
  std::string input;
  int copies = 1;
  std::string map_out;
  std::string format = "edgelist";
  std::string output;
};

std::uint64_t RequireSeed(const std::optional<std::uint64_t>& seed,
                          const std::string& what) {
  if (!seed) throw UsageError(what + " needs an explicit --seed");
  return *seed;
}

void RequirePositive(int v, const std::string& name) {
  if (v < 1) throw UsageError(name + " must be at least 1");
}

void RequireProbability(double p, const std::string& name) {
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError(name + " must lie in [0,1]");
}

BipartiteGraph ReadBipartite(const std::string& path) {
  std::istringstream in(ReadFile(path));
  BipartiteGraph g;
  if (!(in >> g.left >> g.right) || g.left < 1 || g.right < 1) {
    throw DataFormatError("bipartite graph: expected '<left> <right>' header");
  }
  int a = 0;
  int b = 0;
  while (in >> a >> b) g.edges.emplace_back(a, b);
  if (!in.eof()) throw DataFormatError("bipartite graph: malformed edge line");
  return g;
}

int CmdGen(const GenArgs& a, std::ostream& out) {
  const InstanceFormat fmt =
      a.format == "json" ? InstanceFormat::kJson : InstanceFormat::kEdgeList;
  Instance inst;
  if (a.family == "complete") {
    RequirePositive(a.n, "--n");
    RequireProbability(a.p, "--p");
    inst = GenerateCompleteRandom(a.n, a.p, RequireSeed(a.seed, "gen complete"));
  } else if (a.family == "kpartite") {
    if (a.parts.empty()) throw UsageError("gen kpartite needs --parts");
    for (int s : a.parts) RequirePositive(s, "every part size");
    RequireProbability(a.p, "--p");
    inst = GenerateKPartiteRandom(a.parts, a.p, RequireSeed(a.seed, "gen kpartite"));
  } else if (a.family == "planted") {
    RequirePositive(a.n, "--n");
    if (a.k < 1 || a.k > a.n) throw UsageError("--k must lie in [1, n]");
    RequireProbability(a.corruption, "--corruption");
    auto planted =
        GeneratePlanted(a.n, a.k, a.corruption, RequireSeed(a.seed, "gen planted"));
    if (!a.truth.empty()) Emit(a.truth, ClusteringToJson(planted.planted), out);
    inst = std::move(planted.instance);
  } else if (a.family == "gap-ti") {
    RequirePositive(a.n, "--n");
    inst = GenerateGapTriangleInequality(a.n);
  } else if (a.family == "gap-kpartite") {
    BipartiteGraph g;
    if (!a.graph.empty()) {
      g = ReadBipartite(a.graph);
    } else {
      RequirePositive(a.cycle, "--cycle");
      g = EvenCycle(a.cycle);
    }
    GapKPartitePoint point;
    try {
      point = GapKPartiteLpPoint(g);
    } catch (const ContractViolation& e) {
      throw DataFormatError(e.what());
    }
    if (!a.lp_out.empty()) {
      Emit(a.lp_out,
           LpSolutionToJson(point.lp, LpObjective(point.instance, point.lp)), out);
    }
    inst = std::move(point.instance);
  } else if (a.family == "weighted-random") {
    RequirePositive(a.n, "--n");
    inst = GenerateWeightedRandom(a.n, a.ti, RequireSeed(a.seed, "gen weighted-random"));
  } else if (a.family == "blowup") {
    if (a.input.empty()) throw UsageError("gen blowup needs --input");
    RequirePositive(a.copies, "--copies");
    const Instance weighted = LoadInstance(a.input);
    if (!weighted.weighted()) throw UsageError("gen blowup needs a weighted instance");
    Blowup b = WeightedToUnweighted(weighted, a.copies,
                                    RequireSeed(a.seed, "gen blowup"));
    if (!a.map_out.empty()) {
      Emit(a.map_out,
           json({{"copies", b.copies}, {"original_of", b.original_of}}).dump() + "\n",
           out);
    }
    inst = std::move(b.instance);
  } else {
    throw UsageError("unknown generator family '" + a.family + "'");
  }
  Emit(a.output, SerializeInstance(inst, fmt), out);
  return kExitOk;
}

// ---- lp ----

struct LpArgs {
  std::string instance;
  double tol = 1e-9;
  int max_cuts = 0;
  std::string output;
};

int CmdLp(const LpArgs& a, std::ostream& out) {
  const Instance inst = LoadInstance(a.instance);
  LpOptions opt;
  opt.separation_tol = a.tol;
  opt.max_cuts_per_round = a.max_cuts;
  const LpResult r = SolveRelaxation(inst, opt);
  const ValidationReport v = ValidateSolution(r.x, kLpFeasibilityTolerance);
  json doc = json::parse(LpSolutionToJson(r.x, r.stats.objective));
  json meta = Meta("lp");
  meta["separation_tol"] = a.tol;
  meta["feasibility_tol"] = kLpFeasibilityTolerance;
  doc["meta"] = std::move(meta);
  doc["stats"] = {{"iterations", r.stats.iterations},
                  {"constraints_generated", r.stats.constraints_generated},
                  {"separation_rounds", r.stats.separation_rounds}};
  doc["validation"] = {{"box_violation", v.box_violation},
                       {"triangle_violation", v.triangle_violation},
                       {"feasible", v.feasible}};
  Emit(a.output, doc.dump(2) + "\n", out);
  if (!a.output.empty() && a.output != "-") {
    out << "objective " << Num(r.stats.objective) << " pivots "
        << r.stats.iterations << " cuts " << r.stats.constraints_generated
        << " rounds " << r.stats.separation_rounds << "\n";
  }
  return v.feasible ? kExitOk : kExitNumerical;
}

// ---- round ----

struct RoundArgs {
  std::string instance;
  std::string lp;
  std::string scheme;
  std::string mode = "random";
  std::optional<std::uint64_t> seed;
  std::optional<double> alpha;
  std::string output;
};

json TraceJson(const PivotTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace) steps.push_back({{"pivot", s.pivot}, {"cluster", s.cluster}});
  return steps;
}

int CmdRound(const RoundArgs& a, std::ostream& out) {
  const Instance inst = LoadInstance(a.instance);
  const LpSolution x = LpSolutionFromJson(ReadFile(a.lp));
  if (x.n() != inst.n()) throw DataFormatError("LP solution size differs from instance");
  const RoundingScheme s = LoadSchemeArg(a.scheme);
  const double lp = LpObjective(inst, x);
  json doc;
  json meta = Meta("round");
  int status = kExitOk;
  if (a.mode == "random") {
    const std::uint64_t seed = RequireSeed(a.seed, "round --mode random");
    meta["seed"] = seed;
    const PivotResult r = RoundOnce(inst, x, s, seed);
    const double cost = ClusteringCost(inst, r.clustering);
    doc = {{"mode", inst.weighted() ? "random-weighted" : "random"},
           {"cost", cost},
           {"lp_objective", lp},
           {"ratio", SafeRatio(cost, lp)},
           {"clustering", r.clustering.assignment()},
           {"trace", TraceJson(r.trace)}};
  } else if (a.mode == "derand") {
    if (inst.weighted()) {
      throw UsageError("derandomized rounding supports labeled instances only");
    }
    const auto alpha = a.alpha ? a.alpha : DefaultAlpha(s.name);
    if (!alpha) throw UsageError("round --mode derand needs --alpha for this scheme");
    meta["alpha"] = *alpha;
    const DerandomizeResult r = DerandomizeRound(inst, x, s, *alpha);
    const double cost = ClusteringCost(inst, r.clustering);
    const bool holds = cost <= *alpha * lp + 1e-9;
    doc = {{"mode", "derand"},
           {"alpha", *alpha},
           {"cost", cost},
           {"lp_objective", lp},
           {"ratio", SafeRatio(cost, lp)},
           {"bound", *alpha * lp},
           {"guarantee_holds", holds},
           {"clustering", r.clustering.assignment()},
           {"trace", TraceJson(r.trace)}};
    if (!holds) status = kExitFail;
  } else {
    throw UsageError("--mode must be random or derand");
  }
  meta["scheme"] = s.name;
  doc["meta"] = std::move(meta);
  Emit(a.output, doc.dump(2) + "\n", out);
  return status;
}

// ---- certify ----

struct CertifyArgs {
  std::string scheme;
  double alpha = 0.0;
  std::string graph_class;
  std::optional<double> grid;
  std::optional<double> lambda_grid;
  std::optional<double> tol;
  bool no_fallback = false;
  bool full_grid = false;
  int jobs = 1;
  std::string output;
};

int CmdCertify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  const RoundingScheme s = LoadSchemeArg(a.scheme);
  std::string cls_name = a.graph_class;
  if (cls_name.empty()) {
    cls_name = s.name.rfind("weighted", 0) == 0 ? "weighted"
               : s.name == "kpartite3"           ? "kpartite"
                                                 : "complete";
  }
  GraphClass cls;
  try {
    cls = ParseGraphClass(cls_name);
  } catch (const DataFormatError&) {
    throw UsageError("unknown class '" + cls_name + "'");
  }
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  CertificateReport report;
  if (cls == GraphClass::kWeightedComplete) {
    WeightedCertifyOptions o;
    o.grid_step = a.grid.value_or(0.01);
    o.lambda_step = a.lambda_grid.value_or(0.0);
    o.tol = a.tol.value_or(1e-7);
    o.force_full_grid = a.full_grid;
    o.jobs = a.jobs;
    report = CertifyWeightedTi(s, a.alpha, o);
  } else {
    if (cls == GraphClass::kKPartite && !s.f_neutral) {
      throw UsageError("scheme '" + s.name + "' has no neutral-edge function");
    }
    CertifyOptions o;
    o.grid_step = a.grid.value_or(0.005);
    o.tol = a.tol.value_or(1e-9);
    o.allow_fallback = !a.no_fallback;
    o.force_full_grid = a.full_grid;
    o.jobs = a.jobs;
    report = Certify(s, a.alpha, cls, o);
  }
  const std::string text = ReportToJson(report);
  Emit(a.output, text, out);
  std::ostream& summary = (a.output.empty() || a.output == "-") ? err : out;
  summary << VerdictName(report.verdict) << " " << report.scheme << " alpha "
          << Short(report.alpha) << " class " << report.graph_class;
  if (report.verdict != Verdict::kIneligible) {
    const auto& w = report.witness;
    summary << " min_surplus " << Short(report.min_surplus) << " witness ";
    if (cls != GraphClass::kWeightedComplete) summary << TypesToString(w.types) << " ";
    summary << "(" << Short(w.lengths[0]) << ", " << Short(w.lengths[1]) << ", "
            << Short(w.lengths[2]) << ")";
  }
  summary << "\n";
  switch (report.verdict) {
    case Verdict::kPass:
      return kExitOk;
    case Verdict::kFail:
      return kExitFail;
    case Verdict::kIneligible:
      return kExitIneligible;
  }
  return kExitFail;
}

// ---- opt ----

struct OptArgs {
  std::string instance;
  int max_n = 0;
  std::string output;
};

int CmdOpt(const OptArgs& a, std::ostream& out) {
  const Instance inst = LoadInstance(a.instance);
  BruteForceOptions o;
  o.max_n = a.max_n > 0 ? a.max_n : BruteCapFromEnv();
  if (o.max_n > kMaxBruteCapOverride) throw UsageError("--max-n too large");
  const int cap = o.max_n > 0 ? o.max_n : kDefaultBruteForceCap;
  if (inst.n() > cap) {
    throw UsageError("instance has " + std::to_string(inst.n()) +
                     " vertices; brute force is capped at " + std::to_string(cap));
  }
  const BruteForceResult r = BruteForceOpt(inst, o);
  json doc = {{"meta", Meta("opt")},
              {"n", inst.n()},
              {"opt", r.cost},
              {"clustering", r.clustering.assignment()},
              {"clusters", r.clustering.Clusters()},
              {"nodes", r.nodes}};
  Emit(a.output, doc.dump(2) + "\n", out);
  return kExitOk;
}

// ---- bench ----

struct BenchArgs {
  std::string family = "complete";
  int n = 9;
  std::vector<int> parts;
  double p = 0.5;
  int k = 3;
  double corruption = 0.1;
  int instances = 10;
  int trials = 200;
  std::string scheme = "complete206";
  std::optional<double> alpha;
  std::optional<std::uint64_t> seed;
  bool no_opt = false;
  int jobs = 1;
  std::string output;
};

int CmdBench(const BenchArgs& a, std::ostream& out) {
  const std::uint64_t seed = RequireSeed(a.seed, "bench");
  RequirePositive(a.instances, "--instances");
  RequirePositive(a.trials, "--trials");
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  const RoundingScheme s = LoadSchemeArg(a.scheme);
  const auto alpha = a.alpha ? a.alpha : DefaultAlpha(s.name);
  const int cap = BruteCapFromEnv() > 0 ? BruteCapFromEnv() : kDefaultBruteForceCap;

  json meta = Meta("bench");
  meta["family"] = a.family;
  meta["seed"] = seed;
  meta["instances"] = a.instances;
  meta["trials"] = a.trials;
  meta["scheme"] = s.name;
  meta["alpha"] = alpha ? json(*alpha) : json(nullptr);
  if (a.family == "kpartite") {
    meta["parts"] = a.parts;
  } else {
    meta["n"] = a.n;
  }
  meta["p"] = a.p;

  std::ostringstream csv;
  csv << "# meta: " << meta.dump() << "\n";
  csv << "instance,seed,n,lp,opt,mean_alg,sem,min_alg,max_alg,derand_alg,"
         "ratio_mean,ratio_derand,integrality\n";
  for (int i = 0; i < a.instances; ++i) {
    const std::uint64_t inst_seed = SplitMix64::DeriveSeed(seed, i);
    Instance inst;
    if (a.family == "complete") {
      RequirePositive(a.n, "--n");
      inst = GenerateCompleteRandom(a.n, a.p, inst_seed);
    } else if (a.family == "kpartite") {
      if (a.parts.empty()) throw UsageError("bench kpartite needs --parts");
      inst = GenerateKPartiteRandom(a.parts, a.p, inst_seed);
    } else if (a.family == "planted") {
      RequirePositive(a.n, "--n");
      if (a.k < 1 || a.k > a.n) throw UsageError("--k must lie in [1, n]");
      inst = GeneratePlanted(a.n, a.k, a.corruption, inst_seed).instance;
    } else if (a.family == "weighted-random") {
      RequirePositive(a.n, "--n");
      inst = GenerateWeightedRandom(a.n, true, inst_seed);
    } else {
      throw UsageError("unknown bench family '" + a.family + "'");
    }
    const LpResult lp = SolveRelaxation(inst);
    const MonteCarloStats mc = MonteCarloRatio(
        inst, lp.x, s, a.trials, SplitMix64::DeriveSeed(inst_seed, 1), a.jobs);
    double opt = std::nan("");
    if (!a.no_opt && inst.n() <= cap) {
      BruteForceOptions o;
      o.max_n = cap;
      opt = BruteForceOpt(inst, o).cost;
    }
    double derand = std::nan("");
    if (!inst.weighted() && alpha) {
      derand = ClusteringCost(inst, DerandomizeRound(inst, lp.x, s, *alpha).clustering);
    }
    const double obj = lp.stats.objective;
    csv << i << ',' << inst_seed << ',' << inst.n() << ',' << Num(obj) << ','
        << Num(opt) << ',' << Num(mc.mean) << ',' << Num(mc.sem) << ','
        << Num(mc.min) << ',' << Num(mc.max) << ',' << Num(derand) << ','
        << Num(mc.ratio) << ','
        << (std::isnan(derand) ? std::string() : Num(SafeRatio(derand, obj))) << ','
        << (std::isnan(opt) ? std::string() : Num(SafeRatio(opt, obj))) << '\n';
  }
  Emit(a.output, csv.str(), out);
  return kExitOk;
}

// ---- bounds / lower-bound ----

struct BoundsArgs {
  double alpha = 2.06;
  double step = 1e-3;
  std::string scheme;
  std::string output;
};

int CmdBounds(const BoundsArgs& a, std::ostream& out) {
  if (!(a.alpha > 1.0)) throw UsageError("--alpha must exceed 1");
  if (!(a.step > 0.0 && a.step <= 1.0)) throw UsageError("--step must lie in (0,1]");
  std::optional<RoundingScheme> s;
  if (!a.scheme.empty()) s = LoadSchemeArg(a.scheme);
  json meta = Meta("bounds");
  meta["alpha"] = a.alpha;
  meta["step"] = a.step;
  if (s) meta["scheme"] = s->name;
  std::ostringstream csv;
  csv << "# meta: " << meta.dump() << "\n";
  csv << "x,f_minus_lower,f_plus_upper,f_plus_lower";
  if (s) csv << ",f_plus,f_minus,ok";
  csv << "\n";
  bool all_ok = true;
  for (const BoundRow& row : TabulateBounds(a.alpha, a.step)) {
    csv << Num(row.x) << ',' << Opt(row.f_minus_lower) << ','
        << Opt(row.f_plus_upper) << ',' << Opt(row.f_plus_lower);
    if (s) {
      const double fp = s->f_plus(row.x);
      const double fm = s->f_minus(row.x);
      constexpr double kSlack = 1e-12;
      bool ok = true;
      if (row.f_minus_lower && fm < *row.f_minus_lower - kSlack) ok = false;
      if (row.f_plus_upper && fp > *row.f_plus_upper + kSlack) ok = false;
      if (row.f_plus_lower && fp < *row.f_plus_lower - kSlack) ok = false;
      all_ok = all_ok && ok;
      csv << ',' << Num(fp) << ',' << Num(fm) << ',' << (ok ? 1 : 0);
    }
    csv << '\n';
  }
  Emit(a.output, csv.str(), out);
  return all_ok ? kExitOk : kExitFail;
}

struct LowerBoundArgs {
  double alpha = 2.025;
  double x = 0.48;
  std::string output;
};

int CmdLowerBound(const LowerBoundArgs& a, std::ostream& out) {
  const LowerBoundResult r = LowerBoundCheck(a.alpha, a.x);
  json doc = {{"meta", Meta("lower-bound")},
              {"alpha", r.alpha},
              {"x", r.x},
              {"constrained", r.constrained},
              {"real_roots", r.real_roots},
              {"cap_defined", r.cap_defined},
              {"contradiction", r.contradiction}};
  if (r.real_roots) {
    doc["root_interval"] = {r.root_lo, r.root_hi};
    doc["root_interval_rounded"] = {r.root_lo_rounded, r.root_hi_rounded};
  }
  if (r.cap_defined) doc["upper_bound"] = r.cap;
  Emit(a.output, doc.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Correlation clustering: LP rounding, derandomization and "
               "ratio certification"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", gen.family,
                      "complete | kpartite | planted | gap-ti | gap-kpartite | "
                      "weighted-random | blowup")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count (half-size for gap-ti)");
  gen_cmd->add_option("--p", gen.p, "Probability of a + label");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--parts", gen.parts, "Part sizes, e.g. 3,3,3")->delimiter(',');
  gen_cmd->add_option("--k", gen.k, "Planted cluster count");
  gen_cmd->add_option("--corruption", gen.corruption, "Label flip probability");
  gen_cmd->add_option("--cycle", gen.cycle, "Half-length of the even cycle");
  gen_cmd->add_option("--graph", gen.graph, "Bipartite graph file");
  gen_cmd->add_option("--lp-out", gen.lp_out, "Write the gap LP point here");
  gen_cmd->add_option("--truth", gen.truth, "Write the planted clustering here");
  gen_cmd->add_flag("--ti", gen.ti, "Metric lambda- for weighted-random");
  gen_cmd->add_option("--input", gen.input, "Weighted instance to blow up");
  gen_cmd->add_option("--copies", gen.copies, "Copies per vertex for blowup");
  gen_cmd->add_option("--map-out", gen.map_out, "Write the blowup vertex map here");
  gen_cmd->add_option("--format", gen.format, "edgelist | json")
      ->check(CLI::IsMember({"edgelist", "json"}));
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  LpArgs lp;
  auto* lp_cmd = app.add_subcommand("lp", "Solve the LP relaxation");
  lp_cmd->add_option("instance", lp.instance)->required();
  lp_cmd->add_option("--tol", lp.tol, "Separation tolerance");
  lp_cmd->add_option("--max-cuts", lp.max_cuts, "Cuts per round (0: 5n)");
  lp_cmd->add_option("-o,--output", lp.output);

  RoundArgs round;
  auto* round_cmd = app.add_subcommand("round", "Round an LP solution");
  round_cmd->add_option("instance", round.instance)->required();
  round_cmd->add_option("lp", round.lp)->required();
  round_cmd->add_option("--scheme", round.scheme, "Preset id or scheme file")->required();
  round_cmd->add_option("--mode", round.mode, "random | derand")
      ->check(CLI::IsMember({"random", "derand"}));
  round_cmd->add_option("--seed", round.seed);
  round_cmd->add_option("--alpha", round.alpha);
  round_cmd->add_option("-o,--output", round.output);

  CertifyArgs cert;
  auto* cert_cmd = app.add_subcommand("certify", "Certify a rounding scheme");
  cert_cmd->add_option("scheme", cert.scheme, "Preset id or scheme file")->required();
  cert_cmd->add_option("--alpha", cert.alpha)->required();
  cert_cmd->add_option("--class", cert.graph_class, "complete | kpartite | weighted");
  cert_cmd->add_option("--grid", cert.grid, "Length grid step");
  cert_cmd->add_option("--lambda-grid", cert.lambda_grid, "Weight grid step (weighted)");
  cert_cmd->add_option("--tol", cert.tol);
  cert_cmd->add_flag("--no-fallback", cert.no_fallback,
                     "Refuse ineligible schemes instead of using the full grid");
  cert_cmd->add_flag("--full-grid", cert.full_grid, "Always use the full 3-D grid");
  cert_cmd->add_option("--jobs", cert.jobs, "Worker threads");
  cert_cmd->add_option("-o,--output", cert.output);

  OptArgs opt;
  auto* opt_cmd = app.add_subcommand("opt", "Exact optimum by enumeration");
  opt_cmd->add_option("instance", opt.instance)->required();
  opt_cmd->add_option("--max-n", opt.max_n, "Override the size cap");
  opt_cmd->add_option("-o,--output", opt.output);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark rounding on a family");
  bench_cmd->add_option("--family", bench.family,
                        "complete | kpartite | planted | weighted-random");
  bench_cmd->add_option("--n", bench.n);
  bench_cmd->add_option("--parts", bench.parts)->delimiter(',');
  bench_cmd->add_option("--p", bench.p);
  bench_cmd->add_option("--k", bench.k);
  bench_cmd->add_option("--corruption", bench.corruption);
  bench_cmd->add_option("--instances", bench.instances);
  bench_cmd->add_option("--trials", bench.trials);
  bench_cmd->add_option("--scheme", bench.scheme);
  bench_cmd->add_option("--alpha", bench.alpha);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_flag("--no-opt", bench.no_opt, "Skip the exact optimum");
  bench_cmd->add_option("--jobs", bench.jobs);
  bench_cmd->add_option("-o,--output", bench.output);

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate the bound curves");
  bounds_cmd->add_option("--alpha", bounds.alpha);
  bounds_cmd->add_option("--step", bounds.step);
  bounds_cmd->add_option("--scheme", bounds.scheme, "Also check this scheme");
  bounds_cmd->add_option("-o,--output", bounds.output);

  LowerBoundArgs lower;
  auto* lower_cmd = app.add_subcommand("lower-bound", "Ratio lower-bound check");
  lower_cmd->add_option("--alpha", lower.alpha);
  lower_cmd->add_option("--x", lower.x);
  lower_cmd->add_option("-o,--output", lower.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return CmdGen(gen, out);
    if (*lp_cmd) return CmdLp(lp, out);
    if (*round_cmd) return CmdRound(round, out);
    if (*cert_cmd) return CmdCertify(cert, out, err);
    if (*opt_cmd) return CmdOpt(opt, out);
    if (*bench_cmd) return CmdBench(bench, out);
    if (*bounds_cmd) return CmdBounds(bounds, out);
    if (*lower_cmd) return CmdLowerBound(lower, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataFormatError& e) {
    err << "data format error: " << e.what() << "\n";
    return kExitDataFormat;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace ccround
