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

#include "ccround/scheme.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccround/errors.h"
#include "json.hpp"

namespace ccround {

namespace {

using nlohmann::json;

constexpr double kDomainSlack = 1e-12;
constexpr double kCheckStep = 1e-3;
constexpr double kCheckTol = 1e-12;

std::size_t ParamCount(PieceKind kind) {
  return kind == PieceKind::kConstant ? 1 : 2;
}

PieceKind ParsePieceKind(const std::string& name) {
  if (name == "constant") return PieceKind::kConstant;
  if (name == "linear") return PieceKind::kLinear;
  if (name == "quadratic") return PieceKind::kQuadratic;
  if (name == "sqrt") return PieceKind::kSqrt;
  throw DataFormatError("unknown piece kind '" + name + "'");
}

double ClampDomain(double x) {
  if (x < -kDomainSlack || x > 1.0 + kDomainSlack || std::isnan(x)) {
    throw ContractViolation("rounding function evaluated outside [0,1]");
  }
  return std::clamp(x, 0.0, 1.0);
}

Piece Constant(double from, double to, double c) {
  return {from, to, PieceKind::kConstant, {c}};
}

Piece Linear(double from, double to, double slope, double intercept) {
  return {from, to, PieceKind::kLinear, {slope, intercept}};
}

PiecewiseFunction Identity() {
  Piece p = Linear(0.0, 1.0, 1.0, 0.0);
  p.include_to = true;
  return PiecewiseFunction({p});
}

// Closes the last piece at 1.
PiecewiseFunction LeftClosed(std::vector<Piece> pieces) {
  pieces.back().include_to = true;
  return PiecewiseFunction(std::move(pieces));
}

RoundingScheme Complete206() {
  constexpr double a = 0.19;
  constexpr double b = 0.5095;
  Piece quad{a, b, PieceKind::kQuadratic, {a, 1.0 / ((b - a) * (b - a))}};
  quad.include_to = true;
  Piece one = Constant(b, 1.0, 1.0);
  one.include_from = false;
  one.include_to = true;
  return {"complete206",
          PiecewiseFunction({Constant(0.0, a, 0.0), quad, one}), Identity(),
          std::nullopt};
}

RoundingScheme KPartite3() {
  Piece neutral_linear = Linear(0.0, 2.0 / 3.0, 1.5, 0.0);
  neutral_linear.include_to = true;
  Piece neutral_one = Constant(2.0 / 3.0, 1.0, 1.0);
  neutral_one.include_from = false;
  neutral_one.include_to = true;
  return {"kpartite3",
          LeftClosed({Constant(0.0, 1.0 / 3.0, 0.0),
                      Constant(1.0 / 3.0, 1.0, 1.0)}),
          Identity(), PiecewiseFunction({neutral_linear, neutral_one})};
}

PiecewiseFunction SquareRoot() {
  Piece p{0.0, 1.0, PieceKind::kSqrt, {0.0, 1.0}};
  p.include_to = true;
  return PiecewiseFunction({p});
}

RoundingScheme WeightedTi150() {
  const double c = 4.0 - 2.0 * std::sqrt(2.0);
  const double knee = 1.0 / std::sqrt(c);
  return {"weighted_ti_150",
          LeftClosed({{0.0, knee, PieceKind::kQuadratic, {0.0, c}},
                      Constant(knee, 1.0, 1.0)}),
          SquareRoot(), std::nullopt};
}

RoundingScheme WeightedTi153() {
  return {"weighted_ti_153",
          LeftClosed({{0.0, 1.0, PieceKind::kQuadratic, {0.0, 1.0}}}),
          SquareRoot(), std::nullopt};
}

RoundingScheme AcnLinear() {
  return {"acn_linear", Identity(), Identity(), Identity()};
}

json PiecesToJson(const PiecewiseFunction& f) {
  json out = json::array();
  for (const auto& p : f.pieces()) {
    out.push_back({{"from", p.from},
                   {"to", p.to},
                   {"kind", std::string(PieceKindName(p.kind))},
                   {"params", p.params},
                   {"include_from", p.include_from},
                   {"include_to", p.include_to}});
  }
  return out;
}

PiecewiseFunction PiecesFromJson(const json& arr) {
  if (!arr.is_array() || arr.empty()) {
    throw DataFormatError("piece list must be a non-empty array");
  }
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& j = arr[i];
    Piece p;
    p.from = j.at("from").get<double>();
    p.to = j.at("to").get<double>();
    p.kind = ParsePieceKind(j.at("kind").get<std::string>());
    p.params = j.at("params").get<std::vector<double>>();
    const bool last = i + 1 == arr.size();
    p.include_to = j.contains("include_to") ? j["include_to"].get<bool>() : last;
    const bool prev_closed = !pieces.empty() && pieces.back().include_to;
    p.include_from =
        j.contains("include_from") ? j["include_from"].get<bool>() : !prev_closed;
    pieces.push_back(std::move(p));
  }
  try {
    return PiecewiseFunction(std::move(pieces));
  } catch (const ContractViolation& e) {
    throw DataFormatError(e.what());
  }
}

void CheckShape(const PiecewiseFunction& f, const std::string& label,
                EligibilityReport& report) {
  if (std::abs(f(0.0)) > kCheckTol) {
    report.zero_at_zero = false;
    report.problems.push_back(label + "(0) != 0");
  }
  const int steps = static_cast<int>(std::lround(1.0 / kCheckStep));
  double prev = f(0.0);
  for (int i = 0; i <= steps; ++i) {
    const double x = static_cast<double>(i) / steps;
    const double v = f(x);
    if (!(v >= -kCheckTol && v <= 1.0 + kCheckTol)) {
      if (report.in_unit_range) {
        report.problems.push_back(label + " leaves [0,1] at x=" + std::to_string(x));
      }
      report.in_unit_range = false;
    }
    if (v < prev - kCheckTol) {
      if (report.monotone) {
        report.problems.push_back(label + " decreases at x=" + std::to_string(x));
      }
      report.monotone = false;
    }
    prev = v;
  }
}

// sign = +1 tests convexity, -1 concavity, on every piece separately.
bool PiecewiseCurvature(const PiecewiseFunction& f, double sign) {
  for (const auto& p : f.pieces()) {
    const int m = std::max(2, static_cast<int>(std::ceil((p.to - p.from) / kCheckStep)));
    const double h = (p.to - p.from) / m;
    for (int k = 1; k < m; ++k) {
      const double lo = p.Formula(p.from + (k - 1) * h);
      const double mid = p.Formula(p.from + k * h);
      const double hi = p.Formula(k + 1 == m ? p.to : p.from + (k + 1) * h);
      if (sign * (0.5 * (lo + hi) - mid) < -kCheckTol) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view PieceKindName(PieceKind kind) {
  switch (kind) {
    case PieceKind::kConstant:
      return "constant";
    case PieceKind::kLinear:
      return "linear";
    case PieceKind::kQuadratic:
      return "quadratic";
    case PieceKind::kSqrt:
      return "sqrt";
  }
  return "?";
}

double Piece::Formula(double x) const {
  switch (kind) {
    case PieceKind::kConstant:
      return params[0];
    case PieceKind::kLinear:
      return params[0] * x + params[1];
    case PieceKind::kQuadratic:
      return params[1] * (x - params[0]) * (x - params[0]);
    case PieceKind::kSqrt:
      return params[1] * std::sqrt(std::max(0.0, x - params[0]));
  }
  return 0.0;
}

bool Piece::Contains(double x) const {
  const bool after = x > from || (include_from && x == from);
  const bool before = x < to || (include_to && x == to);
  return after && before;
}

PiecewiseFunction::PiecewiseFunction(std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw ContractViolation("function without pieces");
  if (pieces_.front().from != 0.0 || pieces_.back().to != 1.0) {
    throw ContractViolation("pieces must cover [0,1]");
  }
  if (!pieces_.front().include_from || !pieces_.back().include_to) {
    throw ContractViolation("pieces must include 0 and 1");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (!(p.from < p.to)) throw ContractViolation("empty piece");
    if (p.params.size() != ParamCount(p.kind)) {
      throw ContractViolation("wrong parameter count for piece kind " +
                              std::string(PieceKindName(p.kind)));
    }
    for (double v : p.params) {
      if (!std::isfinite(v)) throw ContractViolation("non-finite piece parameter");
    }
    if (i + 1 < pieces_.size()) {
      const Piece& q = pieces_[i + 1];
      if (p.to != q.from) throw ContractViolation("pieces are not contiguous");
      if (p.include_to == q.include_from) {
        throw ContractViolation("shared endpoint must belong to exactly one piece");
      }
    }
  }
}

double PiecewiseFunction::operator()(double x) const {
  x = ClampDomain(x);
  for (const auto& p : pieces_) {
    if (p.Contains(x)) return p.Formula(x);
  }
  throw ContractViolation("rounding function has no piece at x");
}

double PiecewiseFunction::LeftLimit(double x) const {
  x = ClampDomain(x);
  for (const auto& p : pieces_) {
    if (p.from < x && x <= p.to) return p.Formula(x);
  }
  return (*this)(x);
}

double PiecewiseFunction::RightLimit(double x) const {
  x = ClampDomain(x);
  for (const auto& p : pieces_) {
    if (p.from <= x && x < p.to) return p.Formula(x);
  }
  return (*this)(x);
}

std::vector<double> PiecewiseFunction::Breakpoints() const {
  std::vector<double> out;
  for (const auto& p : pieces_) {
    out.push_back(p.from);
    out.push_back(p.to);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double RoundingScheme::Eval(EdgeLabel type, double x) const {
  return Function(type)(x);
}

const PiecewiseFunction& RoundingScheme::Function(EdgeLabel type) const {
  switch (type) {
    case EdgeLabel::kPlus:
      return f_plus;
    case EdgeLabel::kMinus:
      return f_minus;
    case EdgeLabel::kNeutral:
      break;
  }
  if (!f_neutral) {
    throw ContractViolation("scheme '" + name + "' has no neutral-edge function");
  }
  return *f_neutral;
}

std::vector<std::string> PresetSchemeNames() {
  return {"acn_linear", "complete206", "kpartite3", "weighted_ti_150",
          "weighted_ti_153"};
}

RoundingScheme PresetScheme(std::string_view name) {
  if (name == "acn_linear") return AcnLinear();
  if (name == "complete206") return Complete206();
  if (name == "kpartite3") return KPartite3();
  if (name == "weighted_ti_150") return WeightedTi150();
  if (name == "weighted_ti_153") return WeightedTi153();
  throw DataFormatError("unknown scheme '" + std::string(name) + "'");
}

RoundingScheme SchemeFromJson(std::string_view text) {
  try {
    const json doc = json::parse(text);
    RoundingScheme s;
    s.name = doc.value("name", std::string("custom"));
    s.f_plus = PiecesFromJson(doc.at("f_plus"));
    s.f_minus = PiecesFromJson(doc.at("f_minus"));
    if (doc.contains("f_neutral") && !doc["f_neutral"].is_null()) {
      s.f_neutral = PiecesFromJson(doc["f_neutral"]);
    }
    return s;
  } catch (const json::exception& e) {
    throw DataFormatError(std::string("scheme JSON: ") + e.what());
  }
}

std::string SchemeToJson(const RoundingScheme& s) {
  json doc;
  doc["name"] = s.name;
  doc["f_plus"] = PiecesToJson(s.f_plus);
  doc["f_minus"] = PiecesToJson(s.f_minus);
  if (s.f_neutral) doc["f_neutral"] = PiecesToJson(*s.f_neutral);
  return doc.dump(2) + "\n";
}

RoundingScheme LoadScheme(const std::string& id_or_path) {
  const auto names = PresetSchemeNames();
  if (std::find(names.begin(), names.end(), id_or_path) != names.end()) {
    return PresetScheme(id_or_path);
  }
  std::ifstream in(id_or_path);
  if (!in) {
    throw DataFormatError("'" + id_or_path +
                          "' is neither a preset scheme nor a readable file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return SchemeFromJson(buf.str());
}

EligibilityReport CheckEligibility(const RoundingScheme& s) {
  EligibilityReport report;
  CheckShape(s.f_plus, "f+", report);
  CheckShape(s.f_minus, "f-", report);
  if (s.f_neutral) CheckShape(*s.f_neutral, "f0", report);
  if (!PiecewiseCurvature(s.f_plus, 1.0)) {
    report.plus_piecewise_convex = false;
    report.problems.push_back("f+ is not convex on every piece");
  }
  if (!PiecewiseCurvature(s.f_minus, -1.0)) {
    report.minus_piecewise_concave = false;
    report.problems.push_back("f- is not concave on every piece");
  }
  return report;
}

}  // namespace ccround
