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

#include "ccround/instance_io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccround/errors.h"
#include "json.hpp"

namespace ccround {

namespace {

using nlohmann::json;

constexpr double kWeightSumTolerance = 1e-9;

[[noreturn]] void Fail(int line, const std::string& what) {
  if (line > 0) {
    throw DataFormatError("line " + std::to_string(line) + ": " + what);
  }
  throw DataFormatError(what);
}

std::vector<std::string> Tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> ToInt(const std::string& s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> ToDouble(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<EdgeLabel> ToLabel(std::string_view s) {
  if (s == "+") return EdgeLabel::kPlus;
  if (s == "-") return EdgeLabel::kMinus;
  if (s == "0") return EdgeLabel::kNeutral;
  return std::nullopt;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Collects pair data and turns it into an Instance, independent of the
// surface syntax.
class Builder {
 public:
  Builder(GraphClass cls, int n, std::vector<int> parts, bool ti)
      : class_(cls),
        n_(n),
        parts_(std::move(parts)),
        ti_(ti),
        seen_(n, 0),
        labels_(n, EdgeLabel::kNeutral),
        lambda_plus_(n, 0.0) {}

  void AddLabel(int line, long long u, long long v, EdgeLabel label) {
    if (class_ == GraphClass::kWeightedComplete) {
      Fail(line, "label given for a weighted instance");
    }
    const auto [a, b] = Pair(line, u, v);
    labels_(a, b) = label;
  }

  void AddWeight(int line, long long u, long long v, double plus,
                 std::optional<double> minus) {
    if (class_ != GraphClass::kWeightedComplete) {
      Fail(line, "weight given for a labeled instance");
    }
    if (!(plus >= 0.0 && plus <= 1.0)) Fail(line, "lambda+ outside [0,1]");
    if (minus && std::abs(plus + *minus - 1.0) > kWeightSumTolerance) {
      Fail(line, "lambda+ + lambda- differs from 1");
    }
    const auto [a, b] = Pair(line, u, v);
    lambda_plus_(a, b) = plus;
  }

  Instance Build() {
    ForEachPair(n_, [&](int u, int v) {
      if (seen_(u, v)) return;
      if (class_ == GraphClass::kKPartite && parts_[u] == parts_[v]) return;
      Fail(0, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                  ") is missing");
    });
    try {
      switch (class_) {
        case GraphClass::kComplete:
          return Instance::Complete(std::move(labels_));
        case GraphClass::kKPartite:
          return Instance::KPartite(std::move(parts_), std::move(labels_));
        case GraphClass::kWeightedComplete:
          return Instance::Weighted(std::move(lambda_plus_), ti_);
      }
    } catch (const ContractViolation& e) {
      Fail(0, e.what());
    }
    Fail(0, "unknown class");
  }

 private:
  std::pair<int, int> Pair(int line, long long u, long long v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) Fail(line, "vertex out of range");
    if (u == v) Fail(line, "self-loop");
    const int a = static_cast<int>(u);
    const int b = static_cast<int>(v);
    if (seen_(a, b)) Fail(line, "duplicate pair");
    seen_(a, b) = 1;
    return {a, b};
  }

  GraphClass class_;
  int n_;
  std::vector<int> parts_;
  bool ti_;
  PairMatrix<char> seen_;
  PairMatrix<EdgeLabel> labels_;
  PairMatrix<double> lambda_plus_;
};

int CheckedVertexCount(long long n, int line) {
  if (n < 0 || n > 1'000'000) Fail(line, "vertex count out of range");
  return static_cast<int>(n);
}

Instance ParseEdgeList(std::string_view text) {
  std::optional<Builder> builder;
  GraphClass cls = GraphClass::kComplete;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = Tokens(line);
    if (tok.empty()) continue;

    if (!builder) {
      if (tok[0] != "cc" || tok.size() < 3) {
        Fail(line_no, "expected header 'cc <class> <n> ...'");
      }
      cls = ParseGraphClass(tok[1]);
      const auto n_value = ToInt(tok[2]);
      if (!n_value) Fail(line_no, "bad vertex count");
      const int n = CheckedVertexCount(*n_value, line_no);
      std::vector<int> parts;
      bool ti = false;
      std::size_t next = 3;
      if (cls == GraphClass::kKPartite) {
        if (tok.size() != 3 + static_cast<std::size_t>(n)) {
          Fail(line_no, "k-partite header needs one part index per vertex");
        }
        for (int v = 0; v < n; ++v) {
          const auto p = ToInt(tok[3 + v]);
          if (!p || *p < 0 || *p > n) Fail(line_no, "bad part index");
          parts.push_back(static_cast<int>(*p));
        }
        next = tok.size();
      } else if (cls == GraphClass::kWeightedComplete && tok.size() == 4 &&
                 tok[3] == "ti") {
        ti = true;
        next = 4;
      }
      if (next != tok.size()) Fail(line_no, "unexpected header fields");
      builder.emplace(cls, n, std::move(parts), ti);
      continue;
    }

    if (tok.size() < 3) Fail(line_no, "expected 'u v <data>'");
    const auto u = ToInt(tok[0]);
    const auto v = ToInt(tok[1]);
    if (!u || !v) Fail(line_no, "bad vertex id");
    if (cls == GraphClass::kWeightedComplete) {
      if (tok.size() > 4) Fail(line_no, "too many fields");
      const auto plus = ToDouble(tok[2]);
      if (!plus) Fail(line_no, "bad lambda+");
      std::optional<double> minus;
      if (tok.size() == 4) {
        minus = ToDouble(tok[3]);
        if (!minus) Fail(line_no, "bad lambda-");
      }
      builder->AddWeight(line_no, *u, *v, *plus, minus);
    } else {
      if (tok.size() != 3) Fail(line_no, "too many fields");
      const auto label = ToLabel(tok[2]);
      if (!label) Fail(line_no, "label must be +, - or 0");
      builder->AddLabel(line_no, *u, *v, *label);
    }
  }
  if (!builder) Fail(0, "missing header");
  return builder->Build();
}

Instance ParseJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    Fail(0, std::string("JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) Fail(0, "JSON instance must be an object");
    const GraphClass cls = ParseGraphClass(doc.at("class").get<std::string>());
    const int n = CheckedVertexCount(doc.at("n").get<long long>(), 0);
    std::vector<int> parts;
    if (cls == GraphClass::kKPartite) {
      parts = doc.at("parts").get<std::vector<int>>();
      if (static_cast<int>(parts.size()) != n) Fail(0, "parts size differs from n");
      for (int p : parts) {
        if (p < 0) Fail(0, "negative part index");
      }
    }
    bool ti = false;
    if (doc.contains("flags") && doc["flags"].contains("ti")) {
      ti = doc["flags"]["ti"].get<bool>();
    }
    if (ti && cls != GraphClass::kWeightedComplete) {
      Fail(0, "ti flag on a labeled instance");
    }
    Builder builder(cls, n, std::move(parts), ti);
    for (const auto& e : doc.at("edges")) {
      const long long u = e.at("u").get<long long>();
      const long long v = e.at("v").get<long long>();
      if (cls == GraphClass::kWeightedComplete) {
        const json* plus = nullptr;
        if (e.contains("lplus")) plus = &e["lplus"];
        else if (e.contains("lp")) plus = &e["lp"];
        if (plus == nullptr) Fail(0, "weighted edge without lplus");
        std::optional<double> minus;
        if (e.contains("lminus")) minus = e["lminus"].get<double>();
        builder.AddWeight(0, u, v, plus->get<double>(), minus);
      } else {
        const auto label = ToLabel(e.at("label").get<std::string>());
        if (!label) Fail(0, "label must be +, - or 0");
        builder.AddLabel(0, u, v, *label);
      }
    }
    return builder.Build();
  } catch (const json::exception& e) {
    Fail(0, std::string("JSON: ") + e.what());
  }
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? ParseJson(text) : ParseEdgeList(text);
  }
  Fail(0, "empty instance");
}

std::string SerializeInstance(const Instance& inst, InstanceFormat format) {
  const int n = inst.n();
  if (format == InstanceFormat::kJson) {
    json doc;
    doc["class"] = std::string(GraphClassName(inst.graph_class()));
    doc["n"] = n;
    if (inst.graph_class() == GraphClass::kKPartite) doc["parts"] = inst.part_of();
    json edges = json::array();
    ForEachPair(n, [&](int u, int v) {
      if (inst.weighted()) {
        edges.push_back({{"u", u}, {"v", v}, {"lplus", inst.lambda_plus(u, v)}});
      } else {
        edges.push_back(
            {{"u", u}, {"v", v}, {"label", std::string(1, LabelChar(inst.label(u, v)))}});
      }
    });
    doc["edges"] = std::move(edges);
    doc["flags"] = {{"ti", inst.triangle_inequality()}};
    return doc.dump(1) + "\n";
  }

  std::ostringstream out;
  out << "cc " << GraphClassName(inst.graph_class()) << ' ' << n;
  for (int p : inst.part_of()) out << ' ' << p;
  if (inst.weighted() && inst.triangle_inequality()) out << " ti";
  out << '\n';
  ForEachPair(n, [&](int u, int v) {
    out << u << ' ' << v << ' ';
    if (inst.weighted()) {
      out << FormatDouble(inst.lambda_plus(u, v));
    } else {
      out << LabelChar(inst.label(u, v));
    }
    out << '\n';
  });
  return out.str();
}

std::string ClusteringToJson(const Clustering& c) {
  json doc;
  doc["n"] = c.size();
  doc["assignment"] = c.assignment();
  doc["clusters"] = c.Clusters();
  return doc.dump() + "\n";
}

Clustering ClusteringFromJson(std::string_view text) {
  try {
    const json doc = json::parse(text);
    auto assignment = doc.at("assignment").get<std::vector<int>>();
    for (int id : assignment) {
      if (id < 0) Fail(0, "negative cluster id");
    }
    return Clustering(std::move(assignment));
  } catch (const json::exception& e) {
    Fail(0, std::string("clustering JSON: ") + e.what());
  }
}

}  // namespace ccround
