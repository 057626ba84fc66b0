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

#include "ccround/instance.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ccround/errors.h"

namespace ccround {

namespace {

constexpr double kWeightTolerance = 1e-9;

void CheckVertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw ContractViolation("vertex " + std::to_string(v) +
                            " out of range for n=" + std::to_string(n));
  }
}

}  // namespace

std::string_view GraphClassName(GraphClass c) {
  switch (c) {
    case GraphClass::kComplete:
      return "complete";
    case GraphClass::kKPartite:
      return "kpartite";
    case GraphClass::kWeightedComplete:
      return "weighted";
  }
  return "?";
}

GraphClass ParseGraphClass(std::string_view name) {
  if (name == "complete") return GraphClass::kComplete;
  if (name == "kpartite" || name == "k-partite") return GraphClass::kKPartite;
  if (name == "weighted" || name == "weighted-complete") {
    return GraphClass::kWeightedComplete;
  }
  throw DataFormatError("unknown graph class '" + std::string(name) + "'");
}

char LabelChar(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::kPlus:
      return '+';
    case EdgeLabel::kMinus:
      return '-';
    case EdgeLabel::kNeutral:
      return '0';
  }
  return '?';
}

Instance Instance::Complete(PairMatrix<EdgeLabel> labels) {
  for (EdgeLabel l : labels.flat()) {
    if (l == EdgeLabel::kNeutral) {
      throw ContractViolation("complete instance with a neutral pair");
    }
  }
  Instance inst;
  inst.n_ = labels.size();
  inst.class_ = GraphClass::kComplete;
  inst.labels_ = std::move(labels);
  return inst;
}

Instance Instance::KPartite(std::vector<int> part_of,
                            PairMatrix<EdgeLabel> labels) {
  const int n = labels.size();
  if (static_cast<int>(part_of.size()) != n) {
    throw ContractViolation("part assignment size differs from n");
  }
  for (int p : part_of) {
    if (p < 0) throw ContractViolation("negative part index");
  }
  ForEachPair(n, [&](int u, int v) {
    const bool same = part_of[u] == part_of[v];
    const bool neutral = labels(u, v) == EdgeLabel::kNeutral;
    if (same != neutral) {
      throw ContractViolation(
          "k-partite pair (" + std::to_string(u) + "," + std::to_string(v) +
          ") must be neutral iff both ends share a part");
    }
  });
  Instance inst;
  inst.n_ = n;
  inst.class_ = GraphClass::kKPartite;
  inst.part_of_ = std::move(part_of);
  inst.labels_ = std::move(labels);
  return inst;
}

Instance Instance::Weighted(PairMatrix<double> lambda_plus,
                            bool triangle_inequality) {
  for (double w : lambda_plus.flat()) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw ContractViolation("lambda+ outside [0,1]");
    }
  }
  if (triangle_inequality &&
      WorstLambdaMinusTriangleViolation(lambda_plus) > kWeightTolerance) {
    throw ContractViolation("lambda- violates the triangle inequality");
  }
  Instance inst;
  inst.n_ = lambda_plus.size();
  inst.class_ = GraphClass::kWeightedComplete;
  inst.triangle_inequality_ = triangle_inequality;
  inst.lambda_plus_ = std::move(lambda_plus);
  return inst;
}

int Instance::num_parts() const {
  if (part_of_.empty()) return 0;
  return *std::max_element(part_of_.begin(), part_of_.end()) + 1;
}

EdgeLabel Instance::label(int u, int v) const {
  if (weighted()) throw ContractViolation("label() on a weighted instance");
  CheckVertex(n_, u);
  CheckVertex(n_, v);
  if (u == v) throw ContractViolation("label() of a vertex with itself");
  return labels_(u, v);
}

double Instance::lambda_plus(int u, int v) const {
  if (!weighted()) {
    throw ContractViolation("lambda_plus() on a labeled instance");
  }
  CheckVertex(n_, u);
  CheckVertex(n_, v);
  if (u == v) throw ContractViolation("lambda_plus() of a vertex with itself");
  return lambda_plus_(u, v);
}

EdgeData Instance::edge(int u, int v) const {
  if (weighted()) {
    const double p = lambda_plus(u, v);
    return WeightPair{p, 1.0 - p};
  }
  return label(u, v);
}

double Instance::cut_cost(int u, int v) const {
  if (weighted()) return lambda_plus_(u, v);
  return labels_(u, v) == EdgeLabel::kPlus ? 1.0 : 0.0;
}

double Instance::join_cost(int u, int v) const {
  if (weighted()) return 1.0 - lambda_plus_(u, v);
  return labels_(u, v) == EdgeLabel::kMinus ? 1.0 : 0.0;
}

double WorstLambdaMinusTriangleViolation(
    const PairMatrix<double>& lambda_plus) {
  const int n = lambda_plus.size();
  double worst = 0.0;
  auto minus = [&](int a, int b) { return 1.0 - lambda_plus(a, b); };
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      for (int v = 0; v < n; ++v) {
        if (v == u || v == w) continue;
        worst = std::max(worst, minus(u, w) - minus(u, v) - minus(v, w));
      }
    }
  }
  return worst;
}

Clustering::Clustering(std::vector<int> assignment) {
  std::vector<int> relabel;
  for (int& id : assignment) {
    if (id < 0) throw ContractViolation("negative cluster id");
    if (static_cast<std::size_t>(id) >= relabel.size()) {
      relabel.resize(static_cast<std::size_t>(id) + 1, -1);
    }
    if (relabel[id] < 0) relabel[id] = num_clusters_++;
    id = relabel[id];
  }
  assignment_ = std::move(assignment);
}

Clustering Clustering::OneCluster(int n) {
  return Clustering(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Clustering Clustering::Singletons(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) a[v] = v;
  return Clustering(std::move(a));
}

std::vector<std::vector<int>> Clustering::Clusters() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_clusters_));
  for (int v = 0; v < size(); ++v) out[assignment_[v]].push_back(v);
  return out;
}

double ClusteringCost(const Instance& inst, const Clustering& c) {
  if (c.size() != inst.n()) {
    throw ContractViolation("clustering covers " + std::to_string(c.size()) +
                            " vertices, instance has " +
                            std::to_string(inst.n()));
  }
  double cost = 0.0;
  ForEachPair(inst.n(), [&](int u, int v) {
    cost += c.Together(u, v) ? inst.join_cost(u, v) : inst.cut_cost(u, v);
  });
  return cost;
}

double TotalPairMass(const Instance& inst) {
  double mass = 0.0;
  ForEachPair(inst.n(), [&](int u, int v) {
    mass += std::max(inst.cut_cost(u, v), inst.join_cost(u, v));
  });
  return mass;
}

}  // namespace ccround
