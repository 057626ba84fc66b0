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

#ifndef CCROUND_INSTANCE_H_
#define CCROUND_INSTANCE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccround/pair_matrix.h"

namespace ccround {

enum class GraphClass { kComplete, kKPartite, kWeightedComplete };

// Pair label for the labeled classes. kNeutral is a missing edge and only
// occurs inside a part of a k-partite instance.
enum class EdgeLabel : std::int8_t { kNeutral = 0, kPlus = 1, kMinus = 2 };

std::string_view GraphClassName(GraphClass c);
GraphClass ParseGraphClass(std::string_view name);
char LabelChar(EdgeLabel label);

struct WeightPair {
  double plus = 0.0;
  double minus = 0.0;
};

// One of the two pair representations, matching the instance class.
using EdgeData = std::variant<EdgeLabel, WeightPair>;

// A correlation-clustering instance on vertices 0..n-1. Immutable once built;
// the factories check every class invariant and throw ContractViolation.
class Instance {
 public:
  Instance() = default;

  // Every pair must be kPlus or kMinus.
  static Instance Complete(PairMatrix<EdgeLabel> labels);

  // part_of[v] is the part of v. Pairs inside a part must be kNeutral,
  // pairs across parts kPlus or kMinus.
  static Instance KPartite(std::vector<int> part_of,
                           PairMatrix<EdgeLabel> labels);

  // lambda_plus in [0, 1] per pair; lambda_minus = 1 - lambda_plus. With
  // triangle_inequality set, lambda_minus must be a metric (within 1e-9).
  static Instance Weighted(PairMatrix<double> lambda_plus,
                           bool triangle_inequality);

  int n() const { return n_; }
  GraphClass graph_class() const { return class_; }
  bool weighted() const { return class_ == GraphClass::kWeightedComplete; }
  bool triangle_inequality() const { return triangle_inequality_; }

  const std::vector<int>& part_of() const { return part_of_; }
  int num_parts() const;

  // Labeled classes only.
  EdgeLabel label(int u, int v) const;
  const PairMatrix<EdgeLabel>& labels() const { return labels_; }

  // Weighted class only.
  double lambda_plus(int u, int v) const;
  double lambda_minus(int u, int v) const { return 1.0 - lambda_plus(u, v); }
  const PairMatrix<double>& lambda_plus_matrix() const { return lambda_plus_; }

  EdgeData edge(int u, int v) const;

  // Objective weight charged when u and v end up in different clusters
  // (cut_cost) or in the same cluster (join_cost). For labels: + costs 1 when
  // cut, - costs 1 when joined, neutral costs nothing.
  double cut_cost(int u, int v) const;
  double join_cost(int u, int v) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int n_ = 0;
  GraphClass class_ = GraphClass::kComplete;
  bool triangle_inequality_ = false;
  std::vector<int> part_of_;
  PairMatrix<EdgeLabel> labels_;
  PairMatrix<double> lambda_plus_;
};

// Largest lambda_minus(u,w) - lambda_minus(u,v) - lambda_minus(v,w) over all
// triples (0 when the metric condition holds everywhere).
double WorstLambdaMinusTriangleViolation(const PairMatrix<double>& lambda_plus);

// Partition of 0..n-1 as a cluster id per vertex. Ids are kept canonical:
// numbered 0, 1, ... in order of first occurrence.
class Clustering {
 public:
  Clustering() = default;
  explicit Clustering(std::vector<int> assignment);

  static Clustering OneCluster(int n);
  static Clustering Singletons(int n);

  int size() const { return static_cast<int>(assignment_.size()); }
  int num_clusters() const { return num_clusters_; }
  int operator[](int v) const { return assignment_[v]; }
  bool Together(int u, int v) const { return assignment_[u] == assignment_[v]; }
  const std::vector<int>& assignment() const { return assignment_; }
  std::vector<std::vector<int>> Clusters() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<int> assignment_;
  int num_clusters_ = 0;
};

// Number (or weight) of violated pair constraints.
double ClusteringCost(const Instance& inst, const Clustering& c);

// Upper bound on any clustering cost: sum over pairs of max(cut, join).
double TotalPairMass(const Instance& inst);

}  // namespace ccround

#endif  // CCROUND_INSTANCE_H_
