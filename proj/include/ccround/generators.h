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

#ifndef CCROUND_GENERATORS_H_
#define CCROUND_GENERATORS_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "ccround/instance.h"
#include "ccround/lp.h"

namespace ccround {

// All generators are pure functions of their arguments. Random ones draw
// from a single SplitMix64 stream seeded with `seed`, visiting pairs in
// PairIndex order.

// Each pair is + with probability plus_prob, - otherwise.
Instance GenerateCompleteRandom(int n, double plus_prob, std::uint64_t seed);

// Vertices are assigned to parts consecutively: part 0 gets the first
// part_sizes[0] ids, and so on. Cross pairs are + with probability plus_prob.
Instance GenerateKPartiteRandom(const std::vector<int>& part_sizes,
                                double plus_prob, std::uint64_t seed);

// Weighted complete instance with lambda+ uniform in [0,1). With
// triangle_inequality, lambda- is |t_u - t_v| for uniform points t_v, which
// is a metric.
Instance GenerateWeightedRandom(int n, bool triangle_inequality,
                                std::uint64_t seed);

struct PlantedInstance {
  Instance instance;
  Clustering planted;
};

// k near-equal contiguous blocks; labels agree with the blocks, then each
// label is flipped independently with probability `corruption`.
PlantedInstance GeneratePlanted(int n, int k, double corruption,
                                std::uint64_t seed);

// Weighted instance on 2n vertices split into V1 = {0..n-1} and
// V2 = {n..2n-1}: lambda- = 1/3 across the split, 2/3 inside each side.
// The triangle-inequality flag is set.
Instance GenerateGapTriangleInequality(int n);

// Bipartite graph between left vertices 0..left-1 and right vertices
// 0..right-1; edges are (left index, right index).
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;
};

// Cycle of even length 2 * half_length alternating between the two sides.
BipartiteGraph EvenCycle(int half_length);

struct GapKPartitePoint {
  Instance instance;
  LpSolution lp;
};

// Two-part instance from a bipartite graph (left side gets ids 0..left-1):
// graph edges are +, non-edges across are -, pairs inside a side neutral.
// The LP point is 1/3 on +, 1 on -, 2/3 on neutral pairs, objective |E|/3.
// Throws ContractViolation on malformed input or an infeasible point.
GapKPartitePoint GapKPartiteLpPoint(const BipartiteGraph& graph);

struct Blowup {
  Instance instance;
  // original_of[i] is the weighted-instance vertex that blown-up vertex i
  // copies. Vertex u's copies are u*N .. u*N + N-1.
  std::vector<int> original_of;
  int copies = 0;
};

inline constexpr int kDefaultMaxBlowupVertices = 8192;

// Replaces every vertex by `copies` vertices; copies of one vertex are
// joined by + edges, and a copy pair (u_i, v_j) is + with probability
// lambda+(u,v). Throws ContractViolation if n * copies exceeds
// max_vertices.
Blowup WeightedToUnweighted(const Instance& weighted, int copies,
                            std::uint64_t seed,
                            int max_vertices = kDefaultMaxBlowupVertices);

// Places every original vertex in the cluster of one of its copies chosen
// uniformly at random.
Clustering LiftClustering(const Clustering& blown_up,
                          const std::vector<int>& original_of,
                          std::uint64_t seed);

}  // namespace ccround

#endif  // CCROUND_GENERATORS_H_
