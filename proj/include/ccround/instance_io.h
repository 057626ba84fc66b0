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

#ifndef CCROUND_INSTANCE_IO_H_
#define CCROUND_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "ccround/instance.h"

namespace ccround {

enum class InstanceFormat { kEdgeList, kJson };

// Edge-list text:
//
//   # comment
//   cc <complete|kpartite|weighted> <n> [part of each vertex] [ti]
//   u v <+|-|0>            labeled classes
//   u v <lambda+> [lambda-] weighted class
//
// Every cross pair must be listed once; neutral pairs of a k-partite instance
// may be omitted. The trailing `ti` token marks a weighted instance whose
// lambda- satisfies the triangle inequality.
//
// JSON: {"class", "n", "parts"?, "edges": [{"u", "v", "label" | "lplus"
// (alias "lp"), "lminus"?}], "flags": {"ti"}}.
//
// ParseInstance detects the format from the first non-blank character and
// throws DataFormatError on any malformed or inconsistent input.
Instance ParseInstance(std::string_view text);

std::string SerializeInstance(const Instance& inst,
                              InstanceFormat format = InstanceFormat::kEdgeList);

// {"n", "assignment": [...], "clusters": [[...], ...]}.
std::string ClusteringToJson(const Clustering& c);
Clustering ClusteringFromJson(std::string_view text);

}  // namespace ccround

#endif  // CCROUND_INSTANCE_IO_H_
