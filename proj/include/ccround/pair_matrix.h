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

#ifndef CCROUND_PAIR_MATRIX_H_
#define CCROUND_PAIR_MATRIX_H_

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace ccround {

// Row-major index of the unordered pair {u, v}, u != v, among the
// n(n-1)/2 pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline std::size_t PairIndex(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  assert(0 <= u && u < v && v < n);
  const auto su = static_cast<std::size_t>(u);
  const auto sn = static_cast<std::size_t>(n);
  return su * (2 * sn - su - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

inline std::size_t PairCount(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

// Symmetric n x n matrix with an implicit diagonal, one slot per unordered
// pair. Symmetry holds by construction.
template <typename T>
class PairMatrix {
 public:
  PairMatrix() = default;
  PairMatrix(int n, T fill) : n_(n), data_(PairCount(n), fill) {}

  int size() const { return n_; }

  const T& operator()(int u, int v) const { return data_[PairIndex(n_, u, v)]; }
  T& operator()(int u, int v) { return data_[PairIndex(n_, u, v)]; }

  // Flat access in PairIndex order.
  const std::vector<T>& flat() const { return data_; }
  std::vector<T>& flat() { return data_; }

  friend bool operator==(const PairMatrix&, const PairMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<T> data_;
};

// Visits every unordered pair u < v in PairIndex order.
template <typename F>
void ForEachPair(int n, F&& f) {
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) f(u, v);
  }
}

}  // namespace ccround

#endif  // CCROUND_PAIR_MATRIX_H_
