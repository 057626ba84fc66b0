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

#ifndef CCROUND_RNG_H_
#define CCROUND_RNG_H_

#include <cstdint>
#include <limits>

namespace ccround {

// SplitMix64 (Steele, Lea, Flood 2014). The state advances by the golden
// gamma 0x9e3779b97f4a7c15 and every output goes through the variant-13
// finalizer. All arithmetic is on uint64_t, so streams are bit-identical on
// every platform. Satisfies UniformRandomBitGenerator, but the helpers below
// should be preferred over <random> distributions, whose outputs are not
// specified across standard library implementations.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += kGamma;
    return Mix(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  // True with probability p; p <= 0 never fires, p >= 1 always fires.
  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t r;
    do {
      r = (*this)();
    } while (r >= limit);
    return r % bound;
  }

  // Independent child stream keyed by `index`; does not advance this one.
  SplitMix64 Split(std::uint64_t index) const {
    return SplitMix64(DeriveSeed(state_, index));
  }

  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Seed for sub-run `index` of a run seeded with `seed`.
  static constexpr std::uint64_t DeriveSeed(std::uint64_t seed,
                                            std::uint64_t index) {
    return Mix(seed ^ Mix(index + kGamma));
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t state_;
};

}  // namespace ccround

#endif  // CCROUND_RNG_H_
