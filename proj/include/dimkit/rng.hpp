// Copyright 2026 The dimkit Authors.
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

#ifndef DIMKIT_RNG_HPP_
#define DIMKIT_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace dimkit {

// Counter-based seed derivation: the seed for item `index` of stream `tag`
// under `master`. Distinct (tag, index) pairs give independent streams, so
// shards can be generated in any order.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t index);

// Seeded generator with sampling helpers whose output is identical across
// standard libraries (the std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::size_t index(std::size_t n);

  // Uniform in [lo, hi].
  int range(int lo, int hi);

  // Uniform in [0, 1).
  double unit();

  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  const T &pick(const std::vector<T> &items) {
    return items[index(items.size())];
  }

  template <typename T>
  void shuffle(std::vector<T> &items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace dimkit

#endif  // DIMKIT_RNG_HPP_
