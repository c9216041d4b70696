// Copyright 2026 The descmod authors
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

#ifndef DESCMOD_RNG_HPP_
#define DESCMOD_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace descmod {

/// Independent random substreams.  Every consumer derives its own stream
/// from (seed, stream, iteration, lane), so resuming a run from a
/// checkpoint reproduces the remaining draws without serialized engine
/// state.
enum class RngStream : std::uint64_t {
  weight_init = 1,
  dataset = 2,
  batch_sampling = 3,
  augmentation = 4,
  dropout = 5,
  evaluation = 6,
};

/// splitmix64 finalizer; used to hash stream keys into engine seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Deterministic generator with explicit distributions.  The standard
/// distribution adaptors are implementation-defined, so uniform and normal
/// sampling are spelled out here to keep byte-identical replays portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  Rng(std::uint64_t seed, RngStream stream, std::uint64_t iteration,
      std::uint64_t lane = 0);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [0, n).  n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Standard normal via Box-Muller; pairs are cached.
  double normal();

  double normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

/// Fisher-Yates shuffle driven by Rng::uniform_index.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  if (items.size() < 2) return;
  for (std::size_t i = items.size() - 1; i > 0; --i) {
    const std::size_t j = rng.uniform_index(i + 1);
    std::swap(items[i], items[j]);
  }
}

}  // namespace descmod

#endif  // DESCMOD_RNG_HPP_
