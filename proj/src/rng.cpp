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

#include "descmod/rng.hpp"

#include <cmath>

#include "descmod/error.hpp"

namespace descmod {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t combine(std::uint64_t h, std::uint64_t v) noexcept {
  return mix64(h + kGolden + v);
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

Rng::Rng(std::uint64_t seed, RngStream stream, std::uint64_t iteration,
         std::uint64_t lane)
    : engine_(combine(
          combine(combine(seed, static_cast<std::uint64_t>(stream)),
                  iteration),
          lane)) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::domain_error, "uniform_index: n must be positive");
  }
  const auto wide = static_cast<unsigned __int128>(next_u64()) *
                    static_cast<unsigned __int128>(n);
  return static_cast<std::size_t>(wide >> 64);
}

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // u1 in (0, 1] keeps the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double arg = 2.0 * 3.14159265358979323846 * u2;
  cached_normal_ = radius * std::sin(arg);
  has_cached_normal_ = true;
  return radius * std::cos(arg);
}

double Rng::normal(double mean, double stddev) {
  return mean + stddev * normal();
}

}  // namespace descmod
