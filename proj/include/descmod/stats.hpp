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

#ifndef DESCMOD_STATS_HPP_
#define DESCMOD_STATS_HPP_

#include <vector>

#include "descmod/mining.hpp"

namespace descmod {

/// Fixed coefficients of the sequential update
/// beta_t = kEmaKeep * beta_{t-1} + kEmaRate * mu_t.
/// Both are spelled as literals; deriving one from the other at runtime
/// could differ in the last bit and the update is contractually exact.
inline constexpr double kEmaKeep = 0.999;
inline constexpr double kEmaRate = 0.001;

/// Power expectations start here regardless of the first batch; the decay
/// toward the true batch power ramps the effective step size up like a
/// one-cycle schedule.
inline constexpr double kInitialPower = 10000.0;

/// EMA estimates of the global pair statistics.  Angle fields are seeded
/// from the first batch's moments (initialized flips to true); power fields
/// start at kInitialPower and are never seeded from data.
struct StatState {
  double e_theta_pos = 0.0;
  double std_theta_pos = 0.0;
  double e_theta_neg = 0.0;
  double std_theta_neg = 0.0;
  double e_theta_rel = 0.0;
  double std_theta_rel = 0.0;
  double e_power_pos = kInitialPower;
  double e_power_neg = kInitialPower;
  bool initialized = false;
};

struct Moments {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
};

/// Mean and population standard deviation over unmasked entries (two-pass).
/// Throws InsufficientData with fewer than 2 unmasked values.
Moments batch_moments(const std::vector<double>& values,
                      const std::vector<bool>& mask);

/// One sequential update step, exactly 0.999 * beta_prev + 0.001 * mu_t.
double ema_update(double beta_prev, double mu_t);

/// EMA-update the six angle statistics from the batch's valid triplets.
/// The first batch seeds the statistics directly.
StatState update_angle_stats(StatState state, const TripletBatch& batch);

/// EMA-update the two power expectations.  Powers must be >= 0.
StatState update_power_stats(StatState state, double p_pos, double p_neg);

}  // namespace descmod

#endif  // DESCMOD_STATS_HPP_
