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

#include "descmod/stats.hpp"

#include <cmath>

#include "descmod/error.hpp"

namespace descmod {

Moments batch_moments(const std::vector<double>& values,
                      const std::vector<bool>& mask) {
  if (values.size() != mask.size()) {
    throw Error(ErrorCode::shape_mismatch,
                "batch_moments: value/mask length mismatch");
  }
  std::size_t n = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!mask[i]) continue;
    sum += values[i];
    ++n;
  }
  if (n < 2) {
    throw Error(ErrorCode::insufficient_data,
                "batch_moments: needs at least 2 unmasked values");
  }
  Moments out;
  out.mean = sum / static_cast<double>(n);
  double sq = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!mask[i]) continue;
    const double d = values[i] - out.mean;
    sq += d * d;
  }
  out.std = std::sqrt(sq / static_cast<double>(n));
  return out;
}

double ema_update(double beta_prev, double mu_t) {
  return kEmaKeep * beta_prev + kEmaRate * mu_t;
}

StatState update_angle_stats(StatState state, const TripletBatch& batch) {
  const Moments pos = batch_moments(batch.theta_pos, batch.valid);
  const Moments neg = batch_moments(batch.theta_neg, batch.valid);
  const Moments rel = batch_moments(batch.theta_rel, batch.valid);
  if (!state.initialized) {
    state.e_theta_pos = pos.mean;
    state.std_theta_pos = pos.std;
    state.e_theta_neg = neg.mean;
    state.std_theta_neg = neg.std;
    state.e_theta_rel = rel.mean;
    state.std_theta_rel = rel.std;
    state.initialized = true;
    return state;
  }
  state.e_theta_pos = ema_update(state.e_theta_pos, pos.mean);
  state.std_theta_pos = ema_update(state.std_theta_pos, pos.std);
  state.e_theta_neg = ema_update(state.e_theta_neg, neg.mean);
  state.std_theta_neg = ema_update(state.std_theta_neg, neg.std);
  state.e_theta_rel = ema_update(state.e_theta_rel, rel.mean);
  state.std_theta_rel = ema_update(state.std_theta_rel, rel.std);
  return state;
}

StatState update_power_stats(StatState state, double p_pos, double p_neg) {
  if (p_pos < 0.0 || p_neg < 0.0) {
    throw Error(ErrorCode::domain_error,
                "update_power_stats: powers must be non-negative");
  }
  state.e_power_pos = ema_update(state.e_power_pos, p_pos);
  state.e_power_neg = ema_update(state.e_power_neg, p_neg);
  return state;
}

}  // namespace descmod
