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

#include "descmod/modulation.hpp"

#include <cmath>
#include <limits>

#include "descmod/error.hpp"

namespace descmod {
namespace {

double gaussian_self_weight(double theta, double e, double std) {
  if (std < 0.0) {
    throw Error(ErrorCode::domain_error,
                "self_weight: std must be non-negative");
  }
  const double radius = kBlurFloor + std;
  const double offset = theta - e;
  return std::exp(-(offset * offset) / (2.0 * radius * radius));
}

double ablation_self_weight(SelfWeightMode mode, double theta) {
  switch (mode) {
    case SelfWeightMode::auto_focus:
      break;  // handled by the caller
    case SelfWeightMode::unit:
      return 1.0;
    case SelfWeightMode::similarity:
      // Backward magnitude of the inner-product metric per unit norm.
      return std::abs(std::sin(theta));
    case SelfWeightMode::l2:
      // Backward magnitude of the chord metric per unit norm.
      return std::abs(std::cos(theta / 2.0));
  }
  throw Error(ErrorCode::domain_error, "self_weight: unknown mode");
}

}  // namespace

const char* self_weight_mode_name(SelfWeightMode mode) {
  switch (mode) {
    case SelfWeightMode::auto_focus:
      return "af";
    case SelfWeightMode::unit:
      return "theta";
    case SelfWeightMode::similarity:
      return "sim";
    case SelfWeightMode::l2:
      return "l2";
  }
  return "unknown";
}

SelfWeightMode parse_self_weight_mode(const std::string& name) {
  if (name == "af") return SelfWeightMode::auto_focus;
  if (name == "theta") return SelfWeightMode::unit;
  if (name == "sim") return SelfWeightMode::similarity;
  if (name == "l2") return SelfWeightMode::l2;
  throw Error(ErrorCode::config_error,
              "self_weight_mode must be one of af|theta|sim|l2, got '" +
                  name + "'");
}

double self_weight_pos(double theta, double e, double std) {
  return gaussian_self_weight(theta, e, std);
}

double self_weight_neg(double theta, double e, double std) {
  return gaussian_self_weight(theta, e, std);
}

double std_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double std_normal_icdf(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw Error(ErrorCode::domain_error, "std_normal_icdf: p outside (0, 1)");
  }
  if (p == 0.5) return 0.0;
  // Mirror the upper half onto the lower so antisymmetry holds bitwise.
  if (p > 0.5) return -std_normal_icdf(1.0 - p);

  double lo = -40.0;
  double hi = 0.0;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (std_normal_cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double coupled_weight(double theta_rel, double e, double std, double m) {
  if (!(std > 0.0)) {
    throw Error(ErrorCode::domain_error,
                "coupled_weight: std must be positive");
  }
  if (m < 0.0 || m >= 1.0) {
    throw Error(ErrorCode::domain_error,
                "coupled_weight: m outside [0, 1)");
  }
  const double z = (theta_rel - e) / std;
  const double cut = m > 0.0 ? std_normal_icdf(m)
                             : -std::numeric_limits<double>::infinity();
  return z > cut ? std_normal_cdf(z) : 0.0;
}

WeightBatch compute_weights(const TripletBatch& batch, const StatState& stats,
                            const ModulationConfig& cfg, bool warming) {
  if (!warming && !stats.initialized) {
    throw Error(ErrorCode::uninitialized_stats,
                "compute_weights: angle statistics not initialized");
  }
  const std::size_t n = batch.size();
  WeightBatch out;
  out.w_self_pos.assign(n, 0.0);
  out.w_self_neg.assign(n, 0.0);
  out.w_coupled.assign(n, 0.0);
  out.w_pos.assign(n, 0.0);
  out.w_neg.assign(n, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    if (!batch.valid[i]) continue;
    if (warming) {
      out.w_self_pos[i] = 1.0;
      out.w_self_neg[i] = 1.0;
      out.w_coupled[i] = 1.0;
    } else {
      if (cfg.self_weight_mode == SelfWeightMode::auto_focus) {
        out.w_self_pos[i] = self_weight_pos(
            batch.theta_pos[i], stats.e_theta_pos, stats.std_theta_pos);
        out.w_self_neg[i] = self_weight_neg(
            batch.theta_neg[i], stats.e_theta_neg, stats.std_theta_neg);
      } else {
        out.w_self_pos[i] =
            ablation_self_weight(cfg.self_weight_mode, batch.theta_pos[i]);
        out.w_self_neg[i] =
            ablation_self_weight(cfg.self_weight_mode, batch.theta_neg[i]);
      }
      out.w_coupled[i] = coupled_weight(batch.theta_rel[i], stats.e_theta_rel,
                                        stats.std_theta_rel, cfg.m);
    }
    out.w_pos[i] = out.w_self_pos[i] * out.w_coupled[i];
    out.w_neg[i] = out.w_self_neg[i] * out.w_coupled[i];
  }

  for (std::size_t i = 0; i < n; ++i) out.p_pos += out.w_pos[i];
  for (std::size_t i = 0; i < n; ++i) out.p_neg += out.w_neg[i];
  return out;
}

double pseudo_loss(const TripletBatch& batch, const WeightBatch& weights,
                   const StatState& stats, double alpha) {
  if (!(stats.e_power_pos > 0.0) || !(stats.e_power_neg > 0.0)) {
    throw Error(ErrorCode::domain_error,
                "pseudo_loss: power expectations must be positive");
  }
  double sum_pos = 0.0;
  double sum_neg = 0.0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (!batch.valid[i]) continue;
    sum_pos += weights.w_pos[i] * batch.theta_pos[i];
    sum_neg += weights.w_neg[i] * batch.theta_neg[i];
  }
  return (alpha / stats.e_power_pos) * sum_pos -
         (1.0 / stats.e_power_neg) * sum_neg;
}

double pseudo_loss_plain(const TripletBatch& batch,
                         const WeightBatch& weights) {
  double sum_pos = 0.0;
  double sum_neg = 0.0;
  std::size_t n_valid = 0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (!batch.valid[i]) continue;
    sum_pos += weights.w_pos[i] * batch.theta_pos[i];
    sum_neg += weights.w_neg[i] * batch.theta_neg[i];
    ++n_valid;
  }
  if (n_valid == 0) return 0.0;
  return (sum_pos - sum_neg) / static_cast<double>(n_valid);
}

}  // namespace descmod
