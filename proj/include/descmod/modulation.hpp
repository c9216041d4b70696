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

#ifndef DESCMOD_MODULATION_HPP_
#define DESCMOD_MODULATION_HPP_

#include <string>
#include <vector>

#include "descmod/mining.hpp"
#include "descmod/stats.hpp"

namespace descmod {

/// Lower bound added to the tracked Std before it enters the Gaussian self
/// weight, so the blur radius never collapses.
inline constexpr double kBlurFloor = 3.14159265358979323846 / 6.0;

/// Which self-weight curve multiplies the coupled weight.  auto_focus is
/// the Gaussian centered at the tracked mean; the other three are the
/// ablation substitutes: a constant 1, the similarity backward magnitude
/// sin(theta), and the chord backward magnitude |cos(theta/2)|.
enum class SelfWeightMode { auto_focus, unit, similarity, l2 };

const char* self_weight_mode_name(SelfWeightMode mode);
SelfWeightMode parse_self_weight_mode(const std::string& name);

struct ModulationConfig {
  double m = 0.6;       // probabilistic hard margin, in [0, 1)
  double alpha = 0.9;   // attenuation coefficient, > 0
  double tau = 0.6;     // anti-noise mining threshold, radians
  SelfWeightMode self_weight_mode = SelfWeightMode::auto_focus;
  bool power_adjust = true;
};

/// Per-triplet weights and the batch powers.  Masked triplets carry zero
/// weight everywhere and do not enter the powers.
struct WeightBatch {
  std::vector<double> w_self_pos;
  std::vector<double> w_self_neg;
  std::vector<double> w_coupled;
  std::vector<double> w_pos;  // w_self_pos * w_coupled
  std::vector<double> w_neg;  // w_self_neg * w_coupled
  double p_pos = 0.0;         // sum of w_pos
  double p_neg = 0.0;         // sum of w_neg
};

/// Gaussian self weight exp(-(theta - e)^2 / (2 (kBlurFloor + std)^2)).
double self_weight_pos(double theta, double e, double std);

/// Same curve evaluated with the negative-pair statistics.
double self_weight_neg(double theta, double e, double std);

/// Standard normal CDF via the complementary error function.
double std_normal_cdf(double z);

/// Inverse of std_normal_cdf on (0, 1); antisymmetric by construction:
/// icdf(p) == -icdf(1 - p) bitwise.
double std_normal_icdf(double p);

/// Probabilistic hard margin: with z = (theta_rel - e)/std the weight is
/// std_normal_cdf(z) when z exceeds std_normal_icdf(m), else 0.  The
/// easiest m-fraction of triplets is cut.
double coupled_weight(double theta_rel, double e, double std, double m);

/// All weights for a batch.  During warm-up every weight of a valid triplet
/// is 1; afterwards the three curves above apply with the post-update angle
/// statistics.  Throws UninitializedStats when invoked un-warmed on a
/// never-updated state.
WeightBatch compute_weights(const TripletBatch& batch, const StatState& stats,
                            const ModulationConfig& cfg, bool warming);

/// Power-adjusted scalar, Eq-for-value only (weights and expectations are
/// constants): (alpha / E[P+]) sum w+ theta+  -  (1 / E[P-]) sum w- theta-.
double pseudo_loss(const TripletBatch& batch, const WeightBatch& weights,
                   const StatState& stats, double alpha);

/// Ablation variant with power adjustment off: the same weighted difference
/// normalized by the valid-triplet count, with no attenuation.
double pseudo_loss_plain(const TripletBatch& batch,
                         const WeightBatch& weights);

}  // namespace descmod

#endif  // DESCMOD_MODULATION_HPP_
