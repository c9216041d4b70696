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

#ifndef DESCMOD_GEOMETRY_HPP_
#define DESCMOD_GEOMETRY_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace descmod {

/// Embedding before normalization.  Entries must be finite, dimension >= 2.
using RawDescriptor = std::vector<double>;

/// Point on the unit hypersphere plus the pre-normalization magnitude.
/// The magnitude is kept because every backward magnitude law carries a
/// 1/magnitude factor.
struct UnitDescriptor {
  std::vector<double> unit;
  double magnitude = 0.0;
};

/// Distance metrics sharing the same forward geometry.
enum class Metric { angle, similarity, l2 };

/// Cosines are clamped to [-1 + kCosClamp, 1 - kCosClamp] before acos so the
/// acos derivative stays bounded; angles therefore live strictly inside
/// (0, pi).
inline constexpr double kCosClamp = 1e-7;

/// angle_grad is defined only for theta in [kAngleGuard, pi - kAngleGuard].
inline constexpr double kAngleGuard = 1e-3;

/// Norm below which a raw descriptor counts as the zero vector.
inline constexpr double kZeroNorm = 1e-12;

/// Sequential-order inner product.  Both the pairwise angle and the batch
/// angle matrix go through this one routine so their results are
/// byte-identical.
double dot(std::span<const double> x, std::span<const double> y);

/// Throws ZeroVector when the norm is below kZeroNorm.
UnitDescriptor normalize(const RawDescriptor& v);

/// Angular distance acos(clamp(x.unit . y.unit)).
double angle(const UnitDescriptor& x, const UnitDescriptor& y);

struct SimilarityL2 {
  double s = 0.0;  // inner product, in [-1, 1]
  double l = 0.0;  // chord length sqrt(2 - 2 s), in [0, 2]
};

/// Forward values of the two alternative metrics for the same pair.
SimilarityL2 similarity_and_l2(const UnitDescriptor& x,
                               const UnitDescriptor& y);

/// d theta / d x per raw coordinate:
///   -(y_hat - cos(theta) x_hat) / (magnitude * sin(theta)).
/// Tangent to the sphere at x_hat with norm exactly 1/magnitude.
/// Throws DegenerateAngle outside the guard range.
std::vector<double> angle_grad(const UnitDescriptor& x,
                               const UnitDescriptor& y);

/// Closed-form norm of the backward map for the given metric:
///   angle       -> 1 / magnitude
///   similarity  -> sqrt(1 - s^2) / magnitude
///   l2          -> sqrt(4 - l^2) / (2 * magnitude)
/// d is the metric's forward value; the l2 form is the continuous extension
/// of sqrt(4 l^2 - l^4) / (2 l) to l = 0.
double grad_magnitude(Metric metric, double magnitude, double d);

/// Square matrix of angles, rows = anchors, columns = positives.  The
/// diagonal holds the positive-pair angles.
struct AngleMatrix {
  std::size_t n = 0;
  std::vector<double> entries;  // row-major, n * n

  double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

/// entry (i, j) = angle(anchors[i], positives[j]), computed with the exact
/// arithmetic of angle() so an elementwise comparison holds bitwise.
AngleMatrix angle_matrix(std::span<const UnitDescriptor> anchors,
                         std::span<const UnitDescriptor> positives);

}  // namespace descmod

#endif  // DESCMOD_GEOMETRY_HPP_
