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

#include "descmod/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "descmod/error.hpp"

namespace descmod {
namespace {

double clamped_cos(double c) {
  return std::clamp(c, -1.0 + kCosClamp, 1.0 - kCosClamp);
}

double angle_from_cos(double c) { return std::acos(clamped_cos(c)); }

}  // namespace

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::shape_mismatch, "dot: dimension mismatch");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    acc += x[k] * y[k];
  }
  return acc;
}

UnitDescriptor normalize(const RawDescriptor& v) {
  if (v.size() < 2) {
    throw Error(ErrorCode::shape_mismatch,
                "normalize: descriptor dimension must be >= 2");
  }
  const double norm = std::sqrt(dot(v, v));
  if (!std::isfinite(norm)) {
    throw Error(ErrorCode::domain_error, "normalize: non-finite input");
  }
  if (norm < kZeroNorm) {
    throw Error(ErrorCode::zero_vector, "normalize: zero vector");
  }
  UnitDescriptor out;
  out.unit.resize(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.unit[k] = v[k] / norm;
  }
  out.magnitude = norm;
  return out;
}

double angle(const UnitDescriptor& x, const UnitDescriptor& y) {
  return angle_from_cos(dot(x.unit, y.unit));
}

SimilarityL2 similarity_and_l2(const UnitDescriptor& x,
                               const UnitDescriptor& y) {
  SimilarityL2 out;
  out.s = std::clamp(dot(x.unit, y.unit), -1.0, 1.0);
  out.l = std::sqrt(std::max(2.0 - 2.0 * out.s, 0.0));
  return out;
}

std::vector<double> angle_grad(const UnitDescriptor& x,
                               const UnitDescriptor& y) {
  if (x.unit.size() != y.unit.size()) {
    throw Error(ErrorCode::shape_mismatch, "angle_grad: dimension mismatch");
  }
  const double c = clamped_cos(dot(x.unit, y.unit));
  const double theta = std::acos(c);
  constexpr double kPi = 3.14159265358979323846;
  if (theta < kAngleGuard || theta > kPi - kAngleGuard) {
    throw Error(ErrorCode::degenerate_angle,
                "angle_grad: angle too close to 0 or pi");
  }
  const double sin_theta = std::sqrt(1.0 - c * c);
  const double scale = -1.0 / (x.magnitude * sin_theta);
  std::vector<double> grad(x.unit.size());
  for (std::size_t k = 0; k < grad.size(); ++k) {
    grad[k] = scale * (y.unit[k] - c * x.unit[k]);
  }
  return grad;
}

double grad_magnitude(Metric metric, double magnitude, double d) {
  if (!(magnitude > 0.0)) {
    throw Error(ErrorCode::domain_error,
                "grad_magnitude: magnitude must be positive");
  }
  constexpr double kPi = 3.14159265358979323846;
  switch (metric) {
    case Metric::angle:
      if (d < 0.0 || d > kPi) {
        throw Error(ErrorCode::invalid_distance,
                    "grad_magnitude: angle outside [0, pi]");
      }
      return 1.0 / magnitude;
    case Metric::similarity:
      if (d < -1.0 || d > 1.0) {
        throw Error(ErrorCode::invalid_distance,
                    "grad_magnitude: similarity outside [-1, 1]");
      }
      return std::sqrt(1.0 - d * d) / magnitude;
    case Metric::l2:
      if (d < 0.0 || d > 2.0) {
        throw Error(ErrorCode::invalid_distance,
                    "grad_magnitude: chord length outside [0, 2]");
      }
      return std::sqrt(4.0 - d * d) / (2.0 * magnitude);
  }
  throw Error(ErrorCode::domain_error, "grad_magnitude: unknown metric");
}

AngleMatrix angle_matrix(std::span<const UnitDescriptor> anchors,
                         std::span<const UnitDescriptor> positives) {
  if (anchors.size() != positives.size()) {
    throw Error(ErrorCode::shape_mismatch,
                "angle_matrix: anchor/positive count mismatch");
  }
  const std::size_t n = anchors.size();
  AngleMatrix out;
  out.n = n;
  out.entries.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (anchors[i].unit.size() != anchors[0].unit.size() ||
        positives[i].unit.size() != anchors[0].unit.size()) {
      throw Error(ErrorCode::shape_mismatch,
                  "angle_matrix: descriptor dimension mismatch");
    }
  }
  // Gram matrix of the unit rows, clamped and mapped through acos entry by
  // entry.  The inner products reuse dot() so every entry is byte-identical
  // to a standalone angle() call.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = angle_from_cos(dot(anchors[i].unit, positives[j].unit));
    }
  }
  return out;
}

}  // namespace descmod
