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

#ifndef DESCMOD_MINING_HPP_
#define DESCMOD_MINING_HPP_

#include <cstddef>
#include <vector>

#include "descmod/geometry.hpp"

namespace descmod {

/// Where a mined negative came from: the anchor row (angle(a_i, p_j)) or the
/// positive column (angle(a_j, p_i)).  Side 0 is the row.  (side, index)
/// is the total order used to break ties.
struct NegSource {
  int side = 0;
  std::size_t index = 0;

  bool operator==(const NegSource&) const = default;
};

/// Mined triplets for one batch.  Index i pairs anchor i with positive i and
/// the hardest admissible negative.  Entries at masked indices are zeroed.
struct TripletBatch {
  std::vector<double> theta_pos;
  std::vector<double> theta_neg;
  std::vector<double> theta_rel;  // theta_pos - theta_neg
  std::vector<NegSource> neg_source;
  std::vector<bool> valid;

  std::size_t size() const { return theta_pos.size(); }

  std::size_t valid_count() const {
    std::size_t n = 0;
    for (const bool v : valid) n += v ? 1 : 0;
    return n;
  }
};

/// Hardest-in-batch negative per index, over both the anchor row and the
/// positive column, keeping only candidates with angle >= tau.  Angles below
/// tau are treated as probable false negatives and excluded.  An index with
/// no admissible candidate is masked invalid, not an error.  Equal angles
/// resolve to the lowest (side, index).
TripletBatch mine_triplets(const AngleMatrix& matrix, double tau);

}  // namespace descmod

#endif  // DESCMOD_MINING_HPP_
