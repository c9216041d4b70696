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

#include "descmod/mining.hpp"

#include "descmod/error.hpp"

namespace descmod {

TripletBatch mine_triplets(const AngleMatrix& matrix, double tau) {
  constexpr double kPi = 3.14159265358979323846;
  if (!(tau > 0.0) || !(tau < kPi)) {
    throw Error(ErrorCode::domain_error,
                "mine_triplets: tau must lie in (0, pi)");
  }
  const std::size_t n = matrix.n;
  TripletBatch out;
  out.theta_pos.resize(n);
  out.theta_neg.assign(n, 0.0);
  out.theta_rel.assign(n, 0.0);
  out.neg_source.resize(n);
  out.valid.assign(n, false);

  for (std::size_t i = 0; i < n; ++i) {
    out.theta_pos[i] = matrix.at(i, i);

    // Scan candidates in (side, index) order and replace only on strictly
    // smaller angles; the first of several equal minima therefore wins,
    // which is exactly the lexicographic tie-break.
    double best = 0.0;
    NegSource source;
    bool found = false;
    for (int side = 0; side < 2; ++side) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double cand = side == 0 ? matrix.at(i, j) : matrix.at(j, i);
        if (cand < tau) continue;
        if (!found || cand < best) {
          best = cand;
          source = NegSource{side, j};
          found = true;
        }
      }
    }
    if (found) {
      out.theta_neg[i] = best;
      out.theta_rel[i] = out.theta_pos[i] - best;
      out.neg_source[i] = source;
      out.valid[i] = true;
    } else {
      out.neg_source[i] = NegSource{0, i};
    }
  }
  return out;
}

}  // namespace descmod
