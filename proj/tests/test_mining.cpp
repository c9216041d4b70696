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

#include <algorithm>
#include <tuple>
#include <vector>

#include "descmod/error.hpp"
#include "descmod/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace {

using descmod::AngleMatrix;
using descmod::ErrorCode;
using descmod::mine_triplets;
using descmod::NegSource;
using descmod::Rng;
using descmod::TripletBatch;
using descmod::testutil::throws_code;

AngleMatrix make_matrix(std::size_t n, const std::vector<double>& entries) {
  AngleMatrix m;
  m.n = n;
  m.entries = entries;
  return m;
}

AngleMatrix random_matrix(Rng& rng, std::size_t n) {
  AngleMatrix m;
  m.n = n;
  m.entries.resize(n * n);
  for (auto& e : m.entries) e = rng.uniform(0.01, 3.13);
  return m;
}

/// Independent exhaustive reference: gather every candidate as a
/// (theta, side, index) tuple, drop those below tau, and take the tuple
/// minimum.
TripletBatch oracle_mine(const AngleMatrix& m, double tau) {
  const std::size_t n = m.n;
  TripletBatch out;
  out.theta_pos.resize(n);
  out.theta_neg.assign(n, 0.0);
  out.theta_rel.assign(n, 0.0);
  out.neg_source.resize(n);
  out.valid.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    out.theta_pos[i] = m.at(i, i);
    std::vector<std::tuple<double, int, std::size_t>> cands;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (m.at(i, j) >= tau) cands.emplace_back(m.at(i, j), 0, j);
      if (m.at(j, i) >= tau) cands.emplace_back(m.at(j, i), 1, j);
    }
    if (cands.empty()) {
      out.neg_source[i] = NegSource{0, i};
      continue;
    }
    const auto best = *std::min_element(cands.begin(), cands.end());
    out.theta_neg[i] = std::get<0>(best);
    out.theta_rel[i] = out.theta_pos[i] - std::get<0>(best);
    out.neg_source[i] = NegSource{std::get<1>(best), std::get<2>(best)};
    out.valid[i] = true;
  }
  return out;
}

void check_equal(const TripletBatch& a, const TripletBatch& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.valid[i] == b.valid[i]);
    CHECK(a.theta_pos[i] == b.theta_pos[i]);
    CHECK(a.theta_neg[i] == b.theta_neg[i]);
    CHECK(a.theta_rel[i] == b.theta_rel[i]);
    CHECK(a.neg_source[i] == b.neg_source[i]);
  }
}

TEST_CASE("two-slot batch picks the hardest admissible negative") {
  // Diagonal 0.2/0.3 are the positive angles; off-diagonal 0.9 and 1.1.
  const auto m = make_matrix(2, {0.2, 0.9,  //
                                 1.1, 0.3});
  const auto batch = mine_triplets(m, 0.6);
  REQUIRE(batch.size() == 2);
  CHECK(batch.valid[0]);
  CHECK(batch.theta_pos[0] == 0.2);
  CHECK(batch.theta_neg[0] == 0.9);
  CHECK(batch.theta_rel[0] == 0.2 - 0.9);
  CHECK(batch.neg_source[0] == NegSource{0, 1});

  CHECK(batch.valid[1]);
  // Candidates for slot 1: row gives 1.1, column gives 0.9.
  CHECK(batch.theta_neg[1] == 0.9);
  CHECK(batch.neg_source[1] == NegSource{1, 0});
}

TEST_CASE("candidates below the anti-noise threshold mask the index") {
  const auto m = make_matrix(2, {0.2, 0.5,  //
                                 0.5, 0.3});
  const auto batch = mine_triplets(m, 0.6);
  CHECK_FALSE(batch.valid[0]);
  CHECK_FALSE(batch.valid[1]);
  CHECK(batch.valid_count() == 0);
  CHECK(batch.theta_neg[0] == 0.0);
  CHECK(batch.theta_rel[0] == 0.0);
}

TEST_CASE("mixed validity keeps per-index independence") {
  // Slot 0 sees 0.9 (row) and 0.4 (column); slot 1 sees 0.4 (row) and 0.9
  // (column); slot 2 sees only sub-threshold angles.
  const auto m = make_matrix(3, {0.2, 0.9, 0.5,   //
                                 0.4, 0.3, 0.55,  //
                                 0.5, 0.5, 0.25});
  const auto batch = mine_triplets(m, 0.6);
  CHECK(batch.valid[0]);
  CHECK(batch.theta_neg[0] == 0.9);
  CHECK(batch.neg_source[0] == NegSource{0, 1});
  CHECK(batch.valid[1]);
  CHECK(batch.theta_neg[1] == 0.9);
  CHECK(batch.neg_source[1] == NegSource{1, 0});
  CHECK_FALSE(batch.valid[2]);
  CHECK(batch.valid_count() == 2);
}

TEST_CASE("equal angles resolve to the lowest side then index") {
  // Slot 0 sees 0.8 twice: as row candidate j=2 and as column candidate
  // j=1; the row (side 0) must win.  Slot 2 sees 0.8 as row candidate j=1
  // and column candidate j=0; again side 0 wins.
  const auto m = make_matrix(3, {0.2, 0.9, 0.8,   //
                                 0.8, 0.3, 0.95,  //
                                 0.9, 0.8, 0.25});
  const auto batch = mine_triplets(m, 0.6);
  CHECK(batch.theta_neg[0] == 0.8);
  CHECK(batch.neg_source[0] == NegSource{0, 2});

  CHECK(batch.theta_neg[2] == 0.8);
  CHECK(batch.neg_source[2] == NegSource{0, 1});
}

TEST_CASE("random batches match the exhaustive oracle exactly") {
  Rng rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const auto m = random_matrix(rng, 64);
    const auto mined = mine_triplets(m, 0.6);
    const auto expect = oracle_mine(m, 0.6);
    check_equal(mined, expect);
  }
}

TEST_CASE("mined negatives satisfy threshold and minimality") {
  Rng rng(32);
  for (int rep = 0; rep < 20; ++rep) {
    const auto m = random_matrix(rng, 32);
    const double tau = rng.uniform(0.3, 2.0);
    const auto batch = mine_triplets(m, tau);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!batch.valid[i]) {
        // Every candidate must be below tau.
        for (std::size_t j = 0; j < m.n; ++j) {
          if (j == i) continue;
          CHECK(m.at(i, j) < tau);
          CHECK(m.at(j, i) < tau);
        }
        continue;
      }
      CHECK(batch.theta_neg[i] >= tau);
      CHECK(batch.theta_rel[i] == batch.theta_pos[i] - batch.theta_neg[i]);
      for (std::size_t j = 0; j < m.n; ++j) {
        if (j == i) continue;
        if (m.at(i, j) >= tau) CHECK(m.at(i, j) >= batch.theta_neg[i]);
        if (m.at(j, i) >= tau) CHECK(m.at(j, i) >= batch.theta_neg[i]);
      }
    }
  }
}

TEST_CASE("permuting batch slots permutes the output consistently") {
  Rng rng(33);
  const std::size_t n = 16;
  const auto m = random_matrix(rng, n);

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  descmod::shuffle(perm, rng);

  AngleMatrix pm;
  pm.n = n;
  pm.entries.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pm.at(i, j) = m.at(perm[i], perm[j]);
    }
  }

  const auto base = mine_triplets(m, 0.6);
  const auto permuted = mine_triplets(pm, 0.6);
  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = i;

  for (std::size_t i = 0; i < n; ++i) {
    CHECK(permuted.valid[i] == base.valid[perm[i]]);
    CHECK(permuted.theta_pos[i] == base.theta_pos[perm[i]]);
    if (!base.valid[perm[i]]) continue;
    CHECK(permuted.theta_neg[i] == base.theta_neg[perm[i]]);
    CHECK(permuted.neg_source[i].side == base.neg_source[perm[i]].side);
    CHECK(permuted.neg_source[i].index ==
          inverse[base.neg_source[perm[i]].index]);
  }
}

TEST_CASE("mine_triplets validates tau") {
  const auto m = make_matrix(2, {0.2, 0.9, 1.1, 0.3});
  CHECK(throws_code(ErrorCode::domain_error,
                    [&] { (void)mine_triplets(m, 0.0); }));
  CHECK(throws_code(ErrorCode::domain_error,
                    [&] { (void)mine_triplets(m, 3.2); }));
}

}  // namespace
