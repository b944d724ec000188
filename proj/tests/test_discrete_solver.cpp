// Copyright 2026 The LiftWeber Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "liftweber/discrete_solver.hpp"
#include "test_util.hpp"

using namespace liftweber;
using liftweber::testing::example1;

TEST_CASE("worked instance over its three permissible locations") {
  const std::vector<Point> locations{{4, 4}, {0, 1}, {0, 2}};
  const auto result = discrete_min(example1(), locations);
  CHECK(result.best_index == 0);
  CHECK(result.weighted_sums == std::vector<double>{50, 70, 62});
  CHECK(result.ties == std::vector<std::size_t>{0});
}

TEST_CASE("single location always wins") {
  const std::vector<Point> locations{{-3, 9}};
  const auto result = discrete_min(example1(), locations);
  CHECK(result.best_index == 0);
  CHECK(result.ties == std::vector<std::size_t>{0});
}

TEST_CASE("location on the sole demand point wins with zero cost") {
  const ProblemInstance inst({{{5, 3}, 2}});
  const std::vector<Point> locations{{1, 1}, {5, 3}, {0, 0}};
  const auto result = discrete_min(inst, locations);
  CHECK(result.best_index == 1);
  CHECK(result.weighted_sums[1] == 0);
}

TEST_CASE("empty location list is rejected") {
  CHECK_THROWS_AS(discrete_min(example1(), {}), std::invalid_argument);
}

TEST_CASE("agrees bit-exactly with objective_value") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = liftweber::testing::random_instance(rng);
    std::vector<Point> locations;
    for (int k = 0; k < 6; ++k)
      locations.push_back({static_cast<double>(coord(rng)),
                           static_cast<double>(coord(rng))});
    const auto result = discrete_min(inst, locations);
    double best = objective_value(locations[0], inst);
    for (std::size_t k = 0; k < locations.size(); ++k) {
      CHECK(result.weighted_sums[k] == objective_value(locations[k], inst));
      best = std::min(best, result.weighted_sums[k]);
    }
    CHECK(result.weighted_sums[result.best_index] == best);
  }
}

TEST_CASE("permutation maps sums and the tie-break winner consistently") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = liftweber::testing::random_instance(rng);
    std::vector<Point> locations;
    for (int k = 0; k < 5; ++k)
      locations.push_back({static_cast<double>(coord(rng)),
                           static_cast<double>(coord(rng))});
    const auto base = discrete_min(inst, locations);

    std::vector<std::size_t> perm(locations.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Point> shuffled;
    for (std::size_t idx : perm) shuffled.push_back(locations[idx]);
    const auto permuted = discrete_min(inst, shuffled);

    for (std::size_t k = 0; k < perm.size(); ++k)
      CHECK(permuted.weighted_sums[k] == base.weighted_sums[perm[k]]);
    // The winning value is permutation-invariant; the winning point agrees
    // up to the coordinate tie-break.
    CHECK(permuted.weighted_sums[permuted.best_index] ==
          base.weighted_sums[base.best_index]);
    const Point& a = shuffled[permuted.best_index];
    const Point& b = locations[base.best_index];
    CHECK(a.x1 == b.x1);
    CHECK(a.x2 == b.x2);
  }
}
