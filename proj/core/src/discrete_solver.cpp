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

#include "liftweber/discrete_solver.hpp"

#include <stdexcept>

namespace liftweber {

DiscreteResult discrete_min(const ProblemInstance& inst,
                            std::span<const Point> locations) {
  if (locations.empty())
    throw std::invalid_argument("no permissible locations");

  DiscreteResult result;
  result.weighted_sums.reserve(locations.size());
  for (const Point& loc : locations)
    result.weighted_sums.push_back(objective_value(loc, inst));

  for (std::size_t k = 1; k < locations.size(); ++k) {
    const double v = result.weighted_sums[k];
    const double bv = result.weighted_sums[result.best_index];
    const Point& p = locations[k];
    const Point& b = locations[result.best_index];
    if (v < bv || (v == bv && (p.x1 < b.x1 || (p.x1 == b.x1 && p.x2 < b.x2))))
      result.best_index = k;
  }
  const double best = result.weighted_sums[result.best_index];
  for (std::size_t k = 0; k < locations.size(); ++k)
    if (result.weighted_sums[k] == best) result.ties.push_back(k);
  return result;
}

}  // namespace liftweber
