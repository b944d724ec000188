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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liftweber/geometry.hpp"

namespace liftweber {

struct DiscreteResult {
  std::size_t best_index = 0;  // 0-based index into the location list
  std::vector<double> weighted_sums;
  std::vector<std::size_t> ties;  // all indices achieving the minimum
};

/// Discrete min-sum location: evaluate the total weighted lift distance at
/// every permissible location and pick the minimum. Ties broken by smallest
/// x1, then x2, then list position. Throws std::invalid_argument on an empty
/// location list.
DiscreteResult discrete_min(const ProblemInstance& inst,
                            std::span<const Point> locations);

}  // namespace liftweber
