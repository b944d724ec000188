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
#include <vector>

#include "liftweber/geometry.hpp"

namespace liftweber {

struct OracleResult {
  Point optimum;
  double optimum_value = 0.0;
  std::size_t lattice_size = 0;
};

/// Finite candidate lattice that contains a global minimizer:
/// ({abscissae} u {0}) x {distinct ordinates}, deduplicated.
///
/// Why it suffices: on a line x2 = a2^j the objective is convex piecewise
/// linear in x1 with breakpoints among the abscissae and 0. Off every
/// demand ordinate the objective is sum w_i (|x1| + |x2 - a2^i| + |a1^i|),
/// minimized at x1 = 0 with x2 at a weighted median of the ordinates —
/// itself a demand ordinate, where the on-line objective is no larger.
std::vector<Point> lattice_candidates(const ProblemInstance& inst);

/// Exhaustive evaluation over the lattice; same tie-break as the solvers
/// (smallest x1, then x2).
OracleResult oracle_solve(const ProblemInstance& inst);

struct GridCheck {
  bool pass = true;
  Point witness;  // a sample strictly better than the claim, when !pass
  double witness_value = 0.0;
};

/// Samples the objective on a resolution x resolution grid over the demand
/// bounding box (expanded to include x1 = 0; degenerate axes widened to unit
/// width) and fails if any sample beats claimed_value by more than 1e-9.
/// Requires resolution >= 2.
GridCheck grid_sanity(const ProblemInstance& inst, std::size_t resolution,
                      double claimed_value);

}  // namespace liftweber
