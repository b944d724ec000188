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
#include <optional>
#include <vector>

#include "liftweber/geometry.hpp"

namespace liftweber {

/// All demand points sharing one ordinate value (exact equality).
struct OrdinateClass {
  double value = 0.0;
  std::vector<std::size_t> members;  // 0-based indices into the instance
};

/// Which construction produced a candidate.
struct CandidateSource {
  enum class Kind { kHorizontalLine, kSpine };
  Kind kind = Kind::kHorizontalLine;
  double class_value = 0.0;  // the line's ordinate, for kHorizontalLine
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A permissible solution point. When the 1-D subproblem had a whole
/// interval of minimizers, `interval` is set and `point` is its midpoint.
/// `objective` is filled during the final selection step.
struct Candidate {
  Point point;
  CandidateSource source;
  std::optional<Interval> interval;
  double objective = 0.0;
};

struct SolveReport {
  std::vector<Candidate> candidates;  // class order, spine candidate last
  Point optimum;
  double optimum_value = 0.0;
  std::vector<std::size_t> ties;  // candidate indices achieving the optimum
  std::size_t num_points = 0;
  std::size_t num_classes = 0;
  double total_weight = 0.0;
};

/// Partition demand indices by exact ordinate equality, classes ordered by
/// first occurrence.
std::vector<OrdinateClass> ordinate_classes(const ProblemInstance& inst);

/// Best point on the horizontal line x2 = cls.value. Members of the class
/// pull toward their own abscissae; every other point pulls toward the
/// spine crossing (abscissa 0). Always produces a candidate.
std::optional<Candidate> procedure1_candidate(const ProblemInstance& inst,
                                              const OrdinateClass& cls);

/// Best point on the spine x1 = 0 with ordinate off every demand ordinate.
/// Exists only when the ordinate weighted-median is a whole interval, in
/// which case its midpoint lies strictly between two distinct ordinates.
std::optional<Candidate> procedure2_candidate(const ProblemInstance& inst);

/// Full solve: one candidate per ordinate class plus the optional spine
/// candidate, each scored with the full lift-metric objective; ties broken
/// by smallest x1, then smallest x2.
SolveReport solve(const ProblemInstance& inst);

}  // namespace liftweber
