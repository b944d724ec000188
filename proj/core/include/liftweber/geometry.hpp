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

#include <cmath>
#include <cstddef>
#include <vector>

namespace liftweber {

struct Point {
  double x1 = 0.0;  // abscissa
  double x2 = 0.0;  // ordinate

  friend bool operator==(const Point&, const Point&) = default;
};

struct DemandPoint {
  Point location;
  double weight = 1.0;  // strictly positive

  friend bool operator==(const DemandPoint&, const DemandPoint&) = default;
};

/// Travel between points on the same horizontal line is direct; otherwise
/// it goes via the vertical spine x1 = 0.
inline double lift_distance(const Point& a, const Point& b) {
  if (a.x2 == b.x2) return std::abs(a.x1 - b.x1);
  // Spine legs are summed first so the result is bit-exactly symmetric.
  return (std::abs(a.x1) + std::abs(b.x1)) + std::abs(a.x2 - b.x2);
}

/// Rectilinear (taxicab) distance. A lower bound on the lift distance;
/// used by verification code.
inline double l1_distance(const Point& a, const Point& b) {
  return std::abs(a.x1 - b.x1) + std::abs(a.x2 - b.x2);
}

/// A validated list of weighted demand points. Construction throws
/// std::invalid_argument on empty input, non-positive weights, or
/// non-finite values.
///
/// The optional merge tolerance snaps coordinates within `merge_eps` of
/// each other (per axis) to a shared representative once, at construction.
/// All later coordinate comparisons are exact.
class ProblemInstance {
 public:
  explicit ProblemInstance(std::vector<DemandPoint> points,
                           double merge_eps = 0.0);

  const std::vector<DemandPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double total_weight() const { return total_weight_; }

  friend bool operator==(const ProblemInstance&,
                         const ProblemInstance&) = default;

 private:
  std::vector<DemandPoint> points_;
  double total_weight_ = 0.0;
};

/// Sum of weighted lift distances from every demand point to x.
/// Always evaluates the full branching metric.
double objective_value(const Point& x, const ProblemInstance& inst);

}  // namespace liftweber
