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

#include "liftweber/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace liftweber {

namespace {

// Greedy per-axis clustering: sorted values are grouped while they stay
// within eps of the cluster's first value; every member is replaced by
// that first value.
void snap_axis(std::vector<DemandPoint>& points, double eps,
               double Point::* coord) {
  std::vector<double> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(p.location.*coord);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<std::pair<double, double>> remap;  // value -> representative
  double rep = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i] - rep > eps) rep = values[i];
    if (values[i] != rep) remap.emplace_back(values[i], rep);
  }
  if (remap.empty()) return;
  for (auto& p : points) {
    auto it = std::lower_bound(
        remap.begin(), remap.end(), p.location.*coord,
        [](const auto& entry, double v) { return entry.first < v; });
    if (it != remap.end() && it->first == p.location.*coord)
      p.location.*coord = it->second;
  }
}

}  // namespace

ProblemInstance::ProblemInstance(std::vector<DemandPoint> points,
                                 double merge_eps)
    : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("empty instance");
  if (!(merge_eps >= 0.0))
    throw std::invalid_argument("merge tolerance must be >= 0");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!std::isfinite(p.location.x1) || !std::isfinite(p.location.x2))
      throw std::invalid_argument("non-finite coordinate at point " +
                                  std::to_string(i + 1));
    if (!std::isfinite(p.weight) || p.weight <= 0.0)
      throw std::invalid_argument("non-positive weight at point " +
                                  std::to_string(i + 1));
  }
  if (merge_eps > 0.0) {
    snap_axis(points_, merge_eps, &Point::x1);
    snap_axis(points_, merge_eps, &Point::x2);
  }
  for (const auto& p : points_) total_weight_ += p.weight;
}

double objective_value(const Point& x, const ProblemInstance& inst) {
  double sum = 0.0;
  for (const auto& p : inst.points())
    sum += p.weight * lift_distance(p.location, x);
  return sum;
}

}  // namespace liftweber
