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

#include "liftweber/weighted_median.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace liftweber {

PartialSumTable coalesce(const WeightedValues& input) {
  if (input.values.empty()) throw std::invalid_argument("empty value list");
  if (input.values.size() != input.weights.size())
    throw std::invalid_argument("values/weights length mismatch");

  const std::size_t n = input.values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return input.values[a] < input.values[b];
  });

  PartialSumTable table;
  table.cumulative.push_back(0.0);
  for (std::size_t idx : order) {
    const double v = input.values[idx];
    const double w = input.weights[idx];
    if (!(w > 0.0)) throw std::invalid_argument("non-positive weight");
    if (!table.values.empty() && table.values.back() == v) {
      table.weights.back() += w;
      table.cumulative.back() += w;
    } else {
      table.values.push_back(v);
      table.weights.push_back(w);
      table.cumulative.push_back(table.cumulative.back() + w);
    }
  }
  return table;
}

namespace {

bool all_integral(const std::vector<double>& weights) {
  return std::all_of(weights.begin(), weights.end(),
                     [](double w) { return std::trunc(w) == w; });
}

}  // namespace

MedianOutcome weighted_median(const PartialSumTable& table, MedianMode mode,
                              bool exact_weights) {
  const std::size_t q = table.size();
  if (q == 0) throw std::invalid_argument("empty value list");

  const double total = table.total_weight();
  const double half = total / 2.0;
  const double tol = exact_weights ? 0.0 : 1e-12 * std::max(1.0, total);

  // Smallest k (1-based) with cumulative[k] >= half, up to tolerance.
  std::size_t k = 1;
  while (k < q && table.cumulative[k] < half - tol) ++k;

  MedianOutcome out;
  out.index = k;
  if (k < q && std::abs(table.cumulative[k] - half) <= tol) {
    // Weights are positive, so cumulative[k] = half < total forces k < q.
    out.kind = MedianCase::kInterval;
    out.lo = table.values[k - 1];
    out.hi = table.values[k];
    out.value = (out.lo + out.hi) / 2.0;
  } else if (mode == MedianMode::kStrictInterior) {
    out.kind = MedianCase::kExcluded;
  } else {
    out.kind = MedianCase::kUniquePoint;
    out.value = table.values[k - 1];
  }
  return out;
}

MedianOutcome weighted_median(const WeightedValues& input, MedianMode mode) {
  return weighted_median(coalesce(input), mode, all_integral(input.weights));
}

}  // namespace liftweber
