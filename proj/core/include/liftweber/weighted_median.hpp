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

namespace liftweber {

/// Input to the 1-D weighted-median subroutine: minimize
/// g(x) = sum_i weights[i] * |x - values[i]| over the real line.
struct WeightedValues {
  std::vector<double> values;
  std::vector<double> weights;  // same length, all strictly positive
};

/// Distinct sorted values with coalesced weights and cumulative sums.
/// cumulative has one more entry than values, with cumulative[0] = 0 and
/// cumulative.back() equal to the total input weight.
struct PartialSumTable {
  std::vector<double> values;   // strictly increasing
  std::vector<double> weights;  // summed over duplicates
  std::vector<double> cumulative;

  std::size_t size() const { return values.size(); }
  double total_weight() const { return cumulative.back(); }
};

/// Merge duplicate values (summing their weights), sort, and build the
/// cumulative sum table. Throws std::invalid_argument on empty or
/// inconsistent input.
PartialSumTable coalesce(const WeightedValues& input);

enum class MedianMode {
  /// A half-weight crossing strictly inside a cumulative step yields the
  /// value at that step as the unique minimizer.
  kStandard,
  /// The sought coordinate must avoid every input value, so the unique-point
  /// case yields no solution; only the exact-equality interval case does.
  kStrictInterior,
};

enum class MedianCase {
  kUniquePoint,  // minimizer is a single input value
  kInterval,     // minimizers form the interval [lo, hi]; value = midpoint
  kExcluded,     // strict-interior mode ruled out the unique-point answer
};

/// Outcome of the case analysis. `index` is the 1-based position k in the
/// coalesced table at which the half-weight condition fired.
struct MedianOutcome {
  MedianCase kind;
  double value = 0.0;  // unique point, or interval midpoint
  double lo = 0.0;
  double hi = 0.0;
  std::size_t index = 0;
};

/// Weighted median via coalescing, sorting, and the half-total-weight rule.
///
/// With half = total/2, exactly one case fires for the smallest k with
/// cumulative[k] >= half:
///  - cumulative[k-1] < half < cumulative[k]: unique point values[k]
///    (excluded in strict-interior mode);
///  - cumulative[k] == half: every point of [values[k], values[k+1]]
///    minimizes g; the midpoint is reported.
///
/// The equality test is exact when all weights are integer-valued; otherwise
/// a relative tolerance of 1e-12 is used (caveat: with fractional weights the
/// interval case is sensitive to rounding noise).
MedianOutcome weighted_median(const WeightedValues& input, MedianMode mode);

/// Same case analysis on an already coalesced table.
MedianOutcome weighted_median(const PartialSumTable& table, MedianMode mode,
                              bool exact_weights);

}  // namespace liftweber
