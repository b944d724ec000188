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

#include "liftweber/continuous_solver.hpp"

#include <stdexcept>
#include <unordered_map>

#include "liftweber/weighted_median.hpp"

namespace liftweber {

std::vector<OrdinateClass> ordinate_classes(const ProblemInstance& inst) {
  std::vector<OrdinateClass> classes;
  std::unordered_map<double, std::size_t> by_value;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const double y = inst.points()[i].location.x2;
    auto [it, inserted] = by_value.try_emplace(y, classes.size());
    if (inserted) classes.push_back({y, {}});
    classes[it->second].members.push_back(i);
  }
  return classes;
}

namespace {

Candidate make_candidate(double x1, double x2, CandidateSource source,
                         const MedianOutcome& median) {
  Candidate c;
  c.point = {x1, x2};
  c.source = source;
  if (median.kind == MedianCase::kInterval)
    c.interval = Interval{median.lo, median.hi};
  return c;
}

}  // namespace

std::optional<Candidate> procedure1_candidate(const ProblemInstance& inst,
                                              const OrdinateClass& cls) {
  // On the line x2 = cls.value, a non-member at distance |a2 - cls.value|
  // above/below contributes w * (|x1| + const), i.e. pulls toward abscissa
  // 0 with its full weight. Class members contribute w * |x1 - a1|. All
  // non-member weight is folded into one zero-abscissa entry; coalescing
  // makes this identical to substituting 0 per point.
  WeightedValues vals;
  vals.values.reserve(cls.members.size() + 1);
  vals.weights.reserve(cls.members.size() + 1);
  double class_weight = 0.0;
  for (std::size_t i : cls.members) {
    vals.values.push_back(inst.points()[i].location.x1);
    vals.weights.push_back(inst.points()[i].weight);
    class_weight += inst.points()[i].weight;
  }
  const double outside = inst.total_weight() - class_weight;
  if (outside > 0.0) {
    vals.values.push_back(0.0);
    vals.weights.push_back(outside);
  }

  const MedianOutcome median = weighted_median(vals, MedianMode::kStandard);
  if (median.kind == MedianCase::kExcluded) return std::nullopt;  // unreachable
  return make_candidate(
      median.value, cls.value,
      {CandidateSource::Kind::kHorizontalLine, cls.value}, median);
}

std::optional<Candidate> procedure2_candidate(const ProblemInstance& inst) {
  WeightedValues vals;
  vals.values.reserve(inst.size());
  vals.weights.reserve(inst.size());
  for (const auto& p : inst.points()) {
    vals.values.push_back(p.location.x2);
    vals.weights.push_back(p.weight);
  }
  const MedianOutcome median =
      weighted_median(vals, MedianMode::kStrictInterior);
  if (median.kind != MedianCase::kInterval) return std::nullopt;
  return make_candidate(0.0, median.value,
                        {CandidateSource::Kind::kSpine, 0.0}, median);
}

SolveReport solve(const ProblemInstance& inst) {
  SolveReport report;
  report.num_points = inst.size();
  report.total_weight = inst.total_weight();

  const auto classes = ordinate_classes(inst);
  report.num_classes = classes.size();
  for (const auto& cls : classes) {
    if (auto cand = procedure1_candidate(inst, cls))
      report.candidates.push_back(std::move(*cand));
  }
  if (auto cand = procedure2_candidate(inst))
    report.candidates.push_back(std::move(*cand));
  if (report.candidates.empty())
    throw std::logic_error("candidate set unexpectedly empty");

  for (auto& cand : report.candidates)
    cand.objective = objective_value(cand.point, inst);

  std::size_t best = 0;
  for (std::size_t k = 1; k < report.candidates.size(); ++k) {
    const Point& p = report.candidates[k].point;
    const Point& b = report.candidates[best].point;
    const double v = report.candidates[k].objective;
    const double bv = report.candidates[best].objective;
    if (v < bv || (v == bv && (p.x1 < b.x1 || (p.x1 == b.x1 && p.x2 < b.x2))))
      best = k;
  }
  report.optimum = report.candidates[best].point;
  report.optimum_value = report.candidates[best].objective;
  for (std::size_t k = 0; k < report.candidates.size(); ++k)
    if (report.candidates[k].objective == report.optimum_value)
      report.ties.push_back(k);
  return report;
}

}  // namespace liftweber
