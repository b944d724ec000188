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

#include "liftweber/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace liftweber {

std::vector<Point> lattice_candidates(const ProblemInstance& inst) {
  std::vector<double> xs, ys;
  xs.push_back(0.0);
  for (const auto& p : inst.points()) {
    xs.push_back(p.location.x1);
    ys.push_back(p.location.x2);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<Point> lattice;
  lattice.reserve(xs.size() * ys.size());
  for (double x : xs)
    for (double y : ys) lattice.push_back({x, y});
  return lattice;
}

OracleResult oracle_solve(const ProblemInstance& inst) {
  const auto lattice = lattice_candidates(inst);
  OracleResult result;
  result.lattice_size = lattice.size();
  result.optimum = lattice.front();
  result.optimum_value = objective_value(lattice.front(), inst);
  for (std::size_t k = 1; k < lattice.size(); ++k) {
    const double v = objective_value(lattice[k], inst);
    const Point& p = lattice[k];
    const Point& b = result.optimum;
    if (v < result.optimum_value ||
        (v == result.optimum_value &&
         (p.x1 < b.x1 || (p.x1 == b.x1 && p.x2 < b.x2)))) {
      result.optimum = p;
      result.optimum_value = v;
    }
  }
  return result;
}

GridCheck grid_sanity(const ProblemInstance& inst, std::size_t resolution,
                      double claimed_value) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");

  double xlo = 0.0, xhi = 0.0;
  double ylo = inst.points().front().location.x2, yhi = ylo;
  for (const auto& p : inst.points()) {
    xlo = std::min(xlo, p.location.x1);
    xhi = std::max(xhi, p.location.x1);
    ylo = std::min(ylo, p.location.x2);
    yhi = std::max(yhi, p.location.x2);
  }
  if (xhi - xlo == 0.0) { xlo -= 0.5; xhi += 0.5; }
  if (yhi - ylo == 0.0) { ylo -= 0.5; yhi += 0.5; }

  GridCheck check;
  const std::size_t n = resolution;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = xlo + (xhi - xlo) * static_cast<double>(i) / (n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      const double y = ylo + (yhi - ylo) * static_cast<double>(j) / (n - 1);
      const double v = objective_value({x, y}, inst);
      if (v < claimed_value - 1e-9) {
        check.pass = false;
        check.witness = {x, y};
        check.witness_value = v;
        return check;
      }
    }
  }
  return check;
}

}  // namespace liftweber
