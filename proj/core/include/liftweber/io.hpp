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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liftweber/continuous_solver.hpp"
#include "liftweber/discrete_solver.hpp"
#include "liftweber/geometry.hpp"
#include "liftweber/oracle.hpp"

namespace liftweber {

/// Malformed input (bad JSON, bad CSV field); carries line/field context in
/// the message. Semantic violations (non-positive weight, empty instance)
/// surface as std::invalid_argument from ProblemInstance.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kJson, kCsv };

/// An instance plus optional file metadata.
struct InstanceDocument {
  ProblemInstance instance;
  std::string name;
  std::string description;
};

/// JSON: {"points":[{"x":..,"y":..,"w":..},...], "name"?, "description"?}.
/// CSV: one "x,y,w" row per point, optional header row.
InstanceDocument parse_instance(std::istream& in, Format format);

/// Reads a file; format from the extension (.csv vs anything else = JSON)
/// unless overridden. Throws ParseError on unreadable files.
InstanceDocument parse_instance_file(const std::string& path,
                                     std::optional<Format> format = {});

/// Canonical JSON form; integer-valued numbers print without a fractional
/// part, everything else as shortest round-trip decimals.
std::string serialize_instance(const InstanceDocument& doc);

/// JSON {"locations":[{"x":..,"y":..},...]} or CSV "x,y" rows.
std::vector<Point> parse_locations(std::istream& in, Format format);
std::vector<Point> parse_locations_file(const std::string& path,
                                        std::optional<Format> format = {});

struct GenParams {
  std::size_t m = 1;
  std::int64_t coord_lo = -5, coord_hi = 5;
  std::int64_t weight_lo = 1, weight_hi = 5;
  std::uint64_t seed = 0;
};

/// Deterministic pseudo-random integer-valued instance; identical seed and
/// parameters reproduce the identical instance.
ProblemInstance generate_instance(const GenParams& params);

/// Oracle cross-check section for verification reports.
struct OracleSection {
  Point optimum;
  double optimum_value = 0.0;
  std::size_t lattice_size = 0;
  bool match = false;
  bool grid_pass = true;
};

std::string report_to_json(const SolveReport& report,
                           bool include_candidates = true,
                           const OracleSection* oracle = nullptr);

std::string discrete_report_to_json(const DiscreteResult& result,
                                    const std::vector<Point>& locations);

}  // namespace liftweber
