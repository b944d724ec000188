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

#include "liftweber/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace liftweber {

namespace {

using nlohmann::json;

// Integer-valued doubles serialize as JSON integers so that exact results
// print without a fractional part.
json num(double v) {
  if (std::trunc(v) == v && std::abs(v) < 9.007199254740992e15)
    return json(static_cast<std::int64_t>(v));
  return json(v);
}

double parse_double(std::string_view token, std::size_t line,
                    const char* field) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("line " + std::to_string(line) + ": malformed " + field +
                     " '" + std::string(token) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return fields;
}

bool looks_numeric(std::string_view token) {
  double v;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

// Rows of `arity` doubles, with an optional header row.
std::vector<std::vector<double>> parse_csv_rows(std::istream& in,
                                                std::size_t arity,
                                                const char* const* fields) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    auto tokens = split_csv(sv);
    if (first_content) {
      first_content = false;
      if (!tokens.empty() && !looks_numeric(tokens.front())) continue;  // header
    }
    if (tokens.size() != arity)
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(arity) + " fields, got " +
                       std::to_string(tokens.size()));
    std::vector<double> row;
    for (std::size_t k = 0; k < arity; ++k)
      row.push_back(parse_double(tokens[k], lineno, fields[k]));
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

double json_number(const json& j, const char* field) {
  if (!j.is_number())
    throw ParseError(std::string("field '") + field + "' is not a number");
  return j.get<double>();
}

std::optional<Format> format_from_extension(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos) return {};
  std::string ext = path.substr(dot + 1);
  if (ext == "csv") return Format::kCsv;
  return Format::kJson;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return in;
}

json point_json(const Point& p) {
  return json{{"x", num(p.x1)}, {"y", num(p.x2)}};
}

json candidate_json(const Candidate& c) {
  json j;
  j["point"] = point_json(c.point);
  if (c.source.kind == CandidateSource::Kind::kHorizontalLine) {
    std::ostringstream tag;
    tag << "procedure1:" << c.source.class_value;
    j["source"] = tag.str();
  } else {
    j["source"] = "procedure2";
  }
  if (c.interval)
    j["interval"] = json{{"lo", num(c.interval->lo)}, {"hi", num(c.interval->hi)}};
  j["objective"] = num(c.objective);
  return j;
}

}  // namespace

InstanceDocument parse_instance(std::istream& in, Format format) {
  if (format == Format::kCsv) {
    static const char* const kFields[] = {"x", "y", "w"};
    auto rows = parse_csv_rows(in, 3, kFields);
    std::vector<DemandPoint> points;
    points.reserve(rows.size());
    for (const auto& row : rows)
      points.push_back({{row[0], row[1]}, row[2]});
    return {ProblemInstance(std::move(points)), "", ""};
  }

  json j = parse_json(in);
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw ParseError("expected object with a 'points' array");
  std::vector<DemandPoint> points;
  for (const auto& pj : j["points"]) {
    points.push_back({{json_number(pj.at("x"), "x"),
                       json_number(pj.at("y"), "y")},
                      json_number(pj.at("w"), "w")});
  }
  InstanceDocument doc{ProblemInstance(std::move(points)), "", ""};
  if (j.contains("name")) doc.name = j["name"].get<std::string>();
  if (j.contains("description"))
    doc.description = j["description"].get<std::string>();
  return doc;
}

InstanceDocument parse_instance_file(const std::string& path,
                                     std::optional<Format> format) {
  auto in = open_file(path);
  return parse_instance(
      in, format ? *format : format_from_extension(path).value_or(Format::kJson));
}

std::string serialize_instance(const InstanceDocument& doc) {
  json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.description.empty()) j["description"] = doc.description;
  j["points"] = json::array();
  for (const auto& p : doc.instance.points()) {
    j["points"].push_back(json{{"x", num(p.location.x1)},
                               {"y", num(p.location.x2)},
                               {"w", num(p.weight)}});
  }
  return j.dump(2) + "\n";
}

std::vector<Point> parse_locations(std::istream& in, Format format) {
  std::vector<Point> locations;
  if (format == Format::kCsv) {
    static const char* const kFields[] = {"x", "y"};
    for (const auto& row : parse_csv_rows(in, 2, kFields))
      locations.push_back({row[0], row[1]});
  } else {
    json j = parse_json(in);
    const json& arr = j.is_array() ? j : j.at("locations");
    if (!arr.is_array()) throw ParseError("expected a 'locations' array");
    for (const auto& pj : arr)
      locations.push_back(
          {json_number(pj.at("x"), "x"), json_number(pj.at("y"), "y")});
  }
  return locations;
}

std::vector<Point> parse_locations_file(const std::string& path,
                                        std::optional<Format> format) {
  auto in = open_file(path);
  return parse_locations(
      in, format ? *format : format_from_extension(path).value_or(Format::kJson));
}

ProblemInstance generate_instance(const GenParams& params) {
  if (params.m < 1) throw std::invalid_argument("m must be >= 1");
  if (params.coord_lo > params.coord_hi)
    throw std::invalid_argument("empty coordinate range");
  if (params.weight_lo > params.weight_hi || params.weight_lo < 1)
    throw std::invalid_argument("invalid weight range");

  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::int64_t> coord(params.coord_lo,
                                                    params.coord_hi);
  std::uniform_int_distribution<std::int64_t> weight(params.weight_lo,
                                                     params.weight_hi);
  std::vector<DemandPoint> points;
  points.reserve(params.m);
  for (std::size_t i = 0; i < params.m; ++i) {
    const double x = static_cast<double>(coord(rng));
    const double y = static_cast<double>(coord(rng));
    const double w = static_cast<double>(weight(rng));
    points.push_back({{x, y}, w});
  }
  return ProblemInstance(std::move(points));
}

std::string report_to_json(const SolveReport& report, bool include_candidates,
                           const OracleSection* oracle) {
  json j;
  j["instance"] = json{{"m", report.num_points},
                       {"distinct_ordinates", report.num_classes},
                       {"total_weight", num(report.total_weight)}};
  if (include_candidates) {
    j["candidates"] = json::array();
    for (const auto& c : report.candidates)
      j["candidates"].push_back(candidate_json(c));
  }
  j["optimum"] = point_json(report.optimum);
  j["optimum_value"] = num(report.optimum_value);
  j["ties"] = report.ties;
  if (oracle) {
    j["oracle"] = json{{"optimum", point_json(oracle->optimum)},
                       {"optimum_value", num(oracle->optimum_value)},
                       {"lattice_size", oracle->lattice_size},
                       {"match", oracle->match},
                       {"grid_pass", oracle->grid_pass}};
  }
  return j.dump(2) + "\n";
}

std::string discrete_report_to_json(const DiscreteResult& result,
                                    const std::vector<Point>& locations) {
  json j;
  j["weighted_sums"] = json::array();
  for (std::size_t k = 0; k < locations.size(); ++k) {
    j["weighted_sums"].push_back(json{
        {"location", point_json(locations[k])},
        {"value", num(result.weighted_sums[k])}});
  }
  j["best_index"] = result.best_index;
  j["best_location"] = point_json(locations[result.best_index]);
  j["best_value"] = num(result.weighted_sums[result.best_index]);
  j["ties"] = result.ties;
  return j.dump(2) + "\n";
}

}  // namespace liftweber
