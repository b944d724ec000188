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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "liftweber/continuous_solver.hpp"
#include "liftweber/io.hpp"
#include "test_util.hpp"

using namespace liftweber;
using liftweber::testing::example1;

#ifndef LIFTWEBER_TEST_DATA_DIR
#define LIFTWEBER_TEST_DATA_DIR "tests/data"
#endif

TEST_CASE("CSV parsing produces the worked instance") {
  std::istringstream in("4,4,4\n3,1,1\n6,4,2\n6,2,3\n");
  const auto doc = parse_instance(in, Format::kCsv);
  CHECK(doc.instance == example1());
}

TEST_CASE("CSV header, blank lines, and comments are skipped") {
  std::istringstream in("x,y,w\n\n# comment\n5,3,2\n");
  const auto doc = parse_instance(in, Format::kCsv);
  CHECK(doc.instance == ProblemInstance({{{5, 3}, 2}}));
}

TEST_CASE("JSON parsing with metadata") {
  std::istringstream in(
      R"({"name":"tiny","points":[{"x":5,"y":3,"w":2}]})");
  const auto doc = parse_instance(in, Format::kJson);
  CHECK(doc.name == "tiny");
  CHECK(doc.instance == ProblemInstance({{{5, 3}, 2}}));
}

TEST_CASE("parse errors carry context") {
  SUBCASE("malformed numeric with line number") {
    std::istringstream in("4,4,4\n3,oops,1\n");
    CHECK_THROWS_WITH_AS(parse_instance(in, Format::kCsv),
                         doctest::Contains("line 2"), ParseError);
  }
  SUBCASE("wrong field count") {
    std::istringstream in("1,2\n");
    CHECK_THROWS_AS(parse_instance(in, Format::kCsv), ParseError);
  }
  SUBCASE("zero weight is a validation error") {
    std::istringstream in("1,2,0\n");
    CHECK_THROWS_WITH_AS(parse_instance(in, Format::kCsv),
                         doctest::Contains("non-positive weight"),
                         std::invalid_argument);
  }
  SUBCASE("empty instance") {
    std::istringstream in("");
    CHECK_THROWS_WITH_AS(parse_instance(in, Format::kCsv),
                         doctest::Contains("empty"), std::invalid_argument);
  }
  SUBCASE("broken JSON") {
    std::istringstream in("{nope");
    CHECK_THROWS_AS(parse_instance(in, Format::kJson), ParseError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(parse_instance_file("/nonexistent/foo.json"), ParseError);
  }
}

TEST_CASE("instance files from the data directory") {
  const std::string dir = LIFTWEBER_TEST_DATA_DIR;
  CHECK(parse_instance_file(dir + "/example1.csv").instance == example1());
  const auto doc = parse_instance_file(dir + "/example1.json");
  CHECK(doc.instance == example1());
  CHECK(doc.name == "example1");
  const auto locations = parse_locations_file(dir + "/example1_locations.json");
  REQUIRE(locations.size() == 3);
  CHECK(locations[0] == Point{4, 4});
}

TEST_CASE("serialize/parse round-trip is lossless") {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> coord(-10, 10);
  std::uniform_real_distribution<double> weight(0.1, 9.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<DemandPoint> pts;
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 7);
    for (std::size_t i = 0; i < m; ++i)
      pts.push_back({{coord(rng), coord(rng)}, weight(rng)});
    const InstanceDocument doc{ProblemInstance(std::move(pts)), "fuzz", ""};
    std::istringstream in(serialize_instance(doc));
    const auto back = parse_instance(in, Format::kJson);
    CHECK(back.instance == doc.instance);
    CHECK(back.name == doc.name);
  }
}

TEST_CASE("generation is deterministic and validated") {
  GenParams params;
  params.m = 4;
  params.seed = 1;
  const auto a = generate_instance(params);
  const auto b = generate_instance(params);
  CHECK(a == b);
  params.seed = 2;
  CHECK(generate_instance(params) != a);

  params.m = 1;
  CHECK(generate_instance(params).size() == 1);

  params.coord_lo = 3;
  params.coord_hi = 2;
  CHECK_THROWS_AS(generate_instance(params), std::invalid_argument);
}

TEST_CASE("report serialization is byte-stable and integer-clean") {
  const auto report = solve(example1());
  const std::string first = report_to_json(report);
  const std::string second = report_to_json(report);
  CHECK(first == second);
  CHECK(first.find("\"optimum_value\": 50") != std::string::npos);
  CHECK(first.find("50.0") == std::string::npos);
  CHECK(first.find("procedure1:4") != std::string::npos);

  OracleSection oracle;
  oracle.optimum = report.optimum;
  oracle.optimum_value = report.optimum_value;
  oracle.lattice_size = 12;
  oracle.match = true;
  const std::string with_oracle = report_to_json(report, true, &oracle);
  CHECK(with_oracle.find("\"oracle\"") != std::string::npos);
  CHECK(with_oracle.find("\"match\": true") != std::string::npos);
}
