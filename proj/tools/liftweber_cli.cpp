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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "liftweber/continuous_solver.hpp"
#include "liftweber/discrete_solver.hpp"
#include "liftweber/io.hpp"
#include "liftweber/oracle.hpp"

namespace {

// Exit codes: 0 success/match, 1 usage, 2 parse/validation, 3 verify mismatch.
constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kValidationError = 2;
constexpr int kVerifyMismatch = 3;

struct CommonOpts {
  std::string instance_path;
  std::string format;  // "", "json", "csv"
  std::string out_path;
};

std::optional<liftweber::Format> to_format(const std::string& name) {
  if (name == "json") return liftweber::Format::kJson;
  if (name == "csv") return liftweber::Format::kCsv;
  return {};
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw liftweber::ParseError("cannot write file: " + out_path);
  out << text;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("range must be 'lo,hi': " + spec);
  try {
    return {std::stoll(spec.substr(0, comma)), std::stoll(spec.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range must be 'lo,hi': " + spec);
  }
}

liftweber::InstanceDocument load_instance(const CommonOpts& opts) {
  return liftweber::parse_instance_file(opts.instance_path,
                                        to_format(opts.format));
}

int run_solve(const CommonOpts& opts, bool all_candidates) {
  const auto doc = load_instance(opts);
  const auto report = liftweber::solve(doc.instance);
  emit(opts.out_path, liftweber::report_to_json(report, all_candidates));
  return kOk;
}

int run_discrete(const CommonOpts& opts, const std::string& locations_path) {
  const auto doc = load_instance(opts);
  const auto locations = liftweber::parse_locations_file(locations_path);
  const auto result = liftweber::discrete_min(doc.instance, locations);
  emit(opts.out_path, liftweber::discrete_report_to_json(result, locations));
  return kOk;
}

void dump_grid_csv(const liftweber::ProblemInstance& inst, std::size_t n,
                   const std::string& path) {
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
  std::ofstream out(path);
  if (!out) throw liftweber::ParseError("cannot write file: " + path);
  out << "x,y,f\n";
  for (std::size_t i = 0; i < n; ++i) {
    const double x = xlo + (xhi - xlo) * static_cast<double>(i) / (n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      const double y = ylo + (yhi - ylo) * static_cast<double>(j) / (n - 1);
      out << x << ',' << y << ','
          << liftweber::objective_value({x, y}, inst) << '\n';
    }
  }
}

int run_verify(const CommonOpts& opts, std::size_t grid,
               const std::string& dump_grid_path) {
  const auto doc = load_instance(opts);
  const auto report = liftweber::solve(doc.instance);
  const auto oracle = liftweber::oracle_solve(doc.instance);
  const auto grid_check =
      liftweber::grid_sanity(doc.instance, grid, report.optimum_value);

  liftweber::OracleSection section;
  section.optimum = oracle.optimum;
  section.optimum_value = oracle.optimum_value;
  section.lattice_size = oracle.lattice_size;
  section.match =
      std::abs(oracle.optimum_value - report.optimum_value) <= 1e-9;
  section.grid_pass = grid_check.pass;

  emit(opts.out_path, liftweber::report_to_json(report, true, &section));
  if (!dump_grid_path.empty()) dump_grid_csv(doc.instance, grid, dump_grid_path);

  if (!section.match) {
    std::cerr << "verification mismatch: solver value " << report.optimum_value
              << " vs oracle value " << oracle.optimum_value << "\n";
    return kVerifyMismatch;
  }
  if (!grid_check.pass) {
    std::cerr << "grid sample at (" << grid_check.witness.x1 << ", "
              << grid_check.witness.x2 << ") beats the reported optimum: "
              << grid_check.witness_value << "\n";
    return kVerifyMismatch;
  }
  return kOk;
}

int run_gen(const liftweber::GenParams& params, const std::string& out_path,
            const std::string& name) {
  liftweber::InstanceDocument doc{liftweber::generate_instance(params), name,
                                  ""};
  emit(out_path, liftweber::serialize_instance(doc));
  return kOk;
}

int run_bench(std::size_t m, std::size_t trials, std::uint64_t seed,
              std::pair<std::int64_t, std::int64_t> coord_range) {
  using clock = std::chrono::steady_clock;
  double total_ms = 0.0, best_ms = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    liftweber::GenParams params;
    params.m = m;
    params.coord_lo = coord_range.first;
    params.coord_hi = coord_range.second;
    params.seed = seed + t;
    const auto inst = liftweber::generate_instance(params);
    const auto start = clock::now();
    const auto report = liftweber::solve(inst);
    const double ms =
        std::chrono::duration<double, std::milli>(clock::now() - start).count();
    std::cout << "trial " << (t + 1) << ": m=" << m
              << " classes=" << report.num_classes << " value="
              << report.optimum_value << " time_ms=" << ms << "\n";
    total_ms += ms;
    best_ms = (t == 0) ? ms : std::min(best_ms, ms);
  }
  std::cout << "mean_ms=" << total_ms / static_cast<double>(trials)
            << " min_ms=" << best_ms << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-facility min-sum Weber location solver (lift metric)"};
  app.require_subcommand(1);

  CommonOpts opts;
  bool all_candidates = false;
  std::string locations_path;
  std::size_t grid = 200;
  std::string dump_grid_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("instance", opts.instance_path, "Instance file")
        ->required();
    cmd->add_option("--format", opts.format, "Instance format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out_path, "Write output to a file");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  add_common(solve_cmd);
  solve_cmd->add_flag("--all-candidates", all_candidates,
                      "Include the full candidate list in the report");

  auto* discrete_cmd =
      app.add_subcommand("discrete", "Pick the best of fixed locations");
  add_common(discrete_cmd);
  discrete_cmd
      ->add_option("--locations", locations_path, "Candidate locations file")
      ->required();

  auto* verify_cmd = app.add_subcommand(
      "verify", "Solve and certify against the brute-force oracle");
  add_common(verify_cmd);
  verify_cmd->add_option("--grid", grid, "Grid resolution for the sanity scan")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  verify_cmd->add_option("--dump-grid", dump_grid_path,
                         "Write objective grid samples to a CSV file");

  std::size_t gen_m = 1, trials = 3;
  std::uint64_t seed = 0;
  std::string coord_range_spec = "-5,5", weight_range_spec = "1,5";
  std::string gen_out, gen_name;

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--m", gen_m, "Number of demand points")->required();
  gen_cmd->add_option("--seed", seed, "RNG seed")->required();
  gen_cmd->add_option("--coord-range", coord_range_spec, "Coordinate bounds 'lo,hi'");
  gen_cmd->add_option("--weight-range", weight_range_spec, "Weight bounds 'lo,hi'");
  gen_cmd->add_option("--name", gen_name, "Instance name metadata");
  gen_cmd->add_option("--out", gen_out, "Write instance to a file");

  auto* bench_cmd = app.add_subcommand("bench", "Time the solver");
  bench_cmd->add_option("--m", gen_m, "Number of demand points")->required();
  bench_cmd->add_option("--trials", trials, "Number of timed trials");
  bench_cmd->add_option("--seed", seed, "RNG seed");
  bench_cmd->add_option("--coord-range", coord_range_spec,
                        "Coordinate bounds 'lo,hi'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(opts, all_candidates);
    if (discrete_cmd->parsed()) return run_discrete(opts, locations_path);
    if (verify_cmd->parsed()) return run_verify(opts, grid, dump_grid_path);

    const auto coord_range = parse_range(coord_range_spec);
    if (gen_cmd->parsed()) {
      const auto weight_range = parse_range(weight_range_spec);
      liftweber::GenParams params;
      params.m = gen_m;
      params.coord_lo = coord_range.first;
      params.coord_hi = coord_range.second;
      params.weight_lo = weight_range.first;
      params.weight_hi = weight_range.second;
      params.seed = seed;
      return run_gen(params, gen_out, gen_name);
    }
    if (bench_cmd->parsed()) return run_bench(gen_m, trials, seed, coord_range);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const liftweber::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kUsageError;
}
