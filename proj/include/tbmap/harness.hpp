#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tbmap/brute_force.hpp"
#include "tbmap/ga_mapper.hpp"
#include "tbmap/request_model.hpp"
#include "tbmap/testbed_model.hpp"

namespace tbmap {

struct TopologySpec {
  enum class Kind { grid, random, file };
  Kind kind = Kind::grid;
  int rows = 3, cols = 3;          // grid
  int n = 9;                       // random
  double edge_prob = 0.3;          // random
  std::optional<std::uint64_t> seed;  // random; defaults to the scenario base seed
  std::string path;                // file
};

struct RequestSource {
  bool from_file = false;
  std::string path;
  int count = 5;
  GeneratorParams params;
};

/// Everything one experiment needs: the testbed, the request stream, the
/// optimizer settings and how often to repeat. Repetition k runs with seed
/// base_seed + k for both request generation and the GA.
struct Scenario {
  TopologySpec topology;
  std::vector<InterfaceType> interface_types = default_interface_types();
  RequestSource requests;
  std::optional<int> mapping_limit;
  bool virtualization = false;
  GAConfig ga;
  int repetitions = 10;
  std::uint64_t base_seed = 0;
  bool run_ga = true;
  bool run_bf = false;
  /// When false, wall_ms is reported as zero so output is byte-stable.
  bool measure_time = true;
  double bf_space_cap = 1e8;
  /// Include per-run best solutions in the aggregate JSON.
  bool dump_solutions = false;
};

struct RunRow {
  std::uint64_t seed = 0;
  std::string algorithm;  // "ga" or "bf"
  int served = 0;
  FitnessBreakdown fitness;
  bool feasible = false;
  bool skipped = false;  // brute force refused (search space over cap)
  double wall_ms = 0.0;
  std::string solution_json;  // filled only when Scenario::dump_solutions
};

struct AlgorithmAggregate {
  int runs = 0;     // completed
  int skipped = 0;
  double mean_served = 0.0;
  double var_served = 0.0;  // population variance
  double mean_wall_ms = 0.0;
};

struct MetricsReport {
  std::vector<RunRow> rows;  // sorted by (seed, algorithm)
  std::map<std::string, AlgorithmAggregate> algorithms;
  /// Fraction of seeds, among those where both algorithms completed, with
  /// equal GA/BF total fitness resp. equal served counts.
  std::optional<double> optimality_rate;
  std::optional<double> served_match_rate;
  /// Mean GA served count, relative to the one-request-per-slot baseline.
  std::optional<double> slicing_revenue;
};

TestbedTopology build_scenario_topology(const Scenario& scenario);

/// Runs all repetitions and computes aggregates. Deterministic end-to-end
/// for a fixed base seed (timing aside). A brute-force run over the space
/// cap yields a row marked skipped rather than an error.
MetricsReport run_scenario(const Scenario& scenario);

/// Per-run CSV: header seed,algorithm,served,fitness,feasible,wall_ms.
/// Skipped rows carry served -1, fitness nan and feasible "skipped".
std::string metrics_csv(const MetricsReport& report);

/// Aggregates as a JSON object (fixed field order, floats rounded to six
/// significant digits).
std::string metrics_json(const MetricsReport& report);

/// Writes CSV and/or aggregate JSON; empty paths are skipped.
void emit_results(const MetricsReport& report, const std::string& csv_path,
                  const std::string& json_path);

Scenario scenario_from_json_string(const std::string& text);
Scenario scenario_from_json_file(const std::string& path);

}  // namespace tbmap
