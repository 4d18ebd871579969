#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symdepth/report.hpp"

namespace symdepth {

/// A verification campaign: which bound to drive, the instance family and
/// ranges, the seed, and where to write reports. A fixed config (with
/// include_timings off) produces byte-identical CSV and JSON on every run.
struct ExperimentConfig {
  /// One of: cor22, thm34, thm42, lem41, prop33, lem31, lem32, prop21,
  /// forest (the names are the CLI verification tokens).
  std::string suite;
  int n_min = 1;
  int n_max = 7;
  int s_min = 1;
  int s_max = 2;
  int random_count = 100;
  std::uint64_t seed = 1;
  /// Field characteristics; the first is used for reported depths, the rest
  /// are compared against it when cross_validate is on.
  std::vector<int> characteristics = {0};
  /// erdos_renyi | random_chordal | random_tree | exhaustive
  std::string family = "erdos_renyi";
  double edge_probability = 0.5;
  /// Re-derive every ideal's Betti table through the independent oracle and
  /// compare depths across the characteristics (ideals with <= 14 generators).
  bool cross_validate = false;
  /// Off by default so outputs are byte-stable; on, the ms column is wall time.
  bool include_timings = false;
  int generator_cap = 5000;
  std::string csv_path;
  std::string json_path;
};

ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig read_experiment_config(const std::string& path);

struct ExperimentResult {
  std::vector<VerificationReport> reports;
  int exit_code = 0;
  /// Path of the minimal-reproducer file, written when a guaranteed instance
  /// is violated (the campaign stops at that instance).
  std::string reproducer_path;
};

/// Generate the instance stream, evaluate every instance, write the
/// configured outputs, and summarize. Instance evaluation errors are
/// reported as violations, never swallowed.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace symdepth
