// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "superior/config.hpp"
#include "superior/problems.hpp"

namespace superior {

struct ArmSpec {
  std::string name;
  RunConfig config;
};

/// A controlled batch: every arm runs on the same per-replicate instance
/// from the same initialization point under its own config, so differences
/// are attributable to the configs alone.
struct ExperimentSpec {
  ProblemSpec problem;
  std::vector<ArmSpec> arms;
  std::vector<double> eps_grid;
  int replicates = 1;
  std::string output_dir;
};

ExperimentSpec experiment_from_json(const std::string& text);

/// Aggregated epsilon-output comparison of one arm against the baseline at
/// one grid value.
struct ArmEpsilonStats {
  std::string arm;
  double eps = 0.0;
  int wins = 0;       ///< arm's epsilon-output phi strictly below baseline's
  int near_ties = 0;  ///< not below, but within 1e-9 above
  int losses = 0;     ///< above baseline's by more than 1e-9
  int missing = 0;    ///< either arm had no epsilon-output
  double fraction_strictly_lower = 0.0;
};

struct ExperimentReport {
  std::string output_dir;
  std::string baseline;
  std::vector<ArmEpsilonStats> comparisons;
  /// Per arm, counts of better-targeted verdicts against the baseline.
  std::map<std::string, std::map<std::string, int>> curve_verdicts;
  int failed_runs = 0;
};

/// Executes arms x replicates (replicates may run in parallel, capped by the
/// SUPERIOR_THREADS environment variable), writes traces, curves, pairwise
/// comparisons and summary.json under output_dir, and returns the summary.
ExperimentReport run_experiment(const ExperimentSpec& spec);

}  // namespace superior
