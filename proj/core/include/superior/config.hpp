// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superior/objectives.hpp"
#include "superior/strings.hpp"
#include "superior/superiorize.hpp"
#include "superior/trace.hpp"

namespace superior {

struct RestartSpec {
  long to = 0;
  long every = 1;
  long budget = 0;
};

struct ScheduleSpec {
  bool disabled = false;
  double a = 0.5;
  std::optional<RestartSpec> restart;
};

struct DirectionSpec {
  std::string source = "subgradient";  // "subgradient" | "dfs"
  double probe_radius = 1.0;
  int trials = 32;
  std::uint64_t seed = 0;
};

struct PlanSpec {
  // "kaczmarz" | "cimmino" | "cyclic_rotation" | "fixed" | "seeded_random"
  std::string strategy = "kaczmarz";
  double delta = 0.0;  // 0 = strategy default
  int qbar = 0;        // 0 = strategy default
  std::uint64_t seed = 0;
  // for "fixed": 1-based index vectors and their weights
  std::vector<std::vector<int>> strings;
  std::vector<double> weights;
};

struct ObjectiveSpec {
  std::string kind = "squared_norm";  // "squared_norm" | "l1" | "quadratic"
  Matrix Q;
  Vector c;
};

struct AuxiliarySpec {
  std::string kind = "gradient_descent";
  double step = 0.1;
};

/// A full run description as carried by config files. "basic" mode runs the
/// unperturbed algorithm; the other modes wrap it in a superiorized version.
struct RunConfig {
  std::string mode = "basic";  // "basic" | "weak" | "strong" | "generic"
  int perturbations = 1;       // N
  ScheduleSpec schedule;
  DirectionSpec direction;
  PlanSpec plan;
  std::optional<ObjectiveSpec> objective;
  std::optional<AuxiliarySpec> auxiliary;
  StopRule stop;
  int stall_budget = 50;
  bool record_inner_events = false;
};

/// Parses a run config document; throws ConfigError naming the offending
/// field.
RunConfig run_config_from_json(const std::string& text);

/// Canonical JSON serialization (stable key order via the JSON library's
/// object ordering); also the input of the fingerprint.
std::string run_config_json(const RunConfig& config);

/// FNV-1a hash of the canonical serialization, as fixed-width hex.
std::string config_fingerprint(const RunConfig& config);

Objective make_objective(const ObjectiveSpec& spec);

BasicAlgorithm make_algorithm(ConstraintFamily family, const PlanSpec& spec);

Schedule make_schedule(const ScheduleSpec& spec);

/// Runs the configured process from x0 and stamps the trace metadata.
IterateTrace run_configured(const ConstraintFamily& family,
                            const RunConfig& config, const Vector& x0);

}  // namespace superior
