// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superior/types.hpp"

namespace superior {

enum class StopReason { EpsilonReached, MaxIterations };

std::string to_string(StopReason reason);

/// Harness-level termination rule. The iterative processes themselves have
/// no stopping criterion; a run stops when proximity falls to `epsilon` or
/// after `max_iterations` steps, whichever is configured and fires first.
/// At least one of the two must be set.
struct StopRule {
  std::optional<long> max_iterations;
  std::optional<double> epsilon;
};

/// One recorded outer iterate.
///
/// `beta_consumed` is the step-size mass spent producing this iterate: in
/// weak mode every drawn beta, in strong mode the accepted betas, and for
/// the auxiliary-algorithm form the single beta of the step. The first
/// record carries 0. `descents` counts perturbation substeps that strictly
/// lowered the objective. `phi` is NaN when no objective was attached.
struct TraceRecord {
  long k = 0;
  Vector point;
  double prox = 0.0;
  double phi = 0.0;
  double beta_consumed = 0.0;
  long descents = 0;
};

/// One inner-loop event of a superiorized step: at outer iteration `k`,
/// perturbation index `n`, the step-size counter stood at `ell`, beta was
/// drawn, and the candidate was accepted or rejected. Weak-mode perturbations
/// are unconditional, so their events always carry accepted = true.
struct InnerEvent {
  long k = 0;
  long n = 0;
  long ell = 0;
  double beta = 0.0;
  bool accepted = true;
};

struct TraceMeta {
  std::string fingerprint;
  std::uint64_t seed = 0;
};

struct IterateTrace {
  std::vector<TraceRecord> records;
  TraceMeta meta;
  StopReason stop_reason = StopReason::MaxIterations;
  /// Populated only when the run was asked to record inner events.
  std::vector<InnerEvent> inner_events;

  long size() const { return static_cast<long>(records.size()); }
  const TraceRecord& back() const { return records.back(); }
};

}  // namespace superior
