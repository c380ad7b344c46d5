// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "superior/objectives.hpp"
#include "superior/strings.hpp"
#include "superior/trace.hpp"
#include "superior/types.hpp"

namespace superior {

/// Restart the step-size counter to `to` every `every` emissions, at most
/// `budget` times. A finite budget keeps the emitted series summable.
struct RestartPolicy {
  long to = 0;
  long every = 1;
  long budget = 0;
};

/// The summable step-size source. Emissions follow eta_l = a^l with a global
/// monotone counter l starting below zero, optionally restarted by policy.
/// Schedules are immutable values: next_beta returns the advanced state
/// alongside the emitted beta. A disabled schedule emits beta = 0 forever
/// and is the switch for controlled unperturbed/perturbed comparisons.
class Schedule {
 public:
  static Schedule geometric(double a);
  static Schedule geometric(double a, RestartPolicy policy);
  static Schedule disabled();

  bool is_disabled() const { return disabled_; }
  double base() const { return a_; }
  /// Value of the counter l after the most recent emission (-1 before any).
  long cursor() const { return cursor_; }
  long emissions() const { return emissions_; }
  long restarts_used() const { return restarts_used_; }

  /// Analytic upper bound on the total of every beta this schedule can emit.
  double total_bound() const;

  friend std::pair<double, Schedule> next_beta(const Schedule& schedule);

 private:
  Schedule() = default;

  bool disabled_ = false;
  double a_ = 0.5;
  std::optional<RestartPolicy> policy_;
  long cursor_ = -1;
  long emissions_ = 0;
  long restarts_used_ = 0;
};

/// Advances the counter (applying the restart policy when due) and returns
/// beta = a^l together with the advanced schedule.
std::pair<double, Schedule> next_beta(const Schedule& schedule);

/// Perturbation directions come from the subgradient oracle, from the
/// derivative-free search, or from a caller-supplied rule (used to exercise
/// pathological directions in tests).
struct SubgradientSource {};

struct DerivativeFreeSource {
  double probe_radius = 1.0;
  int trials = 32;
  std::uint64_t seed = 0;
};

struct CustomSource {
  std::function<Direction(const Objective&, const Vector& y, long k, long n)>
      fn;
};

using DirectionSource =
    std::variant<SubgradientSource, DerivativeFreeSource, CustomSource>;

enum class SuperiorizationMode { Weak, Strong, Generic };

/// The auxiliary iterative process whose displacement induces perturbation
/// directions in Generic mode: v = (B(y) - y)/||B(y) - y||, or zero when B
/// fixes y.
struct AuxiliaryAlgorithm {
  std::function<Vector(const Vector&)> op;
  std::string description;
};

struct SuperiorizerConfig {
  /// Perturbation substeps per outer iteration (the constant N).
  int perturbations = 1;
  SuperiorizationMode mode = SuperiorizationMode::Weak;
  Schedule schedule = Schedule::geometric(0.5);
  DirectionSource direction = SubgradientSource{};
  std::optional<AuxiliaryAlgorithm> auxiliary;
  /// Strong mode: candidate draws allowed per perturbation substep before
  /// the run aborts with PerturbationStall. Without this guard a direction
  /// that never comes back under the outer value would spin the acceptance
  /// loop forever.
  int stall_budget = 50;
  bool record_inner_events = false;
};

/// Result of one outer superiorized iteration.
struct StepResult {
  Vector y;
  Schedule schedule = Schedule::disabled();
  double beta_consumed = 0.0;
  long descents = 0;
  std::vector<InnerEvent> events;
};

/// One weak-mode outer iteration: N unconditional perturbation substeps
/// y <- y + beta*v followed by one application of the basic algorithm.
/// `k` selects the basic algorithm's plan and enters event records.
StepResult weak_step(const BasicAlgorithm& algo, const Objective& obj,
                     const SuperiorizerConfig& cfg, const Vector& y,
                     Schedule schedule, long k = 0);

/// One strong-mode outer iteration: for each of the N substeps the direction
/// is computed once, then candidates z = y + beta*v are drawn with
/// monotonically advancing step sizes until phi(z) <= phi(y^k), comparing
/// against the outer iterate's value. Throws PerturbationStall when a
/// substep exceeds the stall budget.
StepResult strong_step(const BasicAlgorithm& algo, const Objective& obj,
                       const SuperiorizerConfig& cfg, const Vector& y,
                       Schedule schedule, long k = 0);

/// One generic-form iteration: the perturbation direction is the normalized
/// displacement of the auxiliary algorithm at y, and a single beta is drawn.
StepResult generic_step(const BasicAlgorithm& algo,
                        const AuxiliaryAlgorithm& aux, Schedule schedule,
                        const Vector& y, long k = 0);

/// Runs the superiorized version of the basic algorithm until the stop rule
/// fires. Records proximity, objective value, step-size consumption and
/// descent counts per outer iterate; inner events when configured.
IterateTrace run_superiorized(const BasicAlgorithm& algo, const Objective& obj,
                              const SuperiorizerConfig& cfg, const Vector& x0,
                              const StopRule& stop);

}  // namespace superior
