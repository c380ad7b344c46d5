// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/superiorize.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "superior/rng.hpp"

namespace superior {

Schedule Schedule::geometric(double a) {
  if (!(a > 0.0) || !(a < 1.0)) {
    throw ConfigError("schedule base must lie in (0, 1)");
  }
  Schedule s;
  s.a_ = a;
  return s;
}

Schedule Schedule::geometric(double a, RestartPolicy policy) {
  Schedule s = geometric(a);
  if (policy.to < 0) throw ConfigError("restart target must be nonnegative");
  if (policy.every < 1) throw ConfigError("restart period must be positive");
  if (policy.budget < 0) throw ConfigError("restart budget must be nonnegative");
  s.policy_ = policy;
  return s;
}

Schedule Schedule::disabled() {
  Schedule s;
  s.disabled_ = true;
  return s;
}

double Schedule::total_bound() const {
  if (disabled_) return 0.0;
  const double full = 1.0 / (1.0 - a_);
  if (!policy_) return full;
  return full + static_cast<double>(policy_->budget) *
                    std::pow(a_, static_cast<double>(policy_->to)) /
                    (1.0 - a_);
}

std::pair<double, Schedule> next_beta(const Schedule& schedule) {
  Schedule s = schedule;
  if (s.disabled_) {
    s.emissions_ += 1;
    return {0.0, s};
  }
  const bool restart_due = s.policy_ && s.emissions_ > 0 &&
                           s.emissions_ % s.policy_->every == 0 &&
                           s.restarts_used_ < s.policy_->budget;
  if (restart_due) {
    s.cursor_ = s.policy_->to;
    s.restarts_used_ += 1;
  } else {
    s.cursor_ += 1;
  }
  s.emissions_ += 1;
  return {std::pow(s.a_, static_cast<double>(s.cursor_)), s};
}

namespace {

Direction pick_direction(const Objective& obj, const Vector& y,
                         const DirectionSource& source, long k, long n,
                         long emission_count) {
  if (std::holds_alternative<SubgradientSource>(source)) {
    return subgradient_direction(obj, y);
  }
  if (const auto* dfs = std::get_if<DerivativeFreeSource>(&source)) {
    // One probe stream per substep, derived from the run position so that
    // repeated calls at the same position replay identically.
    const std::uint64_t probe_seed =
        derive_seed(dfs->seed, static_cast<std::uint64_t>(emission_count));
    return derivative_free_direction(obj, y, dfs->probe_radius, dfs->trials,
                                     probe_seed);
  }
  return std::get<CustomSource>(source).fn(obj, y, k, n);
}

Vector basic_apply(const BasicAlgorithm& algo, long k, const Vector& x) {
  StringPlan plan = algo.plan_for_iteration(k);
  if (!satisfies(plan, algo.bounds())) {
    throw PlanError("emitted plan violates the declared bounds");
  }
  return dsap_step(algo, plan, x);
}

}  // namespace

StepResult weak_step(const BasicAlgorithm& algo, const Objective& obj,
                     const SuperiorizerConfig& cfg, const Vector& y,
                     Schedule schedule, long k) {
  StepResult out;
  out.schedule = std::move(schedule);
  Vector cur = y;
  for (int n = 0; n < cfg.perturbations; ++n) {
    auto [beta, advanced] = next_beta(out.schedule);
    out.schedule = advanced;
    const Direction v = pick_direction(obj, cur, cfg.direction, k, n,
                                       out.schedule.emissions() - 1);
    out.beta_consumed += beta;
    if (cfg.record_inner_events) {
      out.events.push_back({k, n, out.schedule.cursor(), beta, true});
    }
    if (beta == 0.0 || v.is_zero()) continue;
    Vector next = cur + beta * v.vector();
    if (evaluate(obj, next) < evaluate(obj, cur)) out.descents += 1;
    cur = std::move(next);
  }
  out.y = basic_apply(algo, k, cur);
  return out;
}

StepResult strong_step(const BasicAlgorithm& algo, const Objective& obj,
                       const SuperiorizerConfig& cfg, const Vector& y,
                       Schedule schedule, long k) {
  StepResult out;
  out.schedule = std::move(schedule);
  const double phi_outer = evaluate(obj, y);
  Vector cur = y;
  for (int n = 0; n < cfg.perturbations; ++n) {
    const Direction v = pick_direction(obj, cur, cfg.direction, k, n,
                                       out.schedule.emissions());
    int trials = 0;
    for (;;) {
      if (++trials > cfg.stall_budget) {
        throw PerturbationStall(k, n, out.schedule.cursor());
      }
      auto [beta, advanced] = next_beta(out.schedule);
      out.schedule = advanced;
      Vector z = (beta == 0.0 || v.is_zero())
                     ? cur
                     : Vector(cur + beta * v.vector());
      const double phi_z = evaluate(obj, z);
      const bool accepted = phi_z <= phi_outer;
      if (cfg.record_inner_events) {
        out.events.push_back({k, n, out.schedule.cursor(), beta, accepted});
      }
      if (accepted) {
        if (phi_z < evaluate(obj, cur)) out.descents += 1;
        out.beta_consumed += beta;
        cur = std::move(z);
        break;
      }
    }
  }
  out.y = basic_apply(algo, k, cur);
  return out;
}

StepResult generic_step(const BasicAlgorithm& algo,
                        const AuxiliaryAlgorithm& aux, Schedule schedule,
                        const Vector& y, long k) {
  if (!aux.op) throw ConfigError("auxiliary algorithm has no operator");
  StepResult out;
  out.schedule = std::move(schedule);

  const Vector by = aux.op(y);
  if (by.size() != y.size()) {
    throw DimensionError("auxiliary operator changed the dimension");
  }
  const Vector displacement = by - y;
  const double nrm = displacement.norm();

  auto [beta, advanced] = next_beta(out.schedule);
  out.schedule = advanced;
  out.beta_consumed = beta;
  Vector perturbed = y;
  if (nrm != 0.0 && beta != 0.0) {
    const Vector v = displacement / nrm;
    perturbed = y + beta * v;
  }
  out.y = basic_apply(algo, k, perturbed);
  return out;
}

IterateTrace run_superiorized(const BasicAlgorithm& algo, const Objective& obj,
                              const SuperiorizerConfig& cfg, const Vector& x0,
                              const StopRule& stop) {
  if (x0.size() != algo.family().dim()) {
    throw DimensionError("initial point does not match the family dimension");
  }
  if (cfg.perturbations < 1) {
    throw ConfigError("perturbations per iteration must be at least 1");
  }
  if (cfg.mode == SuperiorizationMode::Generic && !cfg.auxiliary) {
    throw ConfigError("generic mode requires an auxiliary algorithm");
  }
  if (cfg.mode != SuperiorizationMode::Generic &&
      std::holds_alternative<SubgradientSource>(cfg.direction) &&
      !obj.subgradient_available()) {
    throw ConfigError(
        "subgradient direction source requires a subgradient-available "
        "objective; configure the derivative-free search instead");
  }
  if (!stop.max_iterations && !stop.epsilon) {
    throw ConfigError("stop rule must set max_iterations or epsilon");
  }
  if (stop.max_iterations && *stop.max_iterations < 0) {
    throw ConfigError("stop rule max_iterations must be nonnegative");
  }
  if (stop.epsilon && !(*stop.epsilon > 0.0)) {
    throw ConfigError("stop rule epsilon must be positive");
  }

  IterateTrace trace;
  Schedule schedule = cfg.schedule;
  Vector y = x0;
  double beta_consumed = 0.0;
  long descents = 0;

  for (long k = 0;; ++k) {
    TraceRecord rec;
    rec.k = k;
    rec.point = y;
    rec.prox = proximity(algo.family(), y);
    rec.phi = evaluate(obj, y);
    rec.beta_consumed = beta_consumed;
    rec.descents = descents;
    trace.records.push_back(std::move(rec));

    if (stop.epsilon && trace.records.back().prox <= *stop.epsilon) {
      trace.stop_reason = StopReason::EpsilonReached;
      break;
    }
    if (stop.max_iterations && k >= *stop.max_iterations) {
      trace.stop_reason = StopReason::MaxIterations;
      break;
    }

    StepResult step;
    switch (cfg.mode) {
      case SuperiorizationMode::Weak:
        step = weak_step(algo, obj, cfg, y, schedule, k);
        break;
      case SuperiorizationMode::Strong:
        step = strong_step(algo, obj, cfg, y, schedule, k);
        break;
      case SuperiorizationMode::Generic:
        step = generic_step(algo, *cfg.auxiliary, schedule, y, k);
        break;
    }
    y = std::move(step.y);
    schedule = step.schedule;
    beta_consumed = step.beta_consumed;
    descents = step.descents;
    if (cfg.record_inner_events) {
      trace.inner_events.insert(trace.inner_events.end(), step.events.begin(),
                                step.events.end());
    }
  }
  return trace;
}

}  // namespace superior
