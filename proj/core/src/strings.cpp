// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/strings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "superior/rng.hpp"

namespace superior {

StringPlan::StringPlan(std::vector<IndexVector> strings,
                       std::vector<double> weights)
    : strings_(std::move(strings)), weights_(std::move(weights)) {
  if (strings_.empty() || strings_.size() != weights_.size()) {
    throw PlanError("plan needs one positive weight per string");
  }
  for (const auto& t : strings_) {
    if (t.indices.empty()) throw PlanError("index vectors must be nonempty");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw PlanError("string weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw PlanError("string weights sum to " + std::to_string(sum) +
                    ", expected 1");
  }
  if (sum != 1.0) {
    for (double& w : weights_) w /= sum;
  }
}

bool StringPlan::is_fit(int m) const {
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (const auto& t : strings_) {
    for (int i : t.indices) {
      if (i < 1 || i > m) return false;
      seen[static_cast<std::size_t>(i)] = true;
    }
  }
  for (int i = 1; i <= m; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

int StringPlan::max_length() const {
  int q = 0;
  for (const auto& t : strings_) q = std::max(q, t.length());
  return q;
}

double StringPlan::min_weight() const {
  return *std::min_element(weights_.begin(), weights_.end());
}

bool satisfies(const StringPlan& plan, const PlanBounds& bounds) {
  return plan.max_length() <= bounds.qbar && plan.min_weight() >= bounds.delta;
}

namespace {

PlanBounds default_bounds(int m) {
  return PlanBounds{0.5 / static_cast<double>(m), m};
}

IndexVector full_string(int m, int rotation = 0) {
  IndexVector t;
  t.indices.resize(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) {
    t.indices[static_cast<std::size_t>(s)] = 1 + (s + rotation) % m;
  }
  return t;
}

StringPlan singleton_plan(int m) {
  std::vector<IndexVector> strings;
  strings.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) strings.push_back(IndexVector{{i}});
  std::vector<double> weights(static_cast<std::size_t>(m),
                              1.0 / static_cast<double>(m));
  return StringPlan(std::move(strings), std::move(weights));
}

}  // namespace

BasicAlgorithm::BasicAlgorithm(ConstraintFamily family, PlanStrategy strategy,
                               PlanBounds bounds)
    : family_(std::move(family)), strategy_(strategy), bounds_(bounds) {
  const double m = static_cast<double>(family_.size());
  if (!(bounds_.delta > 0.0) || !(bounds_.delta < 1.0 / m)) {
    throw ConfigError("plan bound delta must lie in (0, 1/m)");
  }
  if (bounds_.qbar < family_.size()) {
    throw ConfigError("plan bound qbar must be at least m");
  }
}

BasicAlgorithm BasicAlgorithm::kaczmarz(ConstraintFamily family) {
  const int m = family.size();
  return BasicAlgorithm(std::move(family), PlanStrategy::Kaczmarz,
                        default_bounds(m));
}

BasicAlgorithm BasicAlgorithm::cimmino(ConstraintFamily family) {
  const int m = family.size();
  return BasicAlgorithm(std::move(family), PlanStrategy::Cimmino,
                        default_bounds(m));
}

BasicAlgorithm BasicAlgorithm::cyclic_rotation(ConstraintFamily family) {
  const int m = family.size();
  return BasicAlgorithm(std::move(family), PlanStrategy::CyclicRotation,
                        default_bounds(m));
}

BasicAlgorithm BasicAlgorithm::fixed(ConstraintFamily family, StringPlan plan) {
  const int m = family.size();
  if (!plan.is_fit(m)) {
    throw PlanError("fixed plan does not cover every constraint index");
  }
  PlanBounds bounds{std::min(0.5 / static_cast<double>(m),
                             0.5 * plan.min_weight()),
                    std::max(m, plan.max_length())};
  BasicAlgorithm algo(std::move(family), PlanStrategy::Fixed, bounds);
  algo.fixed_plan_ = std::move(plan);
  return algo;
}

BasicAlgorithm BasicAlgorithm::seeded_random(ConstraintFamily family,
                                             double delta, int qbar,
                                             std::uint64_t seed) {
  BasicAlgorithm algo(std::move(family), PlanStrategy::SeededRandom,
                      PlanBounds{delta, qbar});
  algo.seed_ = seed;
  return algo;
}

StringPlan BasicAlgorithm::plan_for_iteration(long k) const {
  const int m = family_.size();
  switch (strategy_) {
    case PlanStrategy::Fixed:
      return *fixed_plan_;
    case PlanStrategy::Kaczmarz:
      return StringPlan({full_string(m)}, {1.0});
    case PlanStrategy::Cimmino:
      return singleton_plan(m);
    case PlanStrategy::CyclicRotation:
      return StringPlan({full_string(m, static_cast<int>(k % m))}, {1.0});
    case PlanStrategy::SeededRandom:
      break;
  }

  // Random plan: partition a shuffled index list into S strings whose
  // weights stay at least delta. Partitions of a permutation are fit by
  // construction and never exceed length m <= qbar.
  Rng rng(derive_seed(seed_, static_cast<std::uint64_t>(k)));
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 1);
  for (int i = m - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  }
  const int max_strings =
      std::min<long>(m, static_cast<long>(std::floor(1.0 / bounds_.delta)));
  const int n_strings = static_cast<int>(rng.uniform_int(1, max_strings));

  std::vector<IndexVector> strings(static_cast<std::size_t>(n_strings));
  for (int i = 0; i < m; ++i) {
    // even split; the first (m % n_strings) strings take one extra index
    const int s = std::min(n_strings - 1, i * n_strings / m);
    strings[static_cast<std::size_t>(s)].indices.push_back(order[i]);
  }
  // Weight floor slightly above delta so the final renormalization cannot
  // push any weight under the declared bound.
  const double floor_w = bounds_.delta * (1.0 + 1e-9);
  std::vector<double> weights(static_cast<std::size_t>(n_strings));
  double raw_sum = 0.0;
  for (auto& w : weights) {
    w = rng.uniform(0.5, 1.0);
    raw_sum += w;
  }
  const double slack = 1.0 - static_cast<double>(n_strings) * floor_w;
  double sum = 0.0;
  for (auto& w : weights) {
    w = floor_w + slack * (w / raw_sum);
    sum += w;
  }
  for (auto& w : weights) w /= sum;
  return StringPlan(std::move(strings), std::move(weights));
}

Vector apply_string(const ConstraintFamily& family, const IndexVector& t,
                    const Vector& x) {
  Vector y = x;
  for (int i : t.indices) {
    y = project(family.set(i), y);
  }
  return y;
}

Vector dsap_step(const BasicAlgorithm& algo, const StringPlan& plan,
                 const Vector& x) {
  const ConstraintFamily& family = algo.family();
  if (!plan.is_fit(family.size())) {
    throw PlanError("plan does not cover every constraint index");
  }
  Vector y = Vector::Zero(x.size());
  for (std::size_t s = 0; s < plan.strings().size(); ++s) {
    y += plan.weights()[s] * apply_string(family, plan.strings()[s], x);
  }
  return y;
}

namespace {

void require_stop_rule(const StopRule& stop) {
  if (!stop.max_iterations && !stop.epsilon) {
    throw ConfigError("stop rule must set max_iterations or epsilon");
  }
  if (stop.max_iterations && *stop.max_iterations < 0) {
    throw ConfigError("stop rule max_iterations must be nonnegative");
  }
  if (stop.epsilon && !(*stop.epsilon > 0.0)) {
    throw ConfigError("stop rule epsilon must be positive");
  }
}

}  // namespace

IterateTrace run_basic(const BasicAlgorithm& algo, const Vector& x0,
                       const StopRule& stop, const Objective* phi) {
  require_stop_rule(stop);
  if (x0.size() != algo.family().dim()) {
    throw DimensionError("initial point does not match the family dimension");
  }

  IterateTrace trace;
  Vector x = x0;
  for (long k = 0;; ++k) {
    TraceRecord rec;
    rec.k = k;
    rec.point = x;
    rec.prox = proximity(algo.family(), x);
    rec.phi = phi ? evaluate(*phi, x)
                  : std::numeric_limits<double>::quiet_NaN();
    trace.records.push_back(std::move(rec));

    if (stop.epsilon && trace.records.back().prox <= *stop.epsilon) {
      trace.stop_reason = StopReason::EpsilonReached;
      break;
    }
    if (stop.max_iterations && k >= *stop.max_iterations) {
      trace.stop_reason = StopReason::MaxIterations;
      break;
    }

    StringPlan plan = algo.plan_for_iteration(k);
    if (!satisfies(plan, algo.bounds())) {
      throw PlanError("emitted plan violates the declared bounds");
    }
    x = dsap_step(algo, plan, x);
  }
  return trace;
}

}  // namespace superior
