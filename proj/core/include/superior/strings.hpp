// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "superior/constraints.hpp"
#include "superior/objectives.hpp"
#include "superior/trace.hpp"
#include "superior/types.hpp"

namespace superior {

/// An ordered list of constraint indices t = (t_1, ..., t_q). Indices are
/// 1-based, matching the modeling convention used everywhere in this
/// library.
struct IndexVector {
  std::vector<int> indices;

  int length() const { return static_cast<int>(indices.size()); }
};

/// A fit set of index vectors together with convex weights: the recipe for
/// one string-averaging iteration. Weights must be positive and sum to 1
/// within 1e-12; sums inside the tolerance are renormalized, anything else
/// is rejected rather than silently fixed.
class StringPlan {
 public:
  StringPlan(std::vector<IndexVector> strings, std::vector<double> weights);

  const std::vector<IndexVector>& strings() const { return strings_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Fitness: every constraint index in {1, ..., m} appears in some string.
  bool is_fit(int m) const;

  /// Longest string in the plan.
  int max_length() const;

  /// Smallest weight in the plan.
  double min_weight() const;

 private:
  std::vector<IndexVector> strings_;
  std::vector<double> weights_;
};

/// Regularity bounds on emitted plans: string lengths at most `qbar` and
/// weights at least `delta`, with delta in (0, 1/m) and qbar >= m.
struct PlanBounds {
  double delta = 0.0;
  int qbar = 0;
};

bool satisfies(const StringPlan& plan, const PlanBounds& bounds);

/// How the per-iteration plan is chosen. All strategies are deterministic
/// functions of the iteration index (and a seed where applicable), so any
/// run can be replayed exactly.
enum class PlanStrategy {
  Fixed,           ///< one user-supplied plan for every iteration
  Kaczmarz,        ///< single full string (1, 2, ..., m), weight 1
  Cimmino,         ///< m singleton strings, weights 1/m
  CyclicRotation,  ///< full string rotated by the iteration index
  SeededRandom,    ///< random partition plans drawn from the iteration seed
};

/// A feasibility-seeking algorithmic operator: a constraint family plus a
/// plan source. Every plan the source emits satisfies the declared bounds;
/// run_basic re-validates this each iteration.
class BasicAlgorithm {
 public:
  static BasicAlgorithm kaczmarz(ConstraintFamily family);
  static BasicAlgorithm cimmino(ConstraintFamily family);
  static BasicAlgorithm cyclic_rotation(ConstraintFamily family);
  static BasicAlgorithm fixed(ConstraintFamily family, StringPlan plan);
  static BasicAlgorithm seeded_random(ConstraintFamily family, double delta,
                                      int qbar, std::uint64_t seed);

  const ConstraintFamily& family() const { return family_; }
  PlanStrategy strategy() const { return strategy_; }
  const PlanBounds& bounds() const { return bounds_; }
  std::uint64_t seed() const { return seed_; }

  /// The plan used at iteration k.
  StringPlan plan_for_iteration(long k) const;

 private:
  BasicAlgorithm(ConstraintFamily family, PlanStrategy strategy,
                 PlanBounds bounds);

  ConstraintFamily family_;
  PlanStrategy strategy_;
  PlanBounds bounds_;
  std::optional<StringPlan> fixed_plan_;
  std::uint64_t seed_ = 0;
};

/// String operator P[t]: the composition of projections onto the sets whose
/// indices appear in t, applied first-to-last.
Vector apply_string(const ConstraintFamily& family, const IndexVector& t,
                    const Vector& x);

/// One string-averaging step: the weight-convex combination of the string
/// endpoints, summed in plan order so results are independent of any
/// parallel endpoint evaluation.
Vector dsap_step(const BasicAlgorithm& algo, const StringPlan& plan,
                 const Vector& x);

/// Runs the unperturbed process x^{k+1} = A(x^k), recording every iterate
/// with its proximity (and objective value when `phi` is given). Emitted
/// plans are validated against the declared bounds every iteration.
IterateTrace run_basic(const BasicAlgorithm& algo, const Vector& x0,
                       const StopRule& stop, const Objective* phi = nullptr);

}  // namespace superior
