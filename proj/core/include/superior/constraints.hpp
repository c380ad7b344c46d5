// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "superior/errors.hpp"
#include "superior/types.hpp"

namespace superior {

/// Closed halfspace {x : a.x <= b}, nonzero normal a.
struct Halfspace {
  Vector a;
  double b;
};

/// Hyperplane {x : a.x = b}, nonzero normal a.
struct Hyperplane {
  Vector a;
  double b;
};

/// Closed Euclidean ball of strictly positive radius.
struct Ball {
  Vector center;
  double radius;
};

/// Axis-aligned box [lower, upper], lower <= upper componentwise.
struct Box {
  Vector lower;
  Vector upper;
};

/// One closed convex set in level-set form, with an exact closed-form
/// orthogonal projection. Construction validates the kind's invariants
/// (nonzero normal, positive radius, ordered bounds, finite entries) and
/// throws ConfigError on violation.
class ConstraintSet {
 public:
  using Kind = std::variant<Halfspace, Hyperplane, Ball, Box>;

  ConstraintSet(Halfspace h);  // NOLINT(google-explicit-constructor)
  ConstraintSet(Hyperplane h);  // NOLINT(google-explicit-constructor)
  ConstraintSet(Ball b);  // NOLINT(google-explicit-constructor)
  ConstraintSet(Box b);  // NOLINT(google-explicit-constructor)

  int dim() const { return dim_; }
  const Kind& kind() const { return kind_; }

 private:
  Kind kind_;
  int dim_;
};

/// Exact membership test, q(x) <= gamma evaluated with plain inequalities
/// (no tolerance band).
bool contains(const ConstraintSet& set, const Vector& x);

/// Orthogonal (least Euclidean distance) projection onto the set. Returns x
/// itself, bitwise, when x already belongs to the set. The computed image is
/// always an exact fixed point of project, so projecting twice changes
/// nothing.
Vector project(const ConstraintSet& set, const Vector& x);

/// Euclidean distance from x to the set: ||x - project(set, x)||.
double distance(const ConstraintSet& set, const Vector& x);

/// A family Theta = {C_i} of constraint sets sharing one ambient dimension,
/// with an optional ambient box Lambda. By default the ambient set is absent
/// (all of R^n).
class ConstraintFamily {
 public:
  explicit ConstraintFamily(std::vector<ConstraintSet> sets,
                            std::optional<Box> ambient = std::nullopt);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(sets_.size()); }
  const std::vector<ConstraintSet>& sets() const { return sets_; }
  /// i is 1-based, matching the index-vector convention.
  const ConstraintSet& set(int i) const;
  const std::optional<Box>& ambient() const { return ambient_; }

 private:
  std::vector<ConstraintSet> sets_;
  std::optional<Box> ambient_;
  int dim_;
};

/// Constraints-violation indicator: the mean of squared distances to the
/// individual sets, (1/m) sum_i dist(C_i, x)^2. Zero exactly on the
/// intersection.
double proximity(const ConstraintFamily& family, const Vector& x);

/// True iff proximity(family, x) <= eps. Throws ConfigError for eps <= 0.
bool is_epsilon_compatible(const ConstraintFamily& family, const Vector& x,
                           double eps);

}  // namespace superior
