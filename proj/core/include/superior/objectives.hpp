// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <functional>
#include <variant>

#include "superior/errors.hpp"
#include "superior/types.hpp"

namespace superior {

/// phi(x) = ||x||^2.
struct SquaredNorm {};

/// phi(x) = ||x||_1.
struct L1Norm {};

/// phi(x) = x'Qx/2 + c'x with Q symmetric positive semidefinite.
struct Quadratic {
  Matrix Q;
  Vector c;
};

/// Value-only objective given by an arbitrary pure evaluator. No subgradient
/// oracle; use the derivative-free direction search. The evaluator must be
/// deterministic, which the library cannot check.
struct BlackBox {
  std::function<double(const Vector&)> evaluator;
};

/// A target function phi together with, where available, a subgradient
/// oracle. Convexity is assumed for the oracle-backed kinds.
class Objective {
 public:
  using Kind = std::variant<SquaredNorm, L1Norm, Quadratic, BlackBox>;

  Objective(SquaredNorm k);  // NOLINT(google-explicit-constructor)
  Objective(L1Norm k);  // NOLINT(google-explicit-constructor)
  Objective(Quadratic k);  // NOLINT(google-explicit-constructor)
  Objective(BlackBox k);  // NOLINT(google-explicit-constructor)

  const Kind& kind() const { return kind_; }
  bool subgradient_available() const;

 private:
  Kind kind_;
};

double evaluate(const Objective& obj, const Vector& x);

/// A chosen element of the subdifferential at x. For the L1 norm the
/// component at a kink is resolved to 0, the minimum-norm choice, so the
/// zero-subgradient test is exact at the origin. Throws
/// SubgradientUnavailable for value-only objectives.
Vector subgradient(const Objective& obj, const Vector& x);

/// A perturbation direction with norm at most one.
class Direction {
 public:
  explicit Direction(Vector v);

  static Direction zero(int n);

  const Vector& vector() const { return v_; }
  bool is_zero() const { return is_zero_; }

 private:
  Vector v_;
  bool is_zero_;
};

/// The normalized negative subgradient -s/||s||, or the zero direction when
/// 0 is in the subdifferential at y.
Direction subgradient_direction(const Objective& obj, const Vector& y);

/// Derivative-free nonascent search: samples `trials` unit directions from
/// the seed and returns the first d with phi(y + probe_radius*d) <= phi(y).
/// Falls back to the zero direction, which is always nonascending.
Direction derivative_free_direction(const Objective& obj, const Vector& y,
                                    double probe_radius, int trials,
                                    std::uint64_t seed);

/// Checks phi(y + lambda*d) <= phi(y) + 1e-12 on the 17-point grid
/// {delta*j/16 : j = 0..16}. A finite surrogate for the for-all-lambda
/// definition; it can be fooled by functions that ascend between grid
/// points.
bool verify_nonascending(const Objective& obj, const Vector& y,
                         const Direction& d, double delta);

}  // namespace superior
