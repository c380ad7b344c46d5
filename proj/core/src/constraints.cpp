// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/constraints.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace superior {

namespace {

void require_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) {
    throw ConfigError(std::string(what) + " must have finite components");
  }
}

void require_dim(const ConstraintSet& set, const Vector& x) {
  if (set.dim() != x.size()) {
    throw DimensionError("point dimension " + std::to_string(x.size()) +
                         " does not match set dimension " +
                         std::to_string(set.dim()));
  }
}

}  // namespace

ConstraintSet::ConstraintSet(Halfspace h) : kind_(std::move(h)) {
  const auto& hs = std::get<Halfspace>(kind_);
  require_finite(hs.a, "halfspace normal");
  if (!std::isfinite(hs.b)) throw ConfigError("halfspace offset must be finite");
  if (hs.a.size() < 1 || hs.a.norm() == 0.0) {
    throw ConfigError("halfspace normal must be nonzero");
  }
  dim_ = static_cast<int>(hs.a.size());
}

ConstraintSet::ConstraintSet(Hyperplane h) : kind_(std::move(h)) {
  const auto& hp = std::get<Hyperplane>(kind_);
  require_finite(hp.a, "hyperplane normal");
  if (!std::isfinite(hp.b)) throw ConfigError("hyperplane offset must be finite");
  if (hp.a.size() < 1 || hp.a.norm() == 0.0) {
    throw ConfigError("hyperplane normal must be nonzero");
  }
  dim_ = static_cast<int>(hp.a.size());
}

ConstraintSet::ConstraintSet(Ball b) : kind_(std::move(b)) {
  const auto& bl = std::get<Ball>(kind_);
  require_finite(bl.center, "ball center");
  if (!(bl.radius > 0.0) || !std::isfinite(bl.radius)) {
    throw ConfigError("ball radius must be positive and finite");
  }
  if (bl.center.size() < 1) throw ConfigError("ball center must be nonempty");
  dim_ = static_cast<int>(bl.center.size());
}

ConstraintSet::ConstraintSet(Box b) : kind_(std::move(b)) {
  const auto& bx = std::get<Box>(kind_);
  require_finite(bx.lower, "box lower bound");
  require_finite(bx.upper, "box upper bound");
  if (bx.lower.size() != bx.upper.size() || bx.lower.size() < 1) {
    throw ConfigError("box bounds must be nonempty and of equal dimension");
  }
  if ((bx.lower.array() > bx.upper.array()).any()) {
    throw ConfigError("box lower bound must not exceed upper bound");
  }
  dim_ = static_cast<int>(bx.lower.size());
}

namespace {

bool member(const ConstraintSet::Kind& kind, const Vector& x) {
  return std::visit(
      [&x](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          return k.a.dot(x) <= k.b;
        } else if constexpr (std::is_same_v<T, Hyperplane>) {
          return k.a.dot(x) == k.b;
        } else if constexpr (std::is_same_v<T, Ball>) {
          return (x - k.center).squaredNorm() <= k.radius * k.radius;
        } else {
          return (x.array() >= k.lower.array()).all() &&
                 (x.array() <= k.upper.array()).all();
        }
      },
      kind);
}

// Conservative bound on the evaluation error of the affine residual
// a.x - b. Residual magnitudes at or below this floor cannot be improved by
// a correction step; they are rounding churn, not geometry.
double affine_noise_floor(const Vector& a, const Vector& x, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double scale = a.cwiseAbs().dot(x.cwiseAbs()) + std::abs(b);
  return 16.0 * static_cast<double>(a.size() + 4) * eps * scale;
}

// Same idea for the ball residual ||x - c||^2 - r^2, including the
// cancellation incurred when the re-centered difference is recomputed.
double ball_noise_floor(const Ball& k, const Vector& u, double q) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double scale = q + k.radius * k.radius +
                       2.0 * u.cwiseAbs().dot(k.center.cwiseAbs());
  return 16.0 * static_cast<double>(u.size() + 4) * eps * scale;
}

}  // namespace

bool contains(const ConstraintSet& set, const Vector& x) {
  require_dim(set, x);
  return member(set.kind(), x);
}

// Closed-form steps per kind, re-applied while the residual stays above the
// noise floor. A single step can leave an above-floor residual when the
// update cancels catastrophically (the image is much smaller than the
// input); the follow-up step works at the image's own scale and settles
// under the floor. Points at or below the floor are returned unchanged, so
// every output of project is an exact fixed point of project.
Vector project(const ConstraintSet& set, const Vector& x) {
  require_dim(set, x);
  constexpr int kMaxPasses = 8;
  return std::visit(
      [&x](const auto& k) -> Vector {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          Vector y = x;
          for (int pass = 0; pass < kMaxPasses; ++pass) {
            const double r = k.a.dot(y) - k.b;
            if (r <= 0.0) return y;
            if (r <= affine_noise_floor(k.a, y, k.b)) return y;
            y -= (r / k.a.squaredNorm()) * k.a;
          }
          return y;
        } else if constexpr (std::is_same_v<T, Hyperplane>) {
          Vector y = x;
          for (int pass = 0; pass < kMaxPasses; ++pass) {
            const double r = k.a.dot(y) - k.b;
            if (r == 0.0) return y;
            if (std::abs(r) <= affine_noise_floor(k.a, y, k.b)) return y;
            y -= (r / k.a.squaredNorm()) * k.a;
          }
          return y;
        } else if constexpr (std::is_same_v<T, Ball>) {
          Vector y = x;
          for (int pass = 0; pass < kMaxPasses; ++pass) {
            const Vector u = y - k.center;
            const double q = u.squaredNorm();
            const double rr = k.radius * k.radius;
            if (q <= rr) return y;
            if (q - rr <= ball_noise_floor(k, u, q)) return y;
            y = k.center + (k.radius / std::sqrt(q)) * u;
          }
          return y;
        } else {
          return x.cwiseMax(k.lower).cwiseMin(k.upper);
        }
      },
      set.kind());
}

double distance(const ConstraintSet& set, const Vector& x) {
  return (x - project(set, x)).norm();
}

ConstraintFamily::ConstraintFamily(std::vector<ConstraintSet> sets,
                                   std::optional<Box> ambient)
    : sets_(std::move(sets)), ambient_(std::move(ambient)) {
  if (sets_.empty()) {
    throw ConfigError("constraint family must contain at least one set");
  }
  dim_ = sets_.front().dim();
  for (const auto& s : sets_) {
    if (s.dim() != dim_) {
      throw DimensionError("all sets of a family must share one dimension");
    }
  }
  if (ambient_) {
    ConstraintSet check(*ambient_);  // validates bounds
    if (check.dim() != dim_) {
      throw DimensionError("ambient box dimension does not match the family");
    }
  }
}

const ConstraintSet& ConstraintFamily::set(int i) const {
  if (i < 1 || i > size()) {
    throw DimensionError("constraint index " + std::to_string(i) +
                         " outside [1, " + std::to_string(size()) + "]");
  }
  return sets_[static_cast<std::size_t>(i - 1)];
}

double proximity(const ConstraintFamily& family, const Vector& x) {
  if (x.size() != family.dim()) {
    throw DimensionError("point dimension does not match the family");
  }
  double sum = 0.0;
  for (const auto& s : family.sets()) {
    sum += (x - project(s, x)).squaredNorm();
  }
  return sum / static_cast<double>(family.size());
}

bool is_epsilon_compatible(const ConstraintFamily& family, const Vector& x,
                           double eps) {
  if (!(eps > 0.0)) {
    throw ConfigError("epsilon must be positive");
  }
  return proximity(family, x) <= eps;
}

}  // namespace superior
