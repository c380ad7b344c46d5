// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/objectives.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <utility>

#include "superior/rng.hpp"

namespace superior {

Objective::Objective(SquaredNorm k) : kind_(k) {}
Objective::Objective(L1Norm k) : kind_(k) {}

Objective::Objective(Quadratic k) : kind_(std::move(k)) {
  const auto& q = std::get<Quadratic>(kind_);
  if (q.Q.rows() != q.Q.cols()) {
    throw ConfigError("quadratic matrix must be square");
  }
  if (q.c.size() != q.Q.rows()) {
    throw DimensionError("quadratic linear term does not match the matrix");
  }
  if (!q.Q.isApprox(q.Q.transpose(), 1e-12)) {
    throw ConfigError("quadratic matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(q.Q, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, q.Q.cwiseAbs().maxCoeff());
  if (eig.eigenvalues().minCoeff() < -1e-10 * scale) {
    throw ConfigError("quadratic matrix must be positive semidefinite");
  }
}

Objective::Objective(BlackBox k) : kind_(std::move(k)) {
  if (!std::get<BlackBox>(kind_).evaluator) {
    throw ConfigError("black-box objective needs an evaluator");
  }
}

bool Objective::subgradient_available() const {
  return !std::holds_alternative<BlackBox>(kind_);
}

double evaluate(const Objective& obj, const Vector& x) {
  return std::visit(
      [&x](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SquaredNorm>) {
          return x.squaredNorm();
        } else if constexpr (std::is_same_v<T, L1Norm>) {
          return x.cwiseAbs().sum();
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          if (k.c.size() != x.size()) {
            throw DimensionError("point does not match the quadratic's dimension");
          }
          return 0.5 * x.dot(k.Q * x) + k.c.dot(x);
        } else {
          return k.evaluator(x);
        }
      },
      obj.kind());
}

Vector subgradient(const Objective& obj, const Vector& x) {
  return std::visit(
      [&x](const auto& k) -> Vector {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SquaredNorm>) {
          return 2.0 * x;
        } else if constexpr (std::is_same_v<T, L1Norm>) {
          Vector s(x.size());
          for (Eigen::Index i = 0; i < x.size(); ++i) {
            s[i] = x[i] > 0.0 ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0);
          }
          return s;
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          if (k.c.size() != x.size()) {
            throw DimensionError("point does not match the quadratic's dimension");
          }
          return k.Q * x + k.c;
        } else {
          throw SubgradientUnavailable(
              "objective is value-only; use derivative_free_direction");
        }
      },
      obj.kind());
}

Direction::Direction(Vector v) : v_(std::move(v)) {
  const double nrm = v_.norm();
  if (!(nrm <= 1.0 + 1e-12)) {
    throw ConfigError("direction norm exceeds 1");
  }
  is_zero_ = (nrm == 0.0);
}

Direction Direction::zero(int n) { return Direction(Vector::Zero(n)); }

Direction subgradient_direction(const Objective& obj, const Vector& y) {
  const Vector s = subgradient(obj, y);
  const double nrm = s.norm();
  if (nrm == 0.0) return Direction::zero(static_cast<int>(y.size()));
  return Direction(-s / nrm);
}

Direction derivative_free_direction(const Objective& obj, const Vector& y,
                                    double probe_radius, int trials,
                                    std::uint64_t seed) {
  if (!(probe_radius > 0.0)) {
    throw ConfigError("probe radius must be positive");
  }
  if (trials < 1) {
    throw ConfigError("direction search needs at least one trial");
  }
  const double base = evaluate(obj, y);
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Vector d = rng.unit_vector(static_cast<int>(y.size()));
    if (evaluate(obj, y + probe_radius * d) <= base) {
      return Direction(std::move(d));
    }
  }
  return Direction::zero(static_cast<int>(y.size()));
}

bool verify_nonascending(const Objective& obj, const Vector& y,
                         const Direction& d, double delta) {
  if (!(delta > 0.0)) {
    throw ConfigError("delta must be positive");
  }
  const double base = evaluate(obj, y);
  for (int j = 0; j <= 16; ++j) {
    const double lambda = delta * static_cast<double>(j) / 16.0;
    if (evaluate(obj, y + lambda * d.vector()) > base + 1e-12) {
      return false;
    }
  }
  return true;
}

}  // namespace superior
