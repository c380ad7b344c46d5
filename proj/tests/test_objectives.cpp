// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/objectives.hpp"

#include <doctest.h>

#include <cmath>

#include "superior/rng.hpp"

using namespace superior;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

// central finite differences, the independent gradient oracle
Vector fd_gradient(const Objective& obj, const Vector& x, double h = 1e-6) {
  Vector g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vector hi = x;
    Vector lo = x;
    hi[i] += h;
    lo[i] -= h;
    g[i] = (evaluate(obj, hi) - evaluate(obj, lo)) / (2.0 * h);
  }
  return g;
}

}  // namespace

TEST_CASE("evaluate on the provided kinds") {
  CHECK(evaluate(Objective(SquaredNorm{}), vec2(3, 4)) == 25.0);
  CHECK(evaluate(Objective(L1Norm{}), vec2(-1, 2)) == 3.0);

  // phi = x'Qx/2 + c'x with Q = I, c = 0; expanded componentwise:
  // (1^2 + 1^2)/2 = 1
  Objective quad(Quadratic{Matrix::Identity(2, 2), Vector::Zero(2)});
  CHECK(evaluate(quad, vec2(1, 1)) == 1.0);
  double manual = 0.0;
  const Vector x = vec2(1, 1);
  for (int i = 0; i < 2; ++i) manual += 0.5 * x[i] * x[i];
  CHECK(evaluate(quad, x) == manual);

  Objective bb(BlackBox{[](const Vector& v) { return v[0] * v[0]; }});
  CHECK(evaluate(bb, vec2(3, 9)) == 9.0);
}

TEST_CASE("quadratic construction validates shape and symmetry") {
  Matrix bad(2, 2);
  bad << 1, 2, 3, 4;
  CHECK_THROWS_AS(Objective(Quadratic{bad, Vector::Zero(2)}), ConfigError);

  Matrix indefinite(2, 2);
  indefinite << 1, 0, 0, -1;
  CHECK_THROWS_AS(Objective(Quadratic{indefinite, Vector::Zero(2)}),
                  ConfigError);

  CHECK_THROWS_AS(Objective(Quadratic{Matrix::Identity(2, 2), Vector::Zero(3)}),
                  DimensionError);
}

TEST_CASE("subgradient direction is the normalized negative subgradient") {
  Objective sq(SquaredNorm{});

  Direction d = subgradient_direction(sq, vec2(1, 0));
  CHECK(d.vector()[0] == -1.0);
  CHECK(d.vector()[1] == 0.0);
  // descent verified by a finite-difference check
  CHECK(fd_gradient(sq, vec2(1, 0)).dot(d.vector()) < 0.0);

  // 0 in the subdifferential at the minimizer
  Direction at_min = subgradient_direction(sq, vec2(0, 0));
  CHECK(at_min.is_zero());

  // L1 at (0, 3): kink component resolves to 0, so s = (0, 1)
  Objective l1(L1Norm{});
  Direction dl1 = subgradient_direction(l1, vec2(0, 3));
  CHECK(dl1.vector()[0] == 0.0);
  CHECK(dl1.vector()[1] == -1.0);
  CHECK(evaluate(l1, vec2(0, 3) + 0.5 * dl1.vector()) <=
        evaluate(l1, vec2(0, 3)));
  CHECK(subgradient_direction(l1, vec2(0, 0)).is_zero());

  Objective bb(BlackBox{[](const Vector& v) { return v.squaredNorm(); }});
  CHECK_THROWS_AS(subgradient_direction(bb, vec2(1, 0)),
                  SubgradientUnavailable);
}

TEST_CASE("subgradient oracle matches finite differences") {
  Rng rng(314159);
  Matrix q(3, 3);
  q << 4, 1, 0, 1, 3, 1, 0, 1, 2;
  Vector c(3);
  c << -1, 0.5, 2;
  const Objective objs[] = {Objective(SquaredNorm{}),
                            Objective(Quadratic{q, c})};
  for (const auto& obj : objs) {
    for (int rep = 0; rep < 50; ++rep) {
      const Vector x = 2.0 * rng.gaussian_vector(3);
      const Vector g = subgradient(obj, x);
      const Vector fd = fd_gradient(obj, x);
      REQUIRE((g - fd).norm() <= 1e-5 * std::max(1.0, g.norm()));
    }
  }
}

TEST_CASE("subgradient direction is nonascending where the gradient is large") {
  Rng rng(1618);
  Objective sq(SquaredNorm{});
  for (int rep = 0; rep < 100; ++rep) {
    const Vector x = 2.0 * rng.gaussian_vector(4);
    if (subgradient(sq, x).norm() < 1e-6) continue;
    const Direction d = subgradient_direction(sq, x);
    REQUIRE(verify_nonascending(sq, x, d, 1e-3));
  }
}

TEST_CASE("derivative-free search returns certified nonascent directions") {
  Objective sq(SquaredNorm{});
  const Vector y = vec2(1, 0);
  Direction d = derivative_free_direction(sq, y, 0.25, 64, 7);
  REQUIRE_FALSE(d.is_zero());
  // the postcondition, re-checked by direct evaluation
  CHECK(evaluate(sq, y + 0.25 * d.vector()) <= evaluate(sq, y) + 1e-12);

  // constant objective: the first sampled direction qualifies (nonascent
  // holds with equality everywhere)
  Objective flat(BlackBox{[](const Vector&) { return 1.0; }});
  Direction first = derivative_free_direction(flat, y, 0.25, 8, 7);
  Rng sample_stream(7);
  CHECK((first.vector() - sample_stream.unit_vector(2)).norm() == 0.0);

  // at the minimizer with a large probe every direction ascends
  Direction stuck = derivative_free_direction(sq, vec2(0, 0), 1.0, 4, 7);
  CHECK(stuck.is_zero());

  CHECK_THROWS_AS(derivative_free_direction(sq, y, 0.0, 8, 7), ConfigError);
  CHECK_THROWS_AS(derivative_free_direction(sq, y, 0.5, 0, 7), ConfigError);
}

TEST_CASE("derivative-free search is deterministic in the seed") {
  Objective sq(SquaredNorm{});
  Rng rng(808);
  for (int rep = 0; rep < 50; ++rep) {
    const Vector y = 3.0 * rng.gaussian_vector(5);
    const std::uint64_t seed = rng.next_u64();
    const Direction a = derivative_free_direction(sq, y, 0.3, 16, seed);
    const Direction b = derivative_free_direction(sq, y, 0.3, 16, seed);
    REQUIRE((a.vector() - b.vector()).norm() == 0.0);
  }
}

TEST_CASE("all direction constructors respect the unit-norm cap") {
  Rng rng(111);
  Objective sq(SquaredNorm{});
  Objective l1(L1Norm{});
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng.uniform_int(0, 5));
    const Vector y = 3.0 * rng.gaussian_vector(n);
    CHECK(subgradient_direction(sq, y).vector().norm() <= 1.0 + 1e-12);
    CHECK(subgradient_direction(l1, y).vector().norm() <= 1.0 + 1e-12);
    CHECK(derivative_free_direction(sq, y, 0.2, 8, rep).vector().norm() <=
          1.0 + 1e-12);
  }
  Vector too_long(2);
  too_long << 2, 0;
  CHECK_THROWS_AS(Direction{too_long}, ConfigError);
}

TEST_CASE("verify_nonascending scans a 17-point grid") {
  Objective sq(SquaredNorm{});
  const Vector y = vec2(1, 0);

  CHECK(verify_nonascending(sq, y, Direction::zero(2), 0.5));
  CHECK(verify_nonascending(sq, y, Direction(vec2(-1, 0)), 0.5));
  CHECK_FALSE(verify_nonascending(sq, y, Direction(vec2(1, 0)), 0.5));
  CHECK_THROWS_AS(verify_nonascending(sq, y, Direction::zero(2), 0.0),
                  ConfigError);
}
