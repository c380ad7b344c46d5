// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/strings.hpp"

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

// hyperplanes x1 = 0 and x2 = 0
ConstraintFamily axis_planes() {
  std::vector<ConstraintSet> sets;
  sets.emplace_back(Hyperplane{vec2(1, 0), 0.0});
  sets.emplace_back(Hyperplane{vec2(0, 1), 0.0});
  return ConstraintFamily(std::move(sets));
}

bool veq(const Vector& a, const Vector& b) {
  return a.size() == b.size() && (a - b).norm() == 0.0;
}

// random halfspaces all containing the ball B(center, radius)
ConstraintFamily random_halfspace_family(Rng& rng, int n, int m,
                                         const Vector& center, double radius) {
  std::vector<ConstraintSet> sets;
  for (int i = 0; i < m; ++i) {
    Vector a = rng.unit_vector(n);
    sets.emplace_back(Halfspace{a, a.dot(center) + radius});
  }
  return ConstraintFamily(std::move(sets));
}

}  // namespace

TEST_CASE("string plan construction validates weights") {
  CHECK_THROWS_AS(StringPlan({IndexVector{{1}}}, {0.5}), PlanError);
  CHECK_THROWS_AS(StringPlan({IndexVector{{1}}, IndexVector{{2}}}, {0.5, 0.6}),
                  PlanError);
  CHECK_THROWS_AS(StringPlan({IndexVector{{1}}, IndexVector{{2}}}, {1.2, -0.2}),
                  PlanError);
  CHECK_THROWS_AS(StringPlan({IndexVector{{}}}, {1.0}), PlanError);

  // a sum inside the 1e-12 band is renormalized
  StringPlan plan({IndexVector{{1}}, IndexVector{{2}}}, {0.5, 0.5 + 1e-13});
  double sum = 0.0;
  for (double w : plan.weights()) sum += w;
  CHECK(std::abs(sum - 1.0) <= 1e-15);
}

TEST_CASE("fitness requires every index to appear") {
  StringPlan covers({IndexVector{{1, 2}}, IndexVector{{3}}}, {0.5, 0.5});
  CHECK(covers.is_fit(3));
  CHECK_FALSE(covers.is_fit(4));

  StringPlan misses({IndexVector{{1, 1}}, IndexVector{{3}}}, {0.5, 0.5});
  CHECK_FALSE(misses.is_fit(3));
}

TEST_CASE("plan bounds") {
  StringPlan plan({IndexVector{{1, 2}}, IndexVector{{3}}}, {0.5, 0.5});
  CHECK(satisfies(plan, PlanBounds{0.1, 3}));
  CHECK_FALSE(satisfies(plan, PlanBounds{0.6, 3}));   // weight too small
  CHECK_FALSE(satisfies(plan, PlanBounds{0.1, 1}));   // string too long
}

TEST_CASE("apply_string composes projections in order") {
  ConstraintFamily family = axis_planes();
  CHECK(veq(apply_string(family, IndexVector{{1, 2}}, vec2(1, 1)), vec2(0, 0)));

  // singleton string is exactly one projection
  const Vector x = vec2(3, 4);
  CHECK(veq(apply_string(family, IndexVector{{2}}, x), project(family.set(2), x)));

  CHECK_THROWS_AS(apply_string(family, IndexVector{{0}}, x), DimensionError);
  CHECK_THROWS_AS(apply_string(family, IndexVector{{3}}, x), DimensionError);
}

TEST_CASE("apply_string equals a manual composition on random halfspaces") {
  Rng rng(31337);
  ConstraintFamily family =
      random_halfspace_family(rng, 2, 3, vec2(0, 0), 0.5);
  const Vector x = vec2(4, -3);
  const Vector via_string = apply_string(family, IndexVector{{2, 1, 3}}, x);
  const Vector manual =
      project(family.set(3), project(family.set(1), project(family.set(2), x)));
  CHECK((via_string - manual).norm() == 0.0);
}

TEST_CASE("dsap_step averages string endpoints") {
  ConstraintFamily family = axis_planes();
  BasicAlgorithm algo = BasicAlgorithm::cimmino(family);

  StringPlan averaging({IndexVector{{1}}, IndexVector{{2}}}, {0.5, 0.5});
  CHECK(veq(dsap_step(algo, averaging, vec2(1, 1)), vec2(0.5, 0.5)));

  StringPlan sequential({IndexVector{{1, 2}}}, {1.0});
  CHECK(veq(dsap_step(algo, sequential, vec2(1, 1)), vec2(0, 0)));

  // feasible points are fixed
  CHECK(veq(dsap_step(algo, averaging, vec2(0, 0)), vec2(0, 0)));

  StringPlan unfit({IndexVector{{1}}}, {1.0});
  CHECK_THROWS_AS(dsap_step(algo, unfit, vec2(1, 1)), PlanError);
}

TEST_CASE("kaczmarz emits the single full string") {
  ConstraintFamily family = axis_planes();
  BasicAlgorithm algo = BasicAlgorithm::kaczmarz(family);
  StringPlan plan = algo.plan_for_iteration(0);
  REQUIRE(plan.strings().size() == 1);
  CHECK(plan.strings()[0].indices == std::vector<int>{1, 2});
  CHECK(plan.weights()[0] == 1.0);

  // one step equals the string operator
  CHECK(veq(dsap_step(algo, plan, vec2(1, 1)),
            apply_string(family, plan.strings()[0], vec2(1, 1))));
  CHECK(veq(dsap_step(algo, plan, vec2(1, 1)), vec2(0, 0)));
}

TEST_CASE("cimmino emits singleton strings with equal weights") {
  ConstraintFamily family = axis_planes();
  BasicAlgorithm algo = BasicAlgorithm::cimmino(family);
  StringPlan plan = algo.plan_for_iteration(5);
  REQUIRE(plan.strings().size() == 2);
  CHECK(plan.strings()[0].indices == std::vector<int>{1});
  CHECK(plan.strings()[1].indices == std::vector<int>{2});
  CHECK(plan.weights()[0] == 0.5);
  CHECK(plan.weights()[1] == 0.5);
  CHECK(veq(dsap_step(algo, plan, vec2(1, 1)), vec2(0.5, 0.5)));
}

TEST_CASE("kaczmarz and cimmino coincide for a single constraint") {
  std::vector<ConstraintSet> sets;
  sets.emplace_back(Halfspace{vec2(1, 0), 0.0});
  ConstraintFamily family(std::move(sets));
  BasicAlgorithm k = BasicAlgorithm::kaczmarz(family);
  BasicAlgorithm c = BasicAlgorithm::cimmino(family);
  const Vector x = vec2(2, 1);
  CHECK(veq(dsap_step(k, k.plan_for_iteration(0), x),
            dsap_step(c, c.plan_for_iteration(0), x)));
}

TEST_CASE("run_basic stops per the rule") {
  Rng rng(902);
  ConstraintFamily family = random_halfspace_family(rng, 3, 4,
                                                    Vector::Zero(3), 1.0);
  BasicAlgorithm algo = BasicAlgorithm::kaczmarz(family);

  Vector x0(3);
  x0 << 5, -4, 3;
  StopRule stop{100000, 1e-8};
  IterateTrace trace = run_basic(algo, x0, stop);
  CHECK(trace.stop_reason == StopReason::EpsilonReached);
  CHECK(trace.back().prox <= 1e-8);

  // a feasible start is already an epsilon-output
  IterateTrace trivial = run_basic(algo, Vector::Zero(3), stop);
  CHECK(trivial.size() == 1);
  CHECK(trivial.stop_reason == StopReason::EpsilonReached);

  CHECK_THROWS_AS(run_basic(algo, x0, StopRule{}), ConfigError);
}

TEST_CASE("run_basic on parallel hyperplanes oscillates above the floor") {
  std::vector<ConstraintSet> sets;
  sets.emplace_back(Hyperplane{vec2(1, 0), 0.0});
  sets.emplace_back(Hyperplane{vec2(1, 0), 1.0});
  ConstraintFamily family(std::move(sets));
  BasicAlgorithm algo = BasicAlgorithm::kaczmarz(family);

  const Vector x0 = vec2(0.3, 0.7);
  IterateTrace trace = run_basic(algo, x0, StopRule{1000, 1e-6});
  CHECK(trace.stop_reason == StopReason::MaxIterations);
  CHECK(trace.size() == 1001);

  // brute-force simulation of the same cyclic process
  Vector x = x0;
  for (long k = 0; k < 1000; ++k) {
    x = project(family.set(2), project(family.set(1), x));
    const auto& rec = trace.records[static_cast<std::size_t>(k + 1)];
    REQUIRE((rec.point - x).norm() == 0.0);
  }
  for (const auto& rec : trace.records) {
    REQUIRE(rec.prox >= 0.125);
  }
}

TEST_CASE("dsap with the kaczmarz plan matches a hand-rolled cyclic loop") {
  Rng rng(1812);
  for (int instance = 0; instance < 10; ++instance) {
    const int n = 4;
    const int m = 5;
    Vector center = rng.gaussian_vector(n);
    ConstraintFamily family =
        random_halfspace_family(rng, n, m, center, 1.0);
    BasicAlgorithm algo = BasicAlgorithm::kaczmarz(family);

    Vector x0 = 4.0 * rng.gaussian_vector(n);
    IterateTrace trace = run_basic(algo, x0, StopRule{60, std::nullopt});

    Vector x = x0;
    for (long k = 0; k < 60; ++k) {
      for (int i = 1; i <= m; ++i) x = project(family.set(i), x);
      const auto& rec = trace.records[static_cast<std::size_t>(k + 1)];
      REQUIRE((rec.point - x).norm() <= 1e-12);
    }
  }
}

TEST_CASE("dsap with singleton plans matches a hand-rolled averaging loop") {
  Rng rng(1848);
  for (int instance = 0; instance < 10; ++instance) {
    const int n = 4;
    const int m = 5;
    Vector center = rng.gaussian_vector(n);
    ConstraintFamily family =
        random_halfspace_family(rng, n, m, center, 1.0);
    BasicAlgorithm algo = BasicAlgorithm::cimmino(family);

    Vector x0 = 4.0 * rng.gaussian_vector(n);
    IterateTrace trace = run_basic(algo, x0, StopRule{60, std::nullopt});

    Vector x = x0;
    for (long k = 0; k < 60; ++k) {
      Vector sum = Vector::Zero(n);
      for (int i = 1; i <= m; ++i) sum += project(family.set(i), x);
      x = sum / static_cast<double>(m);
      const auto& rec = trace.records[static_cast<std::size_t>(k + 1)];
      REQUIRE((rec.point - x).norm() <= 1e-12);
    }
  }
}

TEST_CASE("unperturbed runs are Fejer monotone toward feasible points") {
  Rng rng(6174);
  for (int instance = 0; instance < 20; ++instance) {
    const int n = 5;
    Vector center = rng.gaussian_vector(n);
    ConstraintFamily family =
        random_halfspace_family(rng, n, 6, center, 0.5);
    BasicAlgorithm algo = (instance % 2 == 0)
                              ? BasicAlgorithm::kaczmarz(family)
                              : BasicAlgorithm::cimmino(family);
    IterateTrace trace =
        run_basic(algo, 4.0 * rng.gaussian_vector(n), StopRule{200, 1e-12});
    for (std::size_t i = 1; i < trace.records.size(); ++i) {
      const double prev = (trace.records[i - 1].point - center).norm();
      const double cur = (trace.records[i].point - center).norm();
      REQUIRE(cur <= prev + 1e-10);
    }
  }
}

TEST_CASE("convergence smoke across plan strategies") {
  int converged = 0;
  for (int instance = 0; instance < 100; ++instance) {
    Rng rng(derive_seed(555, static_cast<std::uint64_t>(instance)));
    const int n = 20;
    const int m = 10;
    Vector center = rng.gaussian_vector(n);
    ConstraintFamily family =
        random_halfspace_family(rng, n, m, center, 1.0);
    const Vector x0 = 5.0 * rng.gaussian_vector(n);
    const StopRule stop{5000, 1e-6};

    for (int variant = 0; variant < 3; ++variant) {
      BasicAlgorithm algo =
          variant == 0 ? BasicAlgorithm::kaczmarz(family)
          : variant == 1
              ? BasicAlgorithm::cimmino(family)
              : BasicAlgorithm::seeded_random(
                    family, 0.25 / m, 2 * m,
                    derive_seed(99, static_cast<std::uint64_t>(instance)));
      IterateTrace trace = run_basic(algo, x0, stop);
      REQUIRE(trace.stop_reason == StopReason::EpsilonReached);
    }
    converged += 1;
  }
  CHECK(converged == 100);
}

TEST_CASE("seeded random plans satisfy fitness and bounds at every iteration") {
  Rng rng(2718);
  ConstraintFamily family =
      random_halfspace_family(rng, 6, 7, Vector::Zero(6), 1.0);
  const double delta = 0.1 / 7.0;
  BasicAlgorithm algo = BasicAlgorithm::seeded_random(family, delta, 14, 42);
  for (long k = 0; k < 500; ++k) {
    StringPlan plan = algo.plan_for_iteration(k);
    REQUIRE(plan.is_fit(7));
    REQUIRE(satisfies(plan, algo.bounds()));
  }
  // deterministic in (k, seed)
  BasicAlgorithm again = BasicAlgorithm::seeded_random(family, delta, 14, 42);
  for (long k = 0; k < 20; ++k) {
    StringPlan a = algo.plan_for_iteration(k);
    StringPlan b = again.plan_for_iteration(k);
    REQUIRE(a.weights() == b.weights());
    REQUIRE(a.strings().size() == b.strings().size());
    for (std::size_t s = 0; s < a.strings().size(); ++s) {
      REQUIRE(a.strings()[s].indices == b.strings()[s].indices);
    }
  }
}
