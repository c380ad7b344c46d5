// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include <benchmark/benchmark.h>

#include "superior/constraints.hpp"
#include "superior/rng.hpp"
#include "superior/strings.hpp"
#include "superior/superiorize.hpp"

namespace {

using namespace superior;

ConstraintFamily make_family(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  const Vector center = 2.0 * rng.gaussian_vector(n);
  std::vector<ConstraintSet> sets;
  for (int i = 0; i < m; ++i) {
    Vector a = rng.unit_vector(n);
    sets.emplace_back(Halfspace{a, a.dot(center) + 1.0});
  }
  return ConstraintFamily(std::move(sets));
}

void BM_ProjectHalfspace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  Vector a = rng.unit_vector(n);
  ConstraintSet set(Halfspace{a, 0.0});
  const Vector x = 3.0 * rng.gaussian_vector(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(project(set, x));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ProjectHalfspace)->Arg(8)->Arg(64)->Arg(512);

void BM_ProjectBall(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  ConstraintSet set(Ball{rng.gaussian_vector(n), 1.0});
  const Vector x = 5.0 * rng.gaussian_vector(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(project(set, x));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ProjectBall)->Arg(8)->Arg(64)->Arg(512);

void BM_Proximity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ConstraintFamily family = make_family(n, 30, 3);
  Rng rng(4);
  const Vector x = 5.0 * rng.gaussian_vector(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(proximity(family, x));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Proximity)->Arg(16)->Arg(64)->Arg(256);

void BM_DsapStepKaczmarz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ConstraintFamily family = make_family(n, 30, 5);
  BasicAlgorithm algo = BasicAlgorithm::kaczmarz(family);
  const StringPlan plan = algo.plan_for_iteration(0);
  Rng rng(6);
  const Vector x = 5.0 * rng.gaussian_vector(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsap_step(algo, plan, x));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DsapStepKaczmarz)->Arg(16)->Arg(64)->Arg(256);

void BM_DsapStepCimmino(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ConstraintFamily family = make_family(n, 30, 5);
  BasicAlgorithm algo = BasicAlgorithm::cimmino(family);
  const StringPlan plan = algo.plan_for_iteration(0);
  Rng rng(6);
  const Vector x = 5.0 * rng.gaussian_vector(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsap_step(algo, plan, x));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DsapStepCimmino)->Arg(16)->Arg(64)->Arg(256);

void BM_RandomPlanGeneration(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  ConstraintFamily family = make_family(8, m, 7);
  BasicAlgorithm algo = BasicAlgorithm::seeded_random(
      family, 0.25 / static_cast<double>(m), 2 * m, 11);
  long k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(algo.plan_for_iteration(k++));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RandomPlanGeneration)->Arg(10)->Arg(100);

void BM_WeakStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ConstraintFamily family = make_family(n, 30, 8);
  BasicAlgorithm algo = BasicAlgorithm::cimmino(family);
  Objective sq((SquaredNorm()));
  SuperiorizerConfig cfg;
  cfg.perturbations = 5;
  cfg.schedule = Schedule::geometric(0.5);
  Rng rng(9);
  const Vector y = 5.0 * rng.gaussian_vector(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weak_step(algo, sq, cfg, y, cfg.schedule));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_WeakStep)->Arg(16)->Arg(64);

void BM_StrongStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ConstraintFamily family = make_family(n, 30, 8);
  BasicAlgorithm algo = BasicAlgorithm::cimmino(family);
  Objective sq((SquaredNorm()));
  SuperiorizerConfig cfg;
  cfg.mode = SuperiorizationMode::Strong;
  cfg.perturbations = 5;
  cfg.schedule = Schedule::geometric(0.5);
  Rng rng(10);
  const Vector y = 5.0 * rng.gaussian_vector(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(strong_step(algo, sq, cfg, y, cfg.schedule));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StrongStep)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
