// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>

#include "superior/types.hpp"

namespace superior {

/// Minimal deterministic generator (SplitMix64 core). The standard <random>
/// distributions are implementation-defined, which would break the
/// byte-identical-output contract of seeded runs, so the few distributions
/// needed here are spelled out explicitly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [lo, hi], inclusive.
  long uniform_int(long lo, long hi);

  /// Standard normal via Box-Muller (two uniforms per draw, no cached spare).
  double gaussian();

  Vector gaussian_vector(int n);

  /// Uniform direction on the unit sphere in R^n.
  Vector unit_vector(int n);

 private:
  std::uint64_t state_;
};

/// Fixed stream-derivation rule: mixes `index` into `seed` through one
/// SplitMix64 round. Substreams (per replicate, per trial, per purpose) are
/// always derived through this function so that adding consumers never
/// perturbs existing streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace superior
