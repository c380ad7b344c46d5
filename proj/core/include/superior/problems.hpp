// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "superior/constraints.hpp"
#include "superior/types.hpp"

namespace superior {

/// `count` halfspaces all containing the ball of radius
/// `feasible_ball_radius` around a random center; the center is the recorded
/// witness. Always consistent.
struct RandomHalfspaces {
  int dim = 2;
  int count = 1;
  double feasible_ball_radius = 1.0;
  std::uint64_t seed = 0;
};

/// `count` hyperplanes. Consistent instances pass every hyperplane through a
/// random witness. Inconsistent instances keep the witness construction for
/// all but the last hyperplane, which is made parallel to the first at unit
/// offset, so no common point exists; they carry no witness.
struct RandomHyperplanes {
  int dim = 2;
  int count = 1;
  std::uint64_t seed = 0;
  bool consistent = true;
};

/// A sparse-row hyperplane system: each row has about density*dim nonzero
/// gaussian entries (at least one). Right-hand sides are taken from a random
/// witness, so the system is consistent.
struct SparseSystem {
  int dim = 2;
  int count = 1;
  double density = 0.1;
  std::uint64_t seed = 0;
};

/// A serialized explicit family, e.g. loaded from a problem document. The
/// initialization point is mandatory here since there is no seed to derive
/// one from.
struct ExplicitProblem {
  ConstraintFamily family;
  std::optional<Vector> witness;
  Vector x0;
};

using ProblemSpec = std::variant<RandomHalfspaces, RandomHyperplanes,
                                 SparseSystem, ExplicitProblem>;

/// A generated instance. `witness` (present for consistent generators) has
/// proximity zero in the family. `x0` is the shared initialization point all
/// runs on this instance use; it is drawn from its own substream of the
/// instance seed.
struct GeneratedProblem {
  ConstraintFamily family;
  std::optional<Vector> witness;
  Vector x0;
};

/// Deterministic in the spec's seed: equal specs generate identical
/// instances.
GeneratedProblem generate(const ProblemSpec& spec);

/// The spec with its seed replaced by the replicate substream
/// derive_seed(seed, replicate). Used by experiments so every arm of a
/// replicate sees the same instance. Explicit problems have no seed and
/// pass through unchanged.
ProblemSpec reseed_for_replicate(const ProblemSpec& spec, int replicate);

}  // namespace superior
