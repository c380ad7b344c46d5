// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "superior/errors.hpp"
#include "superior/rng.hpp"

namespace superior {

namespace {

// Substream tags. Drawing each ingredient from its own stream keeps
// generated instances stable when one ingredient's consumption changes.
constexpr std::uint64_t kStreamNormals = 1;
constexpr std::uint64_t kStreamWitness = 2;
constexpr std::uint64_t kStreamX0 = 3;
constexpr std::uint64_t kStreamStructure = 4;

void check_common(int dim, int count) {
  if (dim < 1) throw ConfigError("generator dim must be at least 1");
  if (count < 1) throw ConfigError("generator needs at least one constraint");
}

Vector draw_x0(std::uint64_t seed, int dim) {
  Rng rng(derive_seed(seed, kStreamX0));
  return 5.0 * rng.gaussian_vector(dim);
}

GeneratedProblem make_halfspaces(const RandomHalfspaces& spec) {
  check_common(spec.dim, spec.count);
  if (!(spec.feasible_ball_radius > 0.0)) {
    throw ConfigError("feasible ball radius must be positive");
  }
  Rng center_rng(derive_seed(spec.seed, kStreamWitness));
  const Vector center = 2.0 * center_rng.gaussian_vector(spec.dim);

  Rng normal_rng(derive_seed(spec.seed, kStreamNormals));
  std::vector<ConstraintSet> sets;
  sets.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    Vector a = normal_rng.unit_vector(spec.dim);
    // a.c + radius keeps the whole ball on the feasible side
    const double b = a.dot(center) + spec.feasible_ball_radius;
    sets.emplace_back(Halfspace{std::move(a), b});
  }
  return GeneratedProblem{ConstraintFamily(std::move(sets)), center,
                          draw_x0(spec.seed, spec.dim)};
}

GeneratedProblem make_hyperplanes(const RandomHyperplanes& spec) {
  check_common(spec.dim, spec.count);
  if (!spec.consistent && spec.count < 2) {
    throw ConfigError("inconsistent construction needs at least 2 hyperplanes");
  }
  Rng witness_rng(derive_seed(spec.seed, kStreamWitness));
  const Vector witness = 2.0 * witness_rng.gaussian_vector(spec.dim);

  Rng normal_rng(derive_seed(spec.seed, kStreamNormals));
  std::vector<ConstraintSet> sets;
  sets.reserve(static_cast<std::size_t>(spec.count));
  Vector first_normal;
  double first_offset = 0.0;
  for (int i = 0; i < spec.count; ++i) {
    if (!spec.consistent && i == spec.count - 1) {
      // parallel to the first hyperplane, shifted by one unit of its normal
      sets.emplace_back(Hyperplane{first_normal, first_offset + 1.0});
      continue;
    }
    Vector a = normal_rng.unit_vector(spec.dim);
    const double b = a.dot(witness);
    if (i == 0) {
      first_normal = a;
      first_offset = b;
    }
    sets.emplace_back(Hyperplane{std::move(a), b});
  }
  std::optional<Vector> w;
  if (spec.consistent) w = witness;
  return GeneratedProblem{ConstraintFamily(std::move(sets)), std::move(w),
                          draw_x0(spec.seed, spec.dim)};
}

GeneratedProblem make_sparse(const SparseSystem& spec) {
  check_common(spec.dim, spec.count);
  if (!(spec.density > 0.0) || spec.density > 1.0) {
    throw ConfigError("density must lie in (0, 1]");
  }
  Rng witness_rng(derive_seed(spec.seed, kStreamWitness));
  const Vector witness = 2.0 * witness_rng.gaussian_vector(spec.dim);

  Rng value_rng(derive_seed(spec.seed, kStreamNormals));
  Rng structure_rng(derive_seed(spec.seed, kStreamStructure));
  const int nnz = std::max(
      1, static_cast<int>(std::lround(spec.density * spec.dim)));

  std::vector<int> order(static_cast<std::size_t>(spec.dim));
  std::vector<ConstraintSet> sets;
  sets.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    std::iota(order.begin(), order.end(), 0);
    for (int j = 0; j < nnz; ++j) {
      const long pick = structure_rng.uniform_int(j, spec.dim - 1);
      std::swap(order[static_cast<std::size_t>(j)],
                order[static_cast<std::size_t>(pick)]);
    }
    Vector a = Vector::Zero(spec.dim);
    for (int j = 0; j < nnz; ++j) {
      a[order[static_cast<std::size_t>(j)]] = value_rng.gaussian();
    }
    if (a.norm() == 0.0) a[order[0]] = 1.0;
    const double b = a.dot(witness);
    sets.emplace_back(Hyperplane{std::move(a), b});
  }
  return GeneratedProblem{ConstraintFamily(std::move(sets)), witness,
                          draw_x0(spec.seed, spec.dim)};
}

}  // namespace

GeneratedProblem generate(const ProblemSpec& spec) {
  return std::visit(
      [](const auto& s) -> GeneratedProblem {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RandomHalfspaces>) {
          return make_halfspaces(s);
        } else if constexpr (std::is_same_v<T, RandomHyperplanes>) {
          return make_hyperplanes(s);
        } else if constexpr (std::is_same_v<T, SparseSystem>) {
          return make_sparse(s);
        } else {
          if (s.x0.size() != s.family.dim()) {
            throw DimensionError(
                "explicit problem x0 does not match the family dimension");
          }
          return GeneratedProblem{s.family, s.witness, s.x0};
        }
      },
      spec);
}

ProblemSpec reseed_for_replicate(const ProblemSpec& spec, int replicate) {
  ProblemSpec out = spec;
  std::visit(
      [replicate](auto& s) {
        if constexpr (requires { s.seed; }) {
          s.seed = derive_seed(s.seed, static_cast<std::uint64_t>(replicate));
        }
      },
      out);
  return out;
}

}  // namespace superior
