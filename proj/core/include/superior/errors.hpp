// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace superior {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimensions (vector vs. set, set vs. family, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction parameters or malformed configuration input. The
/// message names the offending field or argument.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A string plan violating fitness, the weight-sum contract, or its declared
/// bounds.
class PlanError : public Error {
 public:
  using Error::Error;
};

/// Objective cannot provide subgradients; callers should switch to the
/// derivative-free direction search.
class SubgradientUnavailable : public Error {
 public:
  using Error::Error;
};

/// The strong-mode inner acceptance loop exhausted its trial budget at outer
/// iteration `k`, perturbation index `n`, with the step-size counter at `ell`.
class PerturbationStall : public Error {
 public:
  PerturbationStall(long k, long n, long ell);

  long k;
  long n;
  long ell;
};

}  // namespace superior
