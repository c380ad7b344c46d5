// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/errors.hpp"

namespace superior {

PerturbationStall::PerturbationStall(long k_, long n_, long ell_)
    : Error("perturbation acceptance stalled at outer iteration " +
            std::to_string(k_) + ", perturbation " + std::to_string(n_) +
            ", step-size counter " + std::to_string(ell_)),
      k(k_),
      n(n_),
      ell(ell_) {}

}  // namespace superior
