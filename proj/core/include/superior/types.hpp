// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>

namespace superior {

/// Dense real vector used throughout the library. Iterates, constraint
/// normals, directions and witnesses are all plain finite-dimensional
/// vectors of doubles.
using Vector = Eigen::VectorXd;

using Matrix = Eigen::MatrixXd;

}  // namespace superior
