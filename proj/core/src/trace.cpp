// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/trace.hpp"

namespace superior {

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::EpsilonReached:
      return "epsilon_reached";
    case StopReason::MaxIterations:
      return "max_iterations";
  }
  return "unknown";
}

}  // namespace superior
