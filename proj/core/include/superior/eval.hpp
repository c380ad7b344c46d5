// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superior/trace.hpp"
#include "superior/types.hpp"

namespace superior {

struct EpsilonOutput {
  long k = 0;
  Vector point;
};

/// The unique first iterate whose proximity is at most eps (all earlier
/// iterates lie strictly above eps). Absent when no iterate qualifies.
/// Throws ConfigError for eps <= 0.
std::optional<EpsilonOutput> epsilon_output(const IterateTrace& trace,
                                            double eps);

/// Indices of the running-strict-minimum proximity subsequence: index 0,
/// then every k whose proximity is strictly below everything retained so
/// far. The extracted subsequence has monotone proximity.
std::vector<long> monotone_subsequence(const IterateTrace& trace);

struct CurveVertex {
  double prox = 0.0;
  double phi = 0.0;
};

/// The piecewise-linear curve through (proximity, objective) vertices of a
/// monotone-proximity sequence. Vertices are kept in trace order, so their
/// proximity abscissae strictly decrease; the constructor enforces this.
class ProximityTargetCurve {
 public:
  explicit ProximityTargetCurve(std::vector<CurveVertex> vertices);

  const std::vector<CurveVertex>& vertices() const { return vertices_; }

  /// Smallest (last) and largest (first) proximity abscissae.
  double min_prox() const { return vertices_.back().prox; }
  double max_prox() const { return vertices_.front().prox; }

  /// Linear interpolation at proximity h in [min_prox, max_prox].
  double value_at(double h) const;

 private:
  std::vector<CurveVertex> vertices_;
};

/// Curve of the contiguous sub-trace [lo, hi] (inclusive record indices).
/// Throws ConfigError when the sub-trace is not of monotone proximity;
/// callers typically extract a monotone subsequence first.
ProximityTargetCurve build_curve(const IterateTrace& trace, long lo, long hi);

/// Curve through the given record indices (e.g. a monotone_subsequence
/// result).
ProximityTargetCurve curve_from_indices(const IterateTrace& trace,
                                        const std::vector<long>& indices);

enum class CurveVerdict { RBetter, SBetter, Crossing, Incomparable };

std::string to_string(CurveVerdict verdict);

struct CurveComparison {
  CurveVerdict verdict = CurveVerdict::Incomparable;
  /// Shared proximity interval [t, u]; t > u means no overlap.
  double t = 0.0;
  double u = 0.0;
  /// For a crossing: a proximity value where the order of the curves flips.
  std::optional<double> witness;
};

/// Compares two curves over their shared proximity interval
/// [t, u] = [max of the low ends, min of the high ends]. R wins when its
/// value is <= the other's (within 1e-12) at every evaluation point; the
/// points are `samples` evenly spaced abscissae plus every vertex abscissa
/// of either curve in range, which decides piecewise-linear curves exactly.
/// Identical curves compare as RBetter by the <= convention.
CurveComparison better_targeted(const ProximityTargetCurve& r,
                                const ProximityTargetCurve& s,
                                int samples = 64);

struct FejerReport {
  Vector reference;
  /// Smallest index from which distances to the reference never increase
  /// beyond tolerance; absent when violations persist to the end of the
  /// trace.
  std::optional<long> first_monotone_index;
  /// (k, amount) for each transition with dist(k+1) > dist(k) + tolerance.
  std::vector<std::pair<long, double>> violations;
};

/// Monitors ||y^k - reference|| along the trace for monotone decrease.
FejerReport fejer_monitor(const IterateTrace& trace, const Vector& reference,
                          double tolerance);

}  // namespace superior
