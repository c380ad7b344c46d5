// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "superior/constraints.hpp"
#include "superior/eval.hpp"
#include "superior/problems.hpp"
#include "superior/trace.hpp"

namespace superior {

/// Trace CSV: header `k,prox,phi,beta_consumed`, one row per record, numbers
/// as decimal text with 17 significant digits.
void write_trace_csv(const IterateTrace& trace, std::ostream& os);
std::string trace_csv(const IterateTrace& trace);

/// Point vectors of a trace plus run metadata, as a JSON document:
/// {"fingerprint", "seed", "stop_reason", "points": [[...], ...]}.
std::string trace_points_json(const IterateTrace& trace);

/// Curve CSV: header `prox,phi`, vertices in order.
void write_curve_csv(const ProximityTargetCurve& curve, std::ostream& os);
std::string curve_csv(const ProximityTargetCurve& curve);

/// {"verdict": ..., "t": ..., "u": ..., "witness": ...}
std::string comparison_json(const CurveComparison& cmp);

/// Constraint-family JSON:
/// {"dim": n, "sets": [{"kind": "halfspace", "a": [...], "b": ...}, ...],
///  "ambient": null | {"lower": [...], "upper": [...]}}.
std::string family_json(const ConstraintFamily& family);
ConstraintFamily family_from_json(const std::string& text);

/// A problem document is a family plus the optional witness and shared
/// initialization point, stored under "witness"/"x0" next to the family
/// keys.
struct ProblemDocument {
  ConstraintFamily family;
  std::optional<Vector> witness;
  std::optional<Vector> x0;
};

std::string problem_json(const ProblemDocument& doc);
ProblemDocument problem_from_json(const std::string& text);

/// FejerReport JSON: reference, first_monotone_index (null when absent) and
/// the violation list.
std::string fejer_json(const FejerReport& report);

std::string read_file(const std::string& path);

/// Writes via a temp file in the same directory plus an atomic rename, so
/// concurrent writers never expose partial files.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace superior
