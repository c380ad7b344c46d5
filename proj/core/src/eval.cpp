// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/eval.hpp"

#include <algorithm>
#include <cmath>

#include "superior/errors.hpp"

namespace superior {

std::optional<EpsilonOutput> epsilon_output(const IterateTrace& trace,
                                            double eps) {
  if (!(eps > 0.0)) {
    throw ConfigError("epsilon must be positive");
  }
  for (const auto& rec : trace.records) {
    if (rec.prox <= eps) {
      return EpsilonOutput{rec.k, rec.point};
    }
  }
  return std::nullopt;
}

std::vector<long> monotone_subsequence(const IterateTrace& trace) {
  if (trace.records.empty()) {
    throw ConfigError("trace must be nonempty");
  }
  std::vector<long> indices{0};
  double best = trace.records.front().prox;
  for (long k = 1; k < trace.size(); ++k) {
    const double p = trace.records[static_cast<std::size_t>(k)].prox;
    if (p < best) {
      indices.push_back(k);
      best = p;
    }
  }
  return indices;
}

ProximityTargetCurve::ProximityTargetCurve(std::vector<CurveVertex> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw ConfigError("curve needs at least one vertex");
  }
  for (const auto& v : vertices_) {
    if (!std::isfinite(v.prox) || !std::isfinite(v.phi)) {
      throw ConfigError("curve vertices must be finite");
    }
  }
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!(vertices_[i].prox < vertices_[i - 1].prox)) {
      throw ConfigError("curve abscissae must strictly decrease");
    }
  }
}

double ProximityTargetCurve::value_at(double h) const {
  if (h > max_prox() || h < min_prox()) {
    throw ConfigError("query point outside the curve's proximity range");
  }
  if (vertices_.size() == 1 || h == max_prox()) return vertices_.front().phi;
  // vertices run from large prox to small
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const auto& hi = vertices_[i - 1];
    const auto& lo = vertices_[i];
    if (h >= lo.prox) {
      if (hi.prox == lo.prox) return lo.phi;
      const double w = (h - lo.prox) / (hi.prox - lo.prox);
      return lo.phi + w * (hi.phi - lo.phi);
    }
  }
  return vertices_.back().phi;
}

ProximityTargetCurve build_curve(const IterateTrace& trace, long lo, long hi) {
  if (lo < 0 || hi >= trace.size() || lo > hi) {
    throw ConfigError("curve range outside the trace");
  }
  std::vector<CurveVertex> vertices;
  vertices.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long k = lo; k <= hi; ++k) {
    const auto& rec = trace.records[static_cast<std::size_t>(k)];
    if (k > lo && !(rec.prox < vertices.back().prox)) {
      throw ConfigError("sub-trace is not of monotone proximity");
    }
    vertices.push_back({rec.prox, rec.phi});
  }
  return ProximityTargetCurve(std::move(vertices));
}

ProximityTargetCurve curve_from_indices(const IterateTrace& trace,
                                        const std::vector<long>& indices) {
  std::vector<CurveVertex> vertices;
  vertices.reserve(indices.size());
  for (long k : indices) {
    if (k < 0 || k >= trace.size()) {
      throw ConfigError("curve index outside the trace");
    }
    const auto& rec = trace.records[static_cast<std::size_t>(k)];
    vertices.push_back({rec.prox, rec.phi});
  }
  return ProximityTargetCurve(std::move(vertices));
}

std::string to_string(CurveVerdict verdict) {
  switch (verdict) {
    case CurveVerdict::RBetter:
      return "R_better";
    case CurveVerdict::SBetter:
      return "S_better";
    case CurveVerdict::Crossing:
      return "crossing";
    case CurveVerdict::Incomparable:
      return "incomparable";
  }
  return "unknown";
}

CurveComparison better_targeted(const ProximityTargetCurve& r,
                                const ProximityTargetCurve& s, int samples) {
  if (samples < 2) {
    throw ConfigError("comparison needs at least two sample points");
  }
  CurveComparison out;
  out.t = std::max(r.min_prox(), s.min_prox());
  out.u = std::min(r.max_prox(), s.max_prox());
  if (out.t > out.u) {
    out.verdict = CurveVerdict::Incomparable;
    return out;
  }

  // Evaluation abscissae: the fill grid plus both curves' vertices in range.
  // Between consecutive abscissae both curves are linear, so this decides
  // the pointwise order everywhere on [t, u].
  std::vector<double> hs;
  hs.reserve(static_cast<std::size_t>(samples) + r.vertices().size() +
             s.vertices().size());
  for (int i = 0; i < samples; ++i) {
    const double w = static_cast<double>(i) / static_cast<double>(samples - 1);
    // clamp: the fill arithmetic may overshoot the interval by one ulp
    hs.push_back(std::min(std::max(out.t + w * (out.u - out.t), out.t), out.u));
  }
  for (const auto& v : r.vertices()) {
    if (v.prox >= out.t && v.prox <= out.u) hs.push_back(v.prox);
  }
  for (const auto& v : s.vertices()) {
    if (v.prox >= out.t && v.prox <= out.u) hs.push_back(v.prox);
  }
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

  constexpr double kTie = 1e-12;
  bool r_le = true;
  bool s_le = true;
  std::vector<double> diffs(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double v = r.value_at(hs[i]);
    const double w = s.value_at(hs[i]);
    diffs[i] = v - w;
    if (v > w + kTie) r_le = false;
    if (w > v + kTie) s_le = false;
  }
  if (r_le) {
    out.verdict = CurveVerdict::RBetter;
    return out;
  }
  if (s_le) {
    out.verdict = CurveVerdict::SBetter;
    return out;
  }

  out.verdict = CurveVerdict::Crossing;
  // Witness: first sign change of the piecewise-linear difference, located
  // exactly on the bracketing segment.
  for (std::size_t i = 1; i < diffs.size(); ++i) {
    if (diffs[i - 1] == 0.0) {
      out.witness = hs[i - 1];
      break;
    }
    if (diffs[i - 1] * diffs[i] < 0.0) {
      const double span = diffs[i] - diffs[i - 1];
      out.witness = hs[i - 1] + (hs[i] - hs[i - 1]) * (-diffs[i - 1] / span);
      break;
    }
  }
  return out;
}

FejerReport fejer_monitor(const IterateTrace& trace, const Vector& reference,
                          double tolerance) {
  if (trace.records.empty()) {
    throw ConfigError("trace must be nonempty");
  }
  if (reference.size() != trace.records.front().point.size()) {
    throw DimensionError("reference dimension does not match the trace");
  }
  FejerReport report;
  report.reference = reference;

  std::vector<double> dist(trace.records.size());
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    dist[i] = (trace.records[i].point - reference).norm();
  }
  for (std::size_t i = 0; i + 1 < dist.size(); ++i) {
    const double increase = dist[i + 1] - dist[i];
    if (increase > tolerance) {
      report.violations.emplace_back(static_cast<long>(i), increase);
    }
  }
  if (report.violations.empty()) {
    report.first_monotone_index = 0;
  } else {
    const long last = report.violations.back().first;
    // A violation on the final transition means monotonicity was never
    // re-established.
    if (last + 2 < static_cast<long>(dist.size())) {
      report.first_monotone_index = last + 1;
    }
  }
  return report;
}

}  // namespace superior
