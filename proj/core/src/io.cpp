// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "superior/errors.hpp"

namespace superior {

namespace {

using nlohmann::json;

// 17 significant digits round-trip any double exactly.
std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vector vector_from_json(const json& arr, const std::string& field) {
  if (!arr.is_array() || arr.empty()) {
    throw ConfigError("field '" + field + "' must be a nonempty array");
  }
  Vector v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      throw ConfigError("field '" + field + "' must contain numbers");
    }
    v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
  }
  return v;
}

json set_to_json(const ConstraintSet& set) {
  json j;
  std::visit(
      [&j](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          j["kind"] = "halfspace";
          j["a"] = vector_to_json(k.a);
          j["b"] = k.b;
        } else if constexpr (std::is_same_v<T, Hyperplane>) {
          j["kind"] = "hyperplane";
          j["a"] = vector_to_json(k.a);
          j["b"] = k.b;
        } else if constexpr (std::is_same_v<T, Ball>) {
          j["kind"] = "ball";
          j["center"] = vector_to_json(k.center);
          j["radius"] = k.radius;
        } else {
          j["kind"] = "box";
          j["lower"] = vector_to_json(k.lower);
          j["upper"] = vector_to_json(k.upper);
        }
      },
      set.kind());
  return j;
}

ConstraintSet set_from_json(const json& j, const std::string& where) {
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ConfigError("field '" + where + ".kind' is required");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "halfspace" || kind == "hyperplane") {
    if (!j.contains("a") || !j.contains("b") || !j["b"].is_number()) {
      throw ConfigError("field '" + where + "' needs 'a' and numeric 'b'");
    }
    Vector a = vector_from_json(j["a"], where + ".a");
    if (kind == "halfspace") {
      return ConstraintSet(Halfspace{std::move(a), j["b"].get<double>()});
    }
    return ConstraintSet(Hyperplane{std::move(a), j["b"].get<double>()});
  }
  if (kind == "ball") {
    if (!j.contains("center") || !j.contains("radius") ||
        !j["radius"].is_number()) {
      throw ConfigError("field '" + where + "' needs 'center' and 'radius'");
    }
    return ConstraintSet(Ball{vector_from_json(j["center"], where + ".center"),
                              j["radius"].get<double>()});
  }
  if (kind == "box") {
    if (!j.contains("lower") || !j.contains("upper")) {
      throw ConfigError("field '" + where + "' needs 'lower' and 'upper'");
    }
    return ConstraintSet(Box{vector_from_json(j["lower"], where + ".lower"),
                             vector_from_json(j["upper"], where + ".upper")});
  }
  throw ConfigError("field '" + where + ".kind' has unknown value '" + kind +
                    "'");
}

json family_to_json_obj(const ConstraintFamily& family) {
  json j;
  j["dim"] = family.dim();
  j["sets"] = json::array();
  for (const auto& s : family.sets()) j["sets"].push_back(set_to_json(s));
  if (family.ambient()) {
    j["ambient"] = {{"lower", vector_to_json(family.ambient()->lower)},
                    {"upper", vector_to_json(family.ambient()->upper)}};
  } else {
    j["ambient"] = nullptr;
  }
  return j;
}

ConstraintFamily family_from_json_obj(const json& j) {
  if (!j.is_object()) throw ConfigError("family document must be an object");
  if (!j.contains("sets") || !j["sets"].is_array() || j["sets"].empty()) {
    throw ConfigError("field 'sets' must be a nonempty array");
  }
  std::vector<ConstraintSet> sets;
  sets.reserve(j["sets"].size());
  for (std::size_t i = 0; i < j["sets"].size(); ++i) {
    sets.push_back(
        set_from_json(j["sets"][i], "sets[" + std::to_string(i) + "]"));
  }
  std::optional<Box> ambient;
  if (j.contains("ambient") && !j["ambient"].is_null()) {
    const auto& a = j["ambient"];
    if (!a.contains("lower") || !a.contains("upper")) {
      throw ConfigError("field 'ambient' needs 'lower' and 'upper'");
    }
    ambient = Box{vector_from_json(a["lower"], "ambient.lower"),
                  vector_from_json(a["upper"], "ambient.upper")};
  }
  ConstraintFamily family(std::move(sets), std::move(ambient));
  if (j.contains("dim") && j["dim"].is_number_integer() &&
      j["dim"].get<int>() != family.dim()) {
    throw ConfigError("field 'dim' contradicts the sets' dimension");
  }
  return family;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("input is not valid JSON");
  return j;
}

}  // namespace

void write_trace_csv(const IterateTrace& trace, std::ostream& os) {
  os << "k,prox,phi,beta_consumed\n";
  for (const auto& rec : trace.records) {
    os << rec.k << ',' << num17(rec.prox) << ',' << num17(rec.phi) << ','
       << num17(rec.beta_consumed) << '\n';
  }
}

std::string trace_csv(const IterateTrace& trace) {
  std::ostringstream os;
  write_trace_csv(trace, os);
  return os.str();
}

std::string trace_points_json(const IterateTrace& trace) {
  json j;
  j["fingerprint"] = trace.meta.fingerprint;
  j["seed"] = trace.meta.seed;
  j["stop_reason"] = to_string(trace.stop_reason);
  json pts = json::array();
  for (const auto& rec : trace.records) pts.push_back(vector_to_json(rec.point));
  j["points"] = std::move(pts);
  return j.dump(2) + "\n";
}

void write_curve_csv(const ProximityTargetCurve& curve, std::ostream& os) {
  os << "prox,phi\n";
  for (const auto& v : curve.vertices()) {
    os << num17(v.prox) << ',' << num17(v.phi) << '\n';
  }
}

std::string curve_csv(const ProximityTargetCurve& curve) {
  std::ostringstream os;
  write_curve_csv(curve, os);
  return os.str();
}

std::string comparison_json(const CurveComparison& cmp) {
  json j;
  j["verdict"] = to_string(cmp.verdict);
  j["t"] = cmp.t;
  j["u"] = cmp.u;
  if (cmp.witness) {
    j["witness"] = *cmp.witness;
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string family_json(const ConstraintFamily& family) {
  return family_to_json_obj(family).dump(2) + "\n";
}

ConstraintFamily family_from_json(const std::string& text) {
  return family_from_json_obj(parse(text));
}

std::string problem_json(const ProblemDocument& doc) {
  json j = family_to_json_obj(doc.family);
  if (doc.witness) j["witness"] = vector_to_json(*doc.witness);
  if (doc.x0) j["x0"] = vector_to_json(*doc.x0);
  return j.dump(2) + "\n";
}

ProblemDocument problem_from_json(const std::string& text) {
  json j = parse(text);
  ProblemDocument doc{family_from_json_obj(j), std::nullopt, std::nullopt};
  if (j.contains("witness") && !j["witness"].is_null()) {
    doc.witness = vector_from_json(j["witness"], "witness");
  }
  if (j.contains("x0") && !j["x0"].is_null()) {
    doc.x0 = vector_from_json(j["x0"], "x0");
  }
  return doc;
}

std::string fejer_json(const FejerReport& report) {
  json j;
  j["reference"] = vector_to_json(report.reference);
  if (report.first_monotone_index) {
    j["first_monotone_index"] = *report.first_monotone_index;
  } else {
    j["first_monotone_index"] = nullptr;
  }
  json viol = json::array();
  for (const auto& [k, amount] : report.violations) {
    viol.push_back({{"k", k}, {"increase", amount}});
  }
  j["violations"] = std::move(viol);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    fs::create_directories(target.parent_path());
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

}  // namespace superior
