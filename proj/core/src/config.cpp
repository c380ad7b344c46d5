// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/config.hpp"

#include <cstdio>
#include <utility>

#include <json.hpp>

#include "superior/rng.hpp"

namespace superior {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config is not valid JSON");
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  return j;
}

double get_number(const json& j, const std::string& field, double fallback,
                  bool required = false) {
  if (!j.contains(field)) {
    if (required) throw ConfigError("field '" + field + "' is required");
    return fallback;
  }
  if (!j[field].is_number()) {
    throw ConfigError("field '" + field + "' must be a number");
  }
  return j[field].get<double>();
}

long get_integer(const json& j, const std::string& field, long fallback) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_number_integer()) {
    throw ConfigError("field '" + field + "' must be an integer");
  }
  return j[field].get<long>();
}

std::string get_string(const json& j, const std::string& field,
                       const std::string& fallback) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_string()) {
    throw ConfigError("field '" + field + "' must be a string");
  }
  return j[field].get<std::string>();
}

ScheduleSpec schedule_from(const json& j) {
  ScheduleSpec spec;
  if (!j.is_object()) throw ConfigError("field 'schedule' must be an object");
  if (j.contains("disabled")) {
    if (!j["disabled"].is_boolean()) {
      throw ConfigError("field 'schedule.disabled' must be a boolean");
    }
    spec.disabled = j["disabled"].get<bool>();
  }
  spec.a = get_number(j, "a", spec.a);
  if (j.contains("restart") && !j["restart"].is_null()) {
    const auto& r = j["restart"];
    if (!r.is_object()) {
      throw ConfigError("field 'schedule.restart' must be an object or null");
    }
    RestartSpec restart;
    restart.to = get_integer(r, "to", 0);
    restart.every = get_integer(r, "every", 1);
    restart.budget = get_integer(r, "budget", 0);
    spec.restart = restart;
  }
  return spec;
}

ObjectiveSpec objective_from(const json& j) {
  if (!j.is_object()) throw ConfigError("field 'objective' must be an object");
  ObjectiveSpec spec;
  spec.kind = get_string(j, "kind", spec.kind);
  if (spec.kind == "quadratic") {
    if (!j.contains("Q") || !j["Q"].is_array()) {
      throw ConfigError("field 'objective.Q' must be an array of rows");
    }
    const auto& rows = j["Q"];
    const auto n = static_cast<Eigen::Index>(rows.size());
    spec.Q.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        throw ConfigError("field 'objective.Q' must be square");
      }
      for (Eigen::Index c = 0; c < n; ++c) {
        spec.Q(r, c) = row[static_cast<std::size_t>(c)].get<double>();
      }
    }
    spec.c = Vector::Zero(n);
    if (j.contains("c")) {
      const auto& cv = j["c"];
      if (!cv.is_array() || static_cast<Eigen::Index>(cv.size()) != n) {
        throw ConfigError("field 'objective.c' must match Q's dimension");
      }
      for (Eigen::Index i = 0; i < n; ++i) {
        spec.c[i] = cv[static_cast<std::size_t>(i)].get<double>();
      }
    }
  }
  return spec;
}

PlanSpec plan_from(const json& j) {
  if (!j.is_object()) throw ConfigError("field 'plan' must be an object");
  PlanSpec spec;
  spec.strategy = get_string(j, "strategy", spec.strategy);
  spec.delta = get_number(j, "delta", spec.delta);
  spec.qbar = static_cast<int>(get_integer(j, "qbar", spec.qbar));
  spec.seed = static_cast<std::uint64_t>(get_integer(j, "seed", 0));
  if (j.contains("strings")) {
    if (!j["strings"].is_array()) {
      throw ConfigError("field 'plan.strings' must be an array");
    }
    for (const auto& s : j["strings"]) {
      if (!s.is_array()) {
        throw ConfigError("field 'plan.strings' must contain index arrays");
      }
      std::vector<int> t;
      for (const auto& i : s) t.push_back(i.get<int>());
      spec.strings.push_back(std::move(t));
    }
  }
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) {
      throw ConfigError("field 'plan.weights' must be an array");
    }
    for (const auto& w : j["weights"]) spec.weights.push_back(w.get<double>());
  }
  return spec;
}

}  // namespace

RunConfig run_config_from_json(const std::string& text) {
  const json j = parse(text);
  RunConfig cfg;
  cfg.mode = get_string(j, "mode", cfg.mode);
  if (cfg.mode != "basic" && cfg.mode != "weak" && cfg.mode != "strong" &&
      cfg.mode != "generic") {
    throw ConfigError("field 'mode' must be basic, weak, strong or generic");
  }
  cfg.perturbations = static_cast<int>(get_integer(j, "N", cfg.perturbations));
  if (cfg.perturbations < 1) {
    throw ConfigError("field 'N' must be at least 1");
  }
  if (j.contains("schedule")) cfg.schedule = schedule_from(j["schedule"]);
  if (j.contains("direction")) {
    const auto& d = j["direction"];
    if (!d.is_object()) throw ConfigError("field 'direction' must be an object");
    cfg.direction.source = get_string(d, "source", cfg.direction.source);
    if (cfg.direction.source != "subgradient" && cfg.direction.source != "dfs") {
      throw ConfigError("field 'direction.source' must be subgradient or dfs");
    }
    cfg.direction.probe_radius =
        get_number(d, "probe_radius", cfg.direction.probe_radius);
    cfg.direction.trials =
        static_cast<int>(get_integer(d, "trials", cfg.direction.trials));
    cfg.direction.seed =
        static_cast<std::uint64_t>(get_integer(d, "seed", 0));
  }
  if (j.contains("plan")) cfg.plan = plan_from(j["plan"]);
  if (j.contains("objective")) cfg.objective = objective_from(j["objective"]);
  if (j.contains("aux")) {
    const auto& a = j["aux"];
    if (!a.is_object()) throw ConfigError("field 'aux' must be an object");
    AuxiliarySpec aux;
    aux.kind = get_string(a, "kind", aux.kind);
    if (aux.kind != "gradient_descent") {
      throw ConfigError("field 'aux.kind' must be gradient_descent");
    }
    aux.step = get_number(a, "step", aux.step);
    if (!(aux.step > 0.0)) {
      throw ConfigError("field 'aux.step' must be positive");
    }
    cfg.auxiliary = aux;
  }
  if (j.contains("stop")) {
    const auto& s = j["stop"];
    if (!s.is_object()) throw ConfigError("field 'stop' must be an object");
    if (s.contains("max_iters")) {
      cfg.stop.max_iterations = get_integer(s, "max_iters", 0);
    }
    if (s.contains("epsilon")) {
      cfg.stop.epsilon = get_number(s, "epsilon", 0.0, true);
    }
  }
  if (!cfg.stop.max_iterations && !cfg.stop.epsilon) {
    throw ConfigError("field 'stop' must set max_iters or epsilon");
  }
  cfg.stall_budget =
      static_cast<int>(get_integer(j, "stall_budget", cfg.stall_budget));
  if (j.contains("record_inner_events")) {
    if (!j["record_inner_events"].is_boolean()) {
      throw ConfigError("field 'record_inner_events' must be a boolean");
    }
    cfg.record_inner_events = j["record_inner_events"].get<bool>();
  }
  return cfg;
}

std::string run_config_json(const RunConfig& config) {
  json j;
  j["mode"] = config.mode;
  j["N"] = config.perturbations;
  json sched{{"disabled", config.schedule.disabled}, {"a", config.schedule.a}};
  if (config.schedule.restart) {
    sched["restart"] = {{"to", config.schedule.restart->to},
                        {"every", config.schedule.restart->every},
                        {"budget", config.schedule.restart->budget}};
  } else {
    sched["restart"] = nullptr;
  }
  j["schedule"] = std::move(sched);
  j["direction"] = {{"source", config.direction.source},
                    {"probe_radius", config.direction.probe_radius},
                    {"trials", config.direction.trials},
                    {"seed", config.direction.seed}};
  json plan{{"strategy", config.plan.strategy},
            {"delta", config.plan.delta},
            {"qbar", config.plan.qbar},
            {"seed", config.plan.seed}};
  if (!config.plan.strings.empty()) {
    plan["strings"] = config.plan.strings;
    plan["weights"] = config.plan.weights;
  }
  j["plan"] = std::move(plan);
  if (config.objective) {
    json obj{{"kind", config.objective->kind}};
    if (config.objective->kind == "quadratic") {
      json rows = json::array();
      for (Eigen::Index r = 0; r < config.objective->Q.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < config.objective->Q.cols(); ++c) {
          row.push_back(config.objective->Q(r, c));
        }
        rows.push_back(std::move(row));
      }
      obj["Q"] = std::move(rows);
      json cv = json::array();
      for (Eigen::Index i = 0; i < config.objective->c.size(); ++i) {
        cv.push_back(config.objective->c[i]);
      }
      obj["c"] = std::move(cv);
    }
    j["objective"] = std::move(obj);
  }
  if (config.auxiliary) {
    j["aux"] = {{"kind", config.auxiliary->kind},
                {"step", config.auxiliary->step}};
  }
  json stop;
  if (config.stop.max_iterations) stop["max_iters"] = *config.stop.max_iterations;
  if (config.stop.epsilon) stop["epsilon"] = *config.stop.epsilon;
  j["stop"] = std::move(stop);
  j["stall_budget"] = config.stall_budget;
  j["record_inner_events"] = config.record_inner_events;
  return j.dump();
}

std::string config_fingerprint(const RunConfig& config) {
  const std::string text = run_config_json(config);
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

Objective make_objective(const ObjectiveSpec& spec) {
  if (spec.kind == "squared_norm") return Objective(SquaredNorm{});
  if (spec.kind == "l1") return Objective(L1Norm{});
  if (spec.kind == "quadratic") return Objective(Quadratic{spec.Q, spec.c});
  throw ConfigError("field 'objective.kind' must be squared_norm, l1 or quadratic");
}

BasicAlgorithm make_algorithm(ConstraintFamily family, const PlanSpec& spec) {
  const int m = family.size();
  if (spec.strategy == "kaczmarz") {
    return BasicAlgorithm::kaczmarz(std::move(family));
  }
  if (spec.strategy == "cimmino") {
    return BasicAlgorithm::cimmino(std::move(family));
  }
  if (spec.strategy == "cyclic_rotation") {
    return BasicAlgorithm::cyclic_rotation(std::move(family));
  }
  if (spec.strategy == "fixed") {
    if (spec.strings.empty() || spec.strings.size() != spec.weights.size()) {
      throw ConfigError(
          "field 'plan' with fixed strategy needs matching strings and weights");
    }
    std::vector<IndexVector> strings;
    strings.reserve(spec.strings.size());
    for (const auto& s : spec.strings) strings.push_back(IndexVector{s});
    return BasicAlgorithm::fixed(std::move(family),
                                 StringPlan(std::move(strings), spec.weights));
  }
  if (spec.strategy == "seeded_random") {
    const double delta =
        spec.delta > 0.0 ? spec.delta : 0.5 / static_cast<double>(m);
    const int qbar = spec.qbar > 0 ? spec.qbar : m;
    return BasicAlgorithm::seeded_random(std::move(family), delta, qbar,
                                         spec.seed);
  }
  throw ConfigError("field 'plan.strategy' has unknown value '" +
                    spec.strategy + "'");
}

Schedule make_schedule(const ScheduleSpec& spec) {
  if (spec.disabled) return Schedule::disabled();
  if (spec.restart) {
    return Schedule::geometric(
        spec.a,
        RestartPolicy{spec.restart->to, spec.restart->every,
                      spec.restart->budget});
  }
  return Schedule::geometric(spec.a);
}

namespace {

AuxiliaryAlgorithm make_auxiliary(const AuxiliarySpec& spec,
                                  const Objective& obj) {
  if (!obj.subgradient_available()) {
    throw ConfigError("field 'aux' requires a subgradient-available objective");
  }
  const double step = spec.step;
  return AuxiliaryAlgorithm{
      [step, obj](const Vector& y) -> Vector {
        return y - step * subgradient(obj, y);
      },
      "gradient descent, step " + std::to_string(step)};
}

}  // namespace

IterateTrace run_configured(const ConstraintFamily& family,
                            const RunConfig& config, const Vector& x0) {
  BasicAlgorithm algo = make_algorithm(family, config.plan);
  std::optional<Objective> obj;
  if (config.objective) obj = make_objective(*config.objective);

  IterateTrace trace;
  if (config.mode == "basic") {
    trace = run_basic(algo, x0, config.stop, obj ? &*obj : nullptr);
  } else {
    if (!obj) {
      throw ConfigError("field 'objective' is required for mode '" +
                        config.mode + "'");
    }
    SuperiorizerConfig cfg;
    cfg.perturbations = config.perturbations;
    cfg.schedule = make_schedule(config.schedule);
    cfg.stall_budget = config.stall_budget;
    cfg.record_inner_events = config.record_inner_events;
    if (config.direction.source == "dfs") {
      cfg.direction = DerivativeFreeSource{config.direction.probe_radius,
                                           config.direction.trials,
                                           config.direction.seed};
    } else {
      cfg.direction = SubgradientSource{};
    }
    if (config.mode == "weak") {
      cfg.mode = SuperiorizationMode::Weak;
    } else if (config.mode == "strong") {
      cfg.mode = SuperiorizationMode::Strong;
    } else {
      cfg.mode = SuperiorizationMode::Generic;
      if (!config.auxiliary) {
        throw ConfigError("field 'aux' is required for generic mode");
      }
      cfg.auxiliary = make_auxiliary(*config.auxiliary, *obj);
    }
    trace = run_superiorized(algo, *obj, cfg, x0, config.stop);
  }
  trace.meta.fingerprint = config_fingerprint(config);
  trace.meta.seed = derive_seed(config.plan.seed, config.direction.seed);
  return trace;
}

}  // namespace superior
