// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/experiment.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <thread>
#include <utility>

#include <json.hpp>

#include "superior/eval.hpp"
#include "superior/io.hpp"
#include "superior/rng.hpp"

namespace superior {

namespace {

using nlohmann::json;

constexpr double kPhiTolerance = 1e-9;

ProblemSpec problem_spec_from(const json& j) {
  if (!j.is_object()) throw ConfigError("field 'problem' must be an object");
  if (!j.contains("generator") || !j["generator"].is_string()) {
    throw ConfigError("field 'problem.generator' is required");
  }
  const std::string gen = j["generator"].get<std::string>();
  const int n = j.value("n", 2);
  const int m = j.value("m", 1);
  const auto seed = static_cast<std::uint64_t>(j.value("seed", 0));
  if (gen == "random_halfspaces") {
    return RandomHalfspaces{n, m, j.value("radius", 1.0), seed};
  }
  if (gen == "random_hyperplanes") {
    return RandomHyperplanes{n, m, seed, j.value("consistent", true)};
  }
  if (gen == "sparse_system") {
    return SparseSystem{n, m, j.value("density", 0.1), seed};
  }
  if (gen == "explicit") {
    if (!j.contains("path") || !j["path"].is_string()) {
      throw ConfigError("field 'problem.path' is required for explicit problems");
    }
    const ProblemDocument doc = problem_from_json(read_file(j["path"]));
    if (!doc.x0) {
      throw ConfigError("explicit problem document needs an 'x0'");
    }
    return ExplicitProblem{doc.family, doc.witness, *doc.x0};
  }
  throw ConfigError("field 'problem.generator' has unknown value '" + gen +
                    "'");
}

struct ArmOutcome {
  std::optional<IterateTrace> trace;
  std::string error;
};

struct ReplicateResult {
  std::vector<ArmOutcome> arms;
};

int thread_cap() {
  if (const char* env = std::getenv("SUPERIOR_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string arm_file(const std::string& dir, const std::string& kind,
                     const std::string& arm, int rep, const std::string& ext) {
  return dir + "/" + kind + "/arm-" + arm + "-rep-" + std::to_string(rep) +
         ext;
}

}  // namespace

ExperimentSpec experiment_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ConfigError("experiment spec is not a JSON object");
  }
  ExperimentSpec spec;
  if (!j.contains("problem")) throw ConfigError("field 'problem' is required");
  spec.problem = problem_spec_from(j["problem"]);
  if (!j.contains("arms") || !j["arms"].is_array() || j["arms"].empty()) {
    throw ConfigError("field 'arms' must be a nonempty array");
  }
  for (const auto& a : j["arms"]) {
    if (!a.is_object() || !a.contains("name") || !a.contains("config")) {
      throw ConfigError("field 'arms' entries need 'name' and 'config'");
    }
    spec.arms.push_back(ArmSpec{a["name"].get<std::string>(),
                                run_config_from_json(a["config"].dump())});
  }
  if (j.contains("eps_grid")) {
    if (!j["eps_grid"].is_array()) {
      throw ConfigError("field 'eps_grid' must be an array");
    }
    for (const auto& e : j["eps_grid"]) {
      const double eps = e.get<double>();
      if (!(eps > 0.0)) throw ConfigError("field 'eps_grid' must be positive");
      spec.eps_grid.push_back(eps);
    }
  }
  spec.replicates = j.value("replicates", 1);
  if (spec.replicates < 1) {
    throw ConfigError("field 'replicates' must be at least 1");
  }
  if (!j.contains("output_dir") || !j["output_dir"].is_string()) {
    throw ConfigError("field 'output_dir' is required");
  }
  spec.output_dir = j["output_dir"].get<std::string>();
  return spec;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  namespace fs = std::filesystem;
  if (spec.arms.empty()) throw ConfigError("experiment needs at least one arm");
  // arms must differ only in their algorithmic configuration, so the stop
  // budget is required to be shared
  for (const auto& arm : spec.arms) {
    if (arm.config.stop.max_iterations != spec.arms[0].config.stop.max_iterations ||
        arm.config.stop.epsilon != spec.arms[0].config.stop.epsilon) {
      throw ConfigError("arm '" + arm.name +
                        "' does not share the first arm's stop rule");
    }
  }
  fs::create_directories(spec.output_dir);

  // Baseline: the first unperturbed arm, or failing that the first arm.
  std::size_t baseline_idx = 0;
  for (std::size_t i = 0; i < spec.arms.size(); ++i) {
    if (spec.arms[i].config.mode == "basic") {
      baseline_idx = i;
      break;
    }
  }

  std::vector<ReplicateResult> results(
      static_cast<std::size_t>(spec.replicates));

  // Replicates are independent; traces and curves are written inside the
  // workers (atomically), aggregation happens after the join in replicate
  // order.
  std::atomic<int> next_rep{0};
  auto worker = [&]() {
    for (;;) {
      const int rep = next_rep.fetch_add(1);
      if (rep >= spec.replicates) return;
      auto& result = results[static_cast<std::size_t>(rep)];
      result.arms.resize(spec.arms.size());

      GeneratedProblem problem =
          generate(reseed_for_replicate(spec.problem, rep));
      for (std::size_t a = 0; a < spec.arms.size(); ++a) {
        auto& outcome = result.arms[a];
        try {
          IterateTrace trace = run_configured(problem.family,
                                              spec.arms[a].config, problem.x0);
          write_file_atomic(
              arm_file(spec.output_dir, "traces", spec.arms[a].name, rep,
                       ".csv"),
              trace_csv(trace));
          const auto curve =
              curve_from_indices(trace, monotone_subsequence(trace));
          write_file_atomic(
              arm_file(spec.output_dir, "curves", spec.arms[a].name, rep,
                       ".csv"),
              curve_csv(curve));
          outcome.trace = std::move(trace);
        } catch (const Error& e) {
          outcome.error = e.what();
        }
      }
    }
  };

  const int threads =
      std::min(thread_cap(), std::max(1, spec.replicates));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ExperimentReport report;
  report.output_dir = spec.output_dir;
  report.baseline = spec.arms[baseline_idx].name;

  json per_replicate = json::array();
  for (int rep = 0; rep < spec.replicates; ++rep) {
    const auto& result = results[static_cast<std::size_t>(rep)];
    json entry{{"rep", rep}};
    json arms = json::object();
    for (std::size_t a = 0; a < spec.arms.size(); ++a) {
      const auto& outcome = result.arms[a];
      if (!outcome.trace) {
        arms[spec.arms[a].name] = {{"error", outcome.error}};
        report.failed_runs += 1;
        continue;
      }
      const auto& trace = *outcome.trace;
      arms[spec.arms[a].name] = {
          {"stop_reason", to_string(trace.stop_reason)},
          {"iterations", trace.records.back().k},
          {"final_prox", trace.records.back().prox},
          {"final_phi", trace.records.back().phi}};
    }
    entry["arms"] = std::move(arms);
    per_replicate.push_back(std::move(entry));
  }

  // Pairwise evaluation of every non-baseline arm against the baseline:
  // better-targeted curve verdicts and epsilon-output phi comparisons.
  json comparisons = json::array();
  for (std::size_t a = 0; a < spec.arms.size(); ++a) {
    if (a == baseline_idx) continue;
    auto& verdicts = report.curve_verdicts[spec.arms[a].name];
    for (int rep = 0; rep < spec.replicates; ++rep) {
      const auto& base = results[static_cast<std::size_t>(rep)]
                             .arms[baseline_idx]
                             .trace;
      const auto& arm = results[static_cast<std::size_t>(rep)].arms[a].trace;
      if (!base || !arm) continue;
      const auto cmp = better_targeted(
          curve_from_indices(*arm, monotone_subsequence(*arm)),
          curve_from_indices(*base, monotone_subsequence(*base)));
      verdicts[to_string(cmp.verdict)] += 1;
      write_file_atomic(spec.output_dir + "/compare/" + spec.arms[a].name +
                            "-vs-" + report.baseline + "-rep-" +
                            std::to_string(rep) + ".json",
                        comparison_json(cmp));
    }
    for (double eps : spec.eps_grid) {
      ArmEpsilonStats stats;
      stats.arm = spec.arms[a].name;
      stats.eps = eps;
      for (int rep = 0; rep < spec.replicates; ++rep) {
        const auto& base = results[static_cast<std::size_t>(rep)]
                               .arms[baseline_idx]
                               .trace;
        const auto& arm = results[static_cast<std::size_t>(rep)].arms[a].trace;
        if (!base || !arm) {
          stats.missing += 1;
          continue;
        }
        const auto base_out = epsilon_output(*base, eps);
        const auto arm_out = epsilon_output(*arm, eps);
        if (!base_out || !arm_out) {
          stats.missing += 1;
          continue;
        }
        const double phi_base =
            base->records[static_cast<std::size_t>(base_out->k)].phi;
        const double phi_arm =
            arm->records[static_cast<std::size_t>(arm_out->k)].phi;
        if (phi_arm < phi_base) {
          stats.wins += 1;
        } else if (phi_arm <= phi_base + kPhiTolerance) {
          stats.near_ties += 1;
        } else {
          stats.losses += 1;
        }
      }
      stats.fraction_strictly_lower =
          static_cast<double>(stats.wins) /
          static_cast<double>(spec.replicates);
      comparisons.push_back({{"arm", stats.arm},
                             {"eps", stats.eps},
                             {"wins", stats.wins},
                             {"near_ties", stats.near_ties},
                             {"losses", stats.losses},
                             {"missing", stats.missing},
                             {"fraction_strictly_lower",
                              stats.fraction_strictly_lower}});
      report.comparisons.push_back(std::move(stats));
    }
  }

  json summary;
  summary["replicates"] = spec.replicates;
  summary["baseline"] = report.baseline;
  json arm_names = json::array();
  for (const auto& arm : spec.arms) arm_names.push_back(arm.name);
  summary["arms"] = std::move(arm_names);
  summary["eps_grid"] = spec.eps_grid;
  summary["comparisons"] = std::move(comparisons);
  json curve_verdicts = json::object();
  for (const auto& [arm, counts] : report.curve_verdicts) {
    curve_verdicts[arm] = counts;
  }
  summary["better_targeted"] = std::move(curve_verdicts);
  summary["failed_runs"] = report.failed_runs;
  summary["per_replicate"] = std::move(per_replicate);
  write_file_atomic(spec.output_dir + "/summary.json", summary.dump(2) + "\n");
  return report;
}

}  // namespace superior
