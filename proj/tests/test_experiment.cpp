// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "superior/experiment.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "superior/eval.hpp"
#include "superior/io.hpp"

using namespace superior;
namespace fs = std::filesystem;

namespace {

const char* kExperimentTemplate = R"({
  "problem": {"generator": "random_halfspaces", "n": 8, "m": 6,
              "radius": 1.0, "seed": 424242},
  "arms": [
    {"name": "basic",
     "config": {"mode": "basic", "plan": {"strategy": "cimmino"},
                "objective": {"kind": "squared_norm"},
                "stop": {"max_iters": 5000, "epsilon": 1e-6}}},
    {"name": "weak",
     "config": {"mode": "weak", "N": 4, "schedule": {"a": 0.5},
                "plan": {"strategy": "cimmino"},
                "objective": {"kind": "squared_norm"},
                "stop": {"max_iters": 5000, "epsilon": 1e-6}}},
    {"name": "basic-twin",
     "config": {"mode": "basic", "plan": {"strategy": "cimmino"},
                "objective": {"kind": "squared_norm"},
                "stop": {"max_iters": 5000, "epsilon": 1e-6}}}
  ],
  "eps_grid": [1e-4],
  "replicates": 3,
  "output_dir": "OUTDIR"
})";

std::string spec_text(const std::string& out_dir) {
  std::string text = kExperimentTemplate;
  const auto pos = text.find("OUTDIR");
  text.replace(pos, 6, out_dir);
  return text;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("experiment spec parsing validates fields") {
  CHECK_THROWS_AS(experiment_from_json("[]"), ConfigError);
  CHECK_THROWS_AS(experiment_from_json(R"({"problem": {}})"), ConfigError);
  CHECK_THROWS_AS(
      experiment_from_json(
          R"({"problem": {"generator": "random_halfspaces"}, "arms": []})"),
      ConfigError);

  const ExperimentSpec spec = experiment_from_json(spec_text("/tmp/x"));
  CHECK(spec.arms.size() == 3);
  CHECK(spec.replicates == 3);
  CHECK(spec.eps_grid == std::vector<double>{1e-4});
}

TEST_CASE("arms must share the stop budget") {
  TempDir tmp("superior_experiment_stop");
  ExperimentSpec spec = experiment_from_json(spec_text(tmp.path.string()));
  spec.arms[1].config.stop.max_iterations = 123;
  CHECK_THROWS_AS(run_experiment(spec), ConfigError);
}

TEST_CASE("explicit problems run through the experiment harness") {
  TempDir tmp("superior_experiment_explicit");
  const GeneratedProblem p = generate(RandomHalfspaces{6, 5, 1.0, 2025});
  write_file_atomic(tmp.file("problem.json"),
                    problem_json(ProblemDocument{p.family, p.witness, p.x0}));

  std::string text = spec_text(tmp.file("out"));
  const std::string needle =
      R"({"generator": "random_halfspaces", "n": 8, "m": 6,
              "radius": 1.0, "seed": 424242})";
  REQUIRE(text.find(needle) != std::string::npos);
  text.replace(text.find(needle), needle.size(),
               R"({"generator": "explicit", "path": ")" +
                   tmp.file("problem.json") + R"("})");

  const ExperimentReport report = run_experiment(experiment_from_json(text));
  CHECK(report.failed_runs == 0);
  CHECK(fs::exists(tmp.file("out/summary.json")));

  // every replicate of an explicit problem sees the same instance
  const std::string t0 =
      read_file(tmp.file("out/traces/arm-basic-rep-0.csv"));
  const std::string t1 =
      read_file(tmp.file("out/traces/arm-basic-rep-1.csv"));
  CHECK(t0 == t1);
}

TEST_CASE("experiment writes the documented layout and sane fractions") {
  TempDir tmp("superior_experiment_test");
  const ExperimentSpec spec =
      experiment_from_json(spec_text(tmp.path.string()));
  const ExperimentReport report = run_experiment(spec);

  CHECK(report.baseline == "basic");
  CHECK(report.failed_runs == 0);
  for (const auto& stats : report.comparisons) {
    CHECK(stats.fraction_strictly_lower >= 0.0);
    CHECK(stats.fraction_strictly_lower <= 1.0);
    CHECK(stats.wins + stats.near_ties + stats.losses + stats.missing == 3);
  }

  for (int rep = 0; rep < 3; ++rep) {
    for (const char* arm : {"basic", "weak", "basic-twin"}) {
      CHECK(fs::exists(tmp.path / "traces" /
                       ("arm-" + std::string(arm) + "-rep-" +
                        std::to_string(rep) + ".csv")));
      CHECK(fs::exists(tmp.path / "curves" /
                       ("arm-" + std::string(arm) + "-rep-" +
                        std::to_string(rep) + ".csv")));
    }
    CHECK(fs::exists(tmp.path / "compare" /
                     ("weak-vs-basic-rep-" + std::to_string(rep) + ".json")));
  }
  CHECK(fs::exists(tmp.path / "summary.json"));
}

TEST_CASE("an identical arm compares as better-targeted against the baseline") {
  TempDir tmp("superior_experiment_twin");
  const ExperimentSpec spec =
      experiment_from_json(spec_text(tmp.path.string()));
  const ExperimentReport report = run_experiment(spec);
  // identical configs produce identical curves, and ties resolve to R_better
  REQUIRE(report.curve_verdicts.count("basic-twin") == 1);
  const auto& verdicts = report.curve_verdicts.at("basic-twin");
  CHECK(verdicts.count("R_better") == 1);
  CHECK(verdicts.at("R_better") == 3);
}

TEST_CASE("the baseline arm inside an experiment equals a standalone run") {
  TempDir tmp("superior_experiment_isolation");
  const ExperimentSpec spec =
      experiment_from_json(spec_text(tmp.path.string()));
  (void)run_experiment(spec);

  for (int rep = 0; rep < spec.replicates; ++rep) {
    const GeneratedProblem problem =
        generate(reseed_for_replicate(spec.problem, rep));
    const IterateTrace standalone =
        run_configured(problem.family, spec.arms[0].config, problem.x0);
    std::ifstream in(tmp.path / "traces" /
                     ("arm-basic-rep-" + std::to_string(rep) + ".csv"));
    std::stringstream buffer;
    buffer << in.rdbuf();
    REQUIRE(buffer.str() == trace_csv(standalone));
  }
}
