// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include "superior/io.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"superior"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(storage.size());
  for (const auto& s : storage) argv.push_back(s.c_str());
  return superior::cli::cli_main(static_cast<int>(argv.size()), argv.data());
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

void write(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string slurp(const std::string& path) {
  return superior::read_file(path);
}

const char* kBasicConfig = R"({
  "mode": "basic", "plan": {"strategy": "cimmino"},
  "objective": {"kind": "squared_norm"},
  "stop": {"max_iters": 5000, "epsilon": 1e-6}
})";

const char* kWeakConfig = R"({
  "mode": "weak", "N": 4, "schedule": {"a": 0.5},
  "plan": {"strategy": "cimmino"},
  "objective": {"kind": "squared_norm"},
  "stop": {"max_iters": 5000, "epsilon": 1e-6}
})";

}  // namespace

TEST_CASE("gen and run produce the documented artifacts") {
  TempDir tmp("superior_cli_run");
  const std::string problem = tmp.file("p.json");
  const std::string config = tmp.file("weak.json");
  const std::string trace = tmp.file("trace.csv");
  const std::string points = tmp.file("points.json");

  REQUIRE(run_cli({"gen", "--generator", "random_halfspaces", "--n", "6",
                   "--m", "5", "--radius", "1.0", "--seed", "9", "--out",
                   problem}) == 0);
  REQUIRE(fs::exists(problem));

  write(config, kWeakConfig);
  REQUIRE(run_cli({"run", "--problem", problem, "--config", config, "--out",
                   trace, "--points", points}) == 0);

  const std::string csv = slurp(trace);
  CHECK(csv.rfind("k,prox,phi,beta_consumed\n", 0) == 0);
  CHECK(slurp(points).find("\"points\"") != std::string::npos);

  // byte-identical replay
  const std::string again = tmp.file("trace2.csv");
  REQUIRE(run_cli({"run", "--problem", problem, "--config", config, "--out",
                   again}) == 0);
  CHECK(slurp(again) == csv);
}

TEST_CASE("compare on identical configs reports R_better") {
  TempDir tmp("superior_cli_compare");
  const std::string problem = tmp.file("p.json");
  const std::string config = tmp.file("basic.json");
  REQUIRE(run_cli({"gen", "--n", "6", "--m", "5", "--seed", "4", "--out",
                   problem}) == 0);
  write(config, kBasicConfig);

  REQUIRE(run_cli({"compare", "--problem", problem, "--config-a", config,
                   "--config-b", config, "--out-dir", tmp.file("cmp")}) == 0);
  const std::string verdict = slurp(tmp.file("cmp/compare.json"));
  CHECK(verdict.find("\"verdict\": \"R_better\"") != std::string::npos);
  CHECK(fs::exists(tmp.file("cmp/curve-a.csv")));
  CHECK(fs::exists(tmp.file("cmp/curve-b.csv")));
  CHECK(slurp(tmp.file("cmp/curve-a.csv")).rfind("prox,phi\n", 0) == 0);
}

TEST_CASE("experiment emits summary.json with fractions") {
  TempDir tmp("superior_cli_experiment");
  const std::string spec = tmp.file("e.json");
  write(spec, std::string(R"({
    "problem": {"generator": "random_halfspaces", "n": 6, "m": 5,
                "radius": 1.0, "seed": 77},
    "arms": [
      {"name": "basic", "config": )") +
                  kBasicConfig + R"(},
      {"name": "weak", "config": )" + kWeakConfig + R"(}
    ],
    "eps_grid": [1e-4],
    "replicates": 2,
    "output_dir": ")" + tmp.file("out") + R"("
  })");

  REQUIRE(run_cli({"experiment", "--spec", spec}) == 0);
  const std::string summary = slurp(tmp.file("out/summary.json"));
  CHECK(summary.find("\"fraction_strictly_lower\"") != std::string::npos);
  CHECK(summary.find("\"baseline\": \"basic\"") != std::string::npos);
}

TEST_CASE("fejer consumes run points and a witness") {
  TempDir tmp("superior_cli_fejer");
  const std::string problem = tmp.file("p.json");
  const std::string config = tmp.file("weak.json");
  const std::string trace = tmp.file("trace.csv");
  const std::string points = tmp.file("points.json");
  const std::string report = tmp.file("fejer.json");

  REQUIRE(run_cli({"gen", "--n", "6", "--m", "5", "--seed", "9", "--out",
                   problem}) == 0);
  write(config, kWeakConfig);
  REQUIRE(run_cli({"run", "--problem", problem, "--config", config, "--out",
                   trace, "--points", points}) == 0);
  REQUIRE(run_cli({"fejer", "--points", points, "--problem", problem, "--out",
                   report}) == 0);
  CHECK(slurp(report).find("first_monotone_index") != std::string::npos);
}

TEST_CASE("usage and config failures exit with code 1") {
  TempDir tmp("superior_cli_errors");
  CHECK(run_cli({"frobnicate"}) == 1);
  CHECK(run_cli({"run", "--problem", "nope.json"}) == 1);  // missing flags

  const std::string problem = tmp.file("p.json");
  REQUIRE(run_cli({"gen", "--n", "4", "--m", "3", "--out", problem}) == 0);

  const std::string bad = tmp.file("bad.json");
  write(bad, R"({"mode": "nonsense", "stop": {"max_iters": 5}})");
  CHECK(run_cli({"run", "--problem", problem, "--config", bad, "--out",
                 tmp.file("t.csv")}) == 1);

  CHECK(run_cli({"run", "--problem", tmp.file("missing.json"), "--config", bad,
                 "--out", tmp.file("t.csv")}) == 1);
}
