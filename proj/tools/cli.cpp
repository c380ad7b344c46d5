// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "cli.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superior/config.hpp"
#include "superior/eval.hpp"
#include "superior/experiment.hpp"
#include "superior/io.hpp"
#include "superior/problems.hpp"

namespace superior::cli {

namespace {

struct GenOptions {
  std::string generator = "random_halfspaces";
  int n = 2;
  int m = 1;
  double radius = 1.0;
  double density = 0.1;
  bool inconsistent = false;
  std::uint64_t seed = 0;
  std::string out;
};

int do_gen(const GenOptions& opt) {
  ProblemSpec spec;
  if (opt.generator == "random_halfspaces") {
    spec = RandomHalfspaces{opt.n, opt.m, opt.radius, opt.seed};
  } else if (opt.generator == "random_hyperplanes") {
    spec = RandomHyperplanes{opt.n, opt.m, opt.seed, !opt.inconsistent};
  } else if (opt.generator == "sparse_system") {
    spec = SparseSystem{opt.n, opt.m, opt.density, opt.seed};
  } else {
    throw ConfigError("field 'generator' has unknown value '" + opt.generator +
                      "'");
  }
  GeneratedProblem problem = generate(spec);
  const std::string doc = problem_json(
      ProblemDocument{problem.family, problem.witness, problem.x0});
  if (opt.out.empty()) {
    std::cout << doc;
  } else {
    write_file_atomic(opt.out, doc);
  }
  return 0;
}

Vector vector_from_json_file(const std::string& path, const char* what) {
  const auto j = nlohmann::json::parse(read_file(path), nullptr, false);
  if (j.is_discarded() || !j.is_array() || j.empty()) {
    throw ConfigError(std::string(what) + " must be a JSON array of numbers");
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

struct RunOptions {
  std::string problem;
  std::string config;
  std::string out;
  std::string points_out;
  std::string x0_file;
};

IterateTrace run_one(const ProblemDocument& doc, const std::string& config_path,
                     const std::optional<Vector>& x0_override) {
  const RunConfig config = run_config_from_json(read_file(config_path));
  Vector x0;
  if (x0_override) {
    x0 = *x0_override;
  } else if (doc.x0) {
    x0 = *doc.x0;
  } else {
    throw ConfigError("problem document has no 'x0'; pass --x0");
  }
  return run_configured(doc.family, config, x0);
}

int do_run(const RunOptions& opt) {
  const ProblemDocument doc = problem_from_json(read_file(opt.problem));
  std::optional<Vector> x0;
  if (!opt.x0_file.empty()) x0 = vector_from_json_file(opt.x0_file, "--x0");
  const IterateTrace trace = run_one(doc, opt.config, x0);
  write_file_atomic(opt.out, trace_csv(trace));
  if (!opt.points_out.empty()) {
    write_file_atomic(opt.points_out, trace_points_json(trace));
  }
  std::cout << "stop_reason=" << to_string(trace.stop_reason)
            << " iterations=" << trace.records.back().k
            << " final_prox=" << trace.records.back().prox << "\n";
  return 0;
}

struct CompareOptions {
  std::string problem;
  std::string config_a;
  std::string config_b;
  std::string out_dir;
  int samples = 64;
};

int do_compare(const CompareOptions& opt) {
  const ProblemDocument doc = problem_from_json(read_file(opt.problem));
  const IterateTrace trace_a = run_one(doc, opt.config_a, std::nullopt);
  const IterateTrace trace_b = run_one(doc, opt.config_b, std::nullopt);
  const auto curve_a = curve_from_indices(trace_a, monotone_subsequence(trace_a));
  const auto curve_b = curve_from_indices(trace_b, monotone_subsequence(trace_b));
  const CurveComparison cmp = better_targeted(curve_a, curve_b, opt.samples);
  write_file_atomic(opt.out_dir + "/curve-a.csv", curve_csv(curve_a));
  write_file_atomic(opt.out_dir + "/curve-b.csv", curve_csv(curve_b));
  write_file_atomic(opt.out_dir + "/compare.json", comparison_json(cmp));
  std::cout << "verdict=" << to_string(cmp.verdict) << " t=" << cmp.t
            << " u=" << cmp.u << "\n";
  return 0;
}

struct ExperimentOptions {
  std::string spec;
  std::string out_dir;
};

int do_experiment(const ExperimentOptions& opt) {
  ExperimentSpec spec = experiment_from_json(read_file(opt.spec));
  if (!opt.out_dir.empty()) spec.output_dir = opt.out_dir;
  const ExperimentReport report = run_experiment(spec);
  std::cout << "summary=" << report.output_dir << "/summary.json\n";
  for (const auto& stats : report.comparisons) {
    std::cout << "arm=" << stats.arm << " eps=" << stats.eps
              << " fraction_strictly_lower=" << stats.fraction_strictly_lower
              << "\n";
  }
  if (report.failed_runs > 0) {
    std::cout << "failed_runs=" << report.failed_runs << "\n";
  }
  return 0;
}

struct FejerOptions {
  std::string points;
  std::string problem;
  std::string witness;
  double tolerance = 1e-10;
  std::string out;
};

int do_fejer(const FejerOptions& opt) {
  const auto j = nlohmann::json::parse(read_file(opt.points), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("points") ||
      !j["points"].is_array() || j["points"].empty()) {
    throw ConfigError("points document needs a nonempty 'points' array");
  }
  IterateTrace trace;
  long k = 0;
  for (const auto& p : j["points"]) {
    TraceRecord rec;
    rec.k = k++;
    rec.point.resize(static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      rec.point[static_cast<Eigen::Index>(i)] = p[i].get<double>();
    }
    trace.records.push_back(std::move(rec));
  }

  Vector reference;
  if (!opt.witness.empty()) {
    reference = vector_from_json_file(opt.witness, "--witness");
  } else if (!opt.problem.empty()) {
    const ProblemDocument doc = problem_from_json(read_file(opt.problem));
    if (!doc.witness) {
      throw ConfigError("problem document has no 'witness'; pass --witness");
    }
    reference = *doc.witness;
  } else {
    throw ConfigError("one of --witness or --problem is required");
  }

  const FejerReport report = fejer_monitor(trace, reference, opt.tolerance);
  const std::string doc = fejer_json(report);
  if (opt.out.empty()) {
    std::cout << doc;
  } else {
    write_file_atomic(opt.out, doc);
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{
      "Feasibility-seeking projection methods, their superiorized versions, "
      "and evaluation tooling"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a problem instance");
  gen_cmd->add_option("--generator", gen.generator,
                      "random_halfspaces | random_hyperplanes | sparse_system");
  gen_cmd->add_option("--n", gen.n, "dimension")->required();
  gen_cmd->add_option("--m", gen.m, "number of constraints")->required();
  gen_cmd->add_option("--radius", gen.radius, "feasible ball radius");
  gen_cmd->add_option("--density", gen.density, "sparse row density");
  gen_cmd->add_flag("--inconsistent", gen.inconsistent,
                    "make the hyperplane system inconsistent");
  gen_cmd->add_option("--seed", gen.seed, "instance seed");
  gen_cmd->add_option("--out", gen.out, "output path (stdout when omitted)");

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run one configuration");
  run_cmd->add_option("--problem", run.problem, "problem JSON")->required();
  run_cmd->add_option("--config", run.config, "run config JSON")->required();
  run_cmd->add_option("--out", run.out, "trace CSV path")->required();
  run_cmd->add_option("--points", run.points_out, "also write points JSON");
  run_cmd->add_option("--x0", run.x0_file,
                      "JSON array overriding the problem's x0");

  CompareOptions cmp;
  auto* cmp_cmd =
      app.add_subcommand("compare", "Run two configurations and compare their "
                                    "proximity-target curves");
  cmp_cmd->add_option("--problem", cmp.problem, "problem JSON")->required();
  cmp_cmd->add_option("--config-a", cmp.config_a, "first config")->required();
  cmp_cmd->add_option("--config-b", cmp.config_b, "second config")->required();
  cmp_cmd->add_option("--out-dir", cmp.out_dir, "output directory")->required();
  cmp_cmd->add_option("--samples", cmp.samples, "comparison fill samples");

  ExperimentOptions exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a batch experiment");
  exp_cmd->add_option("--spec", exp.spec, "experiment spec JSON")->required();
  exp_cmd->add_option("--out-dir", exp.out_dir, "override the spec output dir");

  FejerOptions fejer;
  auto* fejer_cmd = app.add_subcommand(
      "fejer", "Monitor distances to a feasible reference along a trace");
  fejer_cmd->add_option("--points", fejer.points, "points JSON from run")
      ->required();
  fejer_cmd->add_option("--problem", fejer.problem,
                        "problem JSON carrying a witness");
  fejer_cmd->add_option("--witness", fejer.witness,
                        "JSON array with the reference point");
  fejer_cmd->add_option("--tolerance", fejer.tolerance, "violation tolerance");
  fejer_cmd->add_option("--out", fejer.out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
    if (gen_cmd->parsed()) return do_gen(gen);
    if (run_cmd->parsed()) return do_run(run);
    if (cmp_cmd->parsed()) return do_compare(cmp);
    if (exp_cmd->parsed()) return do_experiment(exp);
    if (fejer_cmd->parsed()) return do_fejer(fejer);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace superior::cli
