// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// aiplab: generate instances, run trials, evaluate optima, and verify the
// 2x2 prophet-versus-iid fixture.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "aiplab/error.h"
#include "aiplab/generators.h"
#include "aiplab/harness.h"
#include "aiplab/instance_io.h"
#include "aiplab/oracles.h"

namespace {

using namespace aiplab;

struct GenOptions {
  std::string type = "smc";
  int32_t n = 200;
  int32_t m = 100;
  double density = 0.05;
  int32_t b_max = 3;
  bool metric = false;
  double inf_fraction = 0;
  double cost_lo = 1;
  double cost_hi = 1;
  int32_t support_size = 0;
  uint64_t seed = 1;
  std::string id;
  std::string out;
};

struct RunOptions {
  std::string instance;
  std::string model = "random-order";
  std::string algo = "smc";
  std::string out;
  std::string diagnostics_out;
  double beta0 = 0;
  RunConfig config;
};

struct EvalOptions {
  std::string instance;
  std::string out;
};

struct CounterexampleOptions {
  int32_t rows = 2;
  int32_t cols = 2;
};

// Writes to `path`, or stdout when empty.
template <typename Fn>
void WithOutput(const std::string& path, Fn fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  fn(out);
  if (!out) throw Error("failed writing " + path);
}

int Gen(const GenOptions& o) {
  InstanceBundle bundle;
  bundle.id = o.id.empty() ? o.type + "-" + std::to_string(o.seed) : o.id;
  if (o.type == "setcover") {
    bundle.problem = GenerateSetCover(o.seed, o.n, o.m, o.density,
                                      {o.cost_lo, o.cost_hi});
  } else if (o.type == "smc") {
    bundle.problem = GenerateSetMulticover(o.seed, o.n, o.m, o.density,
                                           o.b_max);
  } else if (o.type == "fl") {
    FlCostModel model;
    model.metric = o.metric;
    model.infinite_fraction = o.inf_fraction;
    bundle.problem = GenerateFacilityLocation(o.seed, o.m, o.n, model);
  } else {
    throw StructuralError("unknown instance type '" + o.type + "'");
  }
  if (o.support_size > 0) {
    RunConfig config;
    config.seed = o.seed;
    config.support_size = o.support_size;
    bundle.distributions = ProphetDistributions(bundle, config);
  }
  WithOutput(o.out, [&](std::ostream& out) { out << SerializeInstance(bundle); });
  return 0;
}

int Run(RunOptions o) {
  const InstanceBundle bundle = LoadInstance(o.instance);
  o.config.model = ParseArrivalModel(o.model);
  o.config.algorithm = ParseAlgorithmKind(o.algo);
  if (o.beta0 > 0) o.config.algorithm_config.beta0 = Money::FromDouble(o.beta0);
  const RunResult result = RunTrials(bundle, o.config);
  WithOutput(o.out, [&](std::ostream& out) { WriteTrialCsv(out, result.reports); });
  if (o.config.diagnostics) {
    std::string path = o.diagnostics_out;
    if (path.empty() && !o.out.empty()) path = o.out + ".diag.csv";
    if (path.empty()) {
      std::cerr << "--diagnostics needs --out or --diagnostics-out\n";
      return 2;
    }
    WithOutput(path, [&](std::ostream& out) {
      WriteDiagnosticsCsv(out, o.config.algorithm, result.diagnostics);
    });
  }
  PrintSummary(o.out.empty() ? std::cerr : std::cout, Summarize(result.reports));
  return 0;
}

int Eval(const EvalOptions& o) {
  const InstanceBundle bundle = LoadInstance(o.instance);
  const std::vector<Request> all = AllRequests(*bundle.problem);
  const OptResult opt = BestOpt(*bundle.problem, all);
  WithOutput(o.out, [&](std::ostream& out) {
    out << "instance_id,type,requests,opt_value,opt_exact\n"
        << bundle.id << "," << ProblemKindName(bundle.problem->kind()) << ","
        << all.size() << "," << opt.value.ToString() << ","
        << (opt.exact ? "true" : "false") << "\n";
  });
  return 0;
}

std::string RationalString(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int Counterexample(const CounterexampleOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  const ProphetFixture fixture = GridCounterexample(o.rows, o.cols);
  const ExpectedOpt pht =
      ExpectedOptIndependent(*fixture.instance, fixture.prophet);
  const ExpectedOpt iid =
      ExpectedOptIid(*fixture.instance, fixture.averaged, o.rows);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  std::cout << "grid " << o.rows << "x" << o.cols << ", "
            << fixture.instance->num_sets() << " unit-cost sets\n";
  std::cout << "opt_pht = " << RationalString(*pht.exact) << " ("
            << pht.outcomes << " outcomes)\n";
  if (iid.exact) {
    std::cout << "E[opt_iid] = " << RationalString(*iid.exact) << " = "
              << iid.value << " (" << iid.outcomes << " outcomes)\n";
    std::cout << "ratio = " << RationalString(*iid.exact / *pht.exact)
              << " = " << static_cast<double>(*iid.exact / *pht.exact) << "\n";
  } else {
    std::cout << "E[opt_iid] ~ " << iid.value << " (se "
              << iid.standard_error << ", " << iid.outcomes << " samples)\n";
  }
  std::cout << "elapsed_seconds = " << seconds << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online covering experiments across arrival models"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--type", gen.type, "setcover|smc|fl")
      ->check(CLI::IsMember({"setcover", "smc", "fl"}));
  gen_cmd->add_option("--n", gen.n, "Elements, rows or clients");
  gen_cmd->add_option("--m", gen.m, "Sets, columns or facilities");
  gen_cmd->add_option("--density", gen.density, "Membership probability");
  gen_cmd->add_option("--b-max", gen.b_max, "Largest multicover demand");
  gen_cmd->add_flag("--metric", gen.metric, "Euclidean facility location");
  gen_cmd->add_option("--inf-fraction", gen.inf_fraction,
                      "Share of infinite connection costs");
  gen_cmd->add_option("--cost-lo", gen.cost_lo, "Smallest set cost");
  gen_cmd->add_option("--cost-hi", gen.cost_hi, "Largest set cost");
  gen_cmd->add_option("--support-size", gen.support_size,
                      "Also store per-arrival distributions of this support");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--id", gen.id, "Instance id");
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run seeded trials, write CSV");
  run_cmd->add_option("--instance", run.instance, "Instance JSON")
      ->required()
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--model", run.model, "Arrival model")
      ->check(CLI::IsMember({"random-order", "prophet", "2stage", "was"}));
  run_cmd->add_option("--algo", run.algo, "Online algorithm")
      ->check(CLI::IsMember({"nmfl", "smc", "mfl"}));
  run_cmd->add_option("--seed", run.config.seed, "Base seed");
  run_cmd->add_option("--trials", run.config.trials, "Number of trials");
  run_cmd->add_option("--jobs", run.config.jobs, "Worker threads");
  run_cmd->add_option("--alpha", run.config.alpha, "Sample fraction (was)")
      ->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--lambda", run.config.lambda, "Stage-2 markup")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--support-size", run.config.support_size,
                      "Support of generated prophet distributions");
  run_cmd->add_option("--doubling-k", run.config.algorithm_config.doubling_k,
                      "Phase budget multiplier");
  run_cmd->add_option("--beta0", run.beta0, "Initial optimum guess");
  run_cmd->add_option("--out", run.out, "CSV path (default stdout)");
  run_cmd->add_option("--diagnostics-out", run.diagnostics_out,
                      "Diagnostics CSV path (default <out>.diag.csv)");
  run_cmd->add_flag("--diagnostics", run.config.diagnostics,
                    "Record per-round potentials (random-order model)");
  run_cmd->add_flag("--iid", run.config.iid,
                    "Use one averaged distribution for every arrival");
  run_cmd->add_flag("--recompute-backup",
                    run.config.algorithm_config.recompute_backup,
                    "nmfl: connect after the sampled facilities open");
  run_cmd->add_flag("--sample-support-only",
                    run.config.algorithm_config.sample_support_only,
                    "smc: sample only the arriving row's columns");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Optimum of an instance");
  eval_cmd->add_option("--instance", eval.instance, "Instance JSON")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--out", eval.out, "Output path (default stdout)");

  CounterexampleOptions ce;
  auto* ce_cmd = app.add_subcommand(
      "counterexample", "Exact prophet vs iid optimum on the grid fixture");
  ce_cmd->add_option("--rows", ce.rows, "Grid rows")->check(CLI::PositiveNumber);
  ce_cmd->add_option("--cols", ce.cols, "Grid columns")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen_cmd) return Gen(gen);
    if (*run_cmd) return Run(run);
    if (*eval_cmd) return Eval(eval);
    if (*ce_cmd) return Counterexample(ce);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
