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

// Trial execution across arrival models, CSV reports and summaries.

#ifndef AIPLAB_HARNESS_H_
#define AIPLAB_HARNESS_H_

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aiplab/instance_io.h"
#include "aiplab/nmfl.h"
#include "aiplab/online_algorithm.h"
#include "aiplab/oracles.h"
#include "aiplab/reductions.h"
#include "aiplab/smc.h"

namespace aiplab {

enum class ArrivalModel { kRandomOrder, kProphet, kTwoStage, kWithASample };

const char* ArrivalModelName(ArrivalModel model);
// "random-order", "prophet", "2stage" or "was".
ArrivalModel ParseArrivalModel(std::string_view name);

struct TrialReport {
  int64_t trial_id = 0;
  std::string model;
  std::string algorithm;
  std::string instance_id;
  int32_t n = 0;
  int32_t m = 0;
  Money alg_cost;
  Money mock_cost;
  Money backup_cost;
  Money opt_value;
  bool opt_exact = false;
  double ratio = 0;
  Money beta_final;
  int32_t phases = 0;
  uint64_t seed = 0;

  // Not part of the CSV.
  bool feasible = false;
  int64_t clamped_samples = 0;
  Money backup_raw;
};

inline constexpr const char* kTrialCsvHeader =
    "trial_id,model,algorithm,instance_id,n,m,alg_cost,mock_cost,"
    "backup_cost,opt_value,opt_exact,ratio,beta_final,phases,seed";

std::string TrialCsvRow(const TrialReport& report);
void WriteTrialCsv(std::ostream& out, const std::vector<TrialReport>& reports);

struct RunConfig {
  ArrivalModel model = ArrivalModel::kRandomOrder;
  AlgorithmKind algorithm = AlgorithmKind::kSmc;
  uint64_t seed = 1;
  uint32_t trials = 1;
  uint32_t jobs = 1;
  double alpha = 0.5;
  int32_t lambda = 2;
  // Prophet models on instances without stored distributions: D^t is
  // uniform over `support_size` distinct requests drawn once from the
  // seed; with `iid` every arrival uses their average instead.
  int32_t support_size = 3;
  bool iid = false;
  bool diagnostics = false;
  AlgorithmConfig algorithm_config;
};

// The instance as the algorithm sees it. Set cover is embedded into
// facility location ({0, inf} connection costs) for nmfl and into
// multicover (b = 1, unit costs only) for smc; request ids are unchanged.
struct PreparedInstance {
  InstanceBundle original;
  std::shared_ptr<const Problem> problem;
  // Number of decision "columns": sets, multicover columns or facilities.
  int32_t m = 0;
};

// Throws StructuralError when the algorithm cannot run on the instance.
PreparedInstance PrepareInstance(const InstanceBundle& bundle,
                                 AlgorithmKind algorithm);

// The arrival distributions used by the prophet models.
std::vector<DiscreteDistribution> ProphetDistributions(
    const InstanceBundle& bundle, const RunConfig& config);

// One diagnostic row, tagged with its trial. Columns follow the algorithm:
// nmfl rows carry kappa/xi_event/spend, smc rows covered_on_arrival/X/d/
// bought.
struct DiagnosticRow {
  int64_t trial_id = 0;
  std::variant<NmflDiagnostics, SmcDiagnostics> row;
};

struct RunResult {
  std::vector<TrialReport> reports;
  std::vector<DiagnosticRow> diagnostics;
};

// Runs config.trials trials, trial t with seed config.seed + t, on up to
// config.jobs threads. Reports are ordered by trial id and independent of
// the thread count.
RunResult RunTrials(const InstanceBundle& bundle, const RunConfig& config);

void WriteDiagnosticsCsv(std::ostream& out, AlgorithmKind algorithm,
                         const std::vector<DiagnosticRow>& rows);

struct Summary {
  int64_t trials = 0;
  double mean_ratio = 0;
  double se_ratio = 0;
  double max_ratio = 0;
  // mean_ratio / ln(m n) using the first report's m and n.
  double mean_ratio_per_log = 0;
  // mean alg_cost / mean opt_value.
  double ratio_of_means = 0;
  double mean_alg_cost = 0;
  double mean_mock_cost = 0;
  double mean_backup_cost = 0;
  int64_t infeasible = 0;
};

Summary Summarize(const std::vector<TrialReport>& reports);
void PrintSummary(std::ostream& out, const Summary& summary);

// Sample mean and standard error of the mean.
struct MeanSe {
  double mean = 0;
  double se = 0;
};
MeanSe MeanAndSe(const std::vector<double>& values);

}  // namespace aiplab

#endif  // AIPLAB_HARNESS_H_
