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

#include "aiplab/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>

#include "aiplab/error.h"
#include "aiplab/random.h"

namespace aiplab {
namespace {

std::string FormatDouble(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

double Ratio(Money alg, Money opt) {
  if (opt.is_infinite() || alg.is_infinite()) {
    return std::numeric_limits<double>::infinity();
  }
  if (opt == Money::Zero()) {
    return alg == Money::Zero() ? 1.0
                                : std::numeric_limits<double>::infinity();
  }
  return alg.ToDouble() / opt.ToDouble();
}

struct TrialOutput {
  TrialReport report;
  std::vector<DiagnosticRow> diagnostics;
};

class TrialRunner {
 public:
  TrialRunner(const InstanceBundle& bundle, const RunConfig& config)
      : config_(config), prepared_(PrepareInstance(bundle, config.algorithm)) {
    requests_ = AllRequests(*prepared_.problem);
    if (config.model == ArrivalModel::kProphet ||
        config.model == ArrivalModel::kTwoStage) {
      distributions_ = ProphetDistributions(bundle, config);
    } else {
      full_opt_ = BestOpt(*prepared_.original.problem, requests_);
    }
  }

  TrialOutput Run(uint32_t trial) const {
    const uint64_t seed = config_.seed + trial;
    const AlgorithmFactory factory = [this](int32_t horizon) {
      return MakeAlgorithm(config_.algorithm, prepared_.problem, horizon,
                           config_.algorithm_config);
    };
    TrialOutput out;
    ReductionReport run;
    switch (config_.model) {
      case ArrivalModel::kRandomOrder:
        run = config_.diagnostics && config_.algorithm != AlgorithmKind::kMfl
                  ? DiagnosticRun(seed, trial, out.diagnostics)
                  : RandomOrderRun(*prepared_.problem, factory, requests_,
                                   seed);
        break;
      case ArrivalModel::kProphet:
        run = ProphetSingleSample(*prepared_.problem, factory, distributions_,
                                  seed);
        break;
      case ArrivalModel::kTwoStage:
        run = TwoStageProphet(*prepared_.problem, factory, distributions_,
                              config_.lambda, seed);
        break;
      case ArrivalModel::kWithASample:
        run = OnlineWithASample(*prepared_.problem, factory, requests_,
                                config_.alpha, seed);
        break;
    }

    TrialReport& r = out.report;
    r.trial_id = trial;
    r.model = ArrivalModelName(config_.model);
    r.algorithm = AlgorithmKindName(config_.algorithm);
    r.instance_id = prepared_.original.id;
    r.n = static_cast<int32_t>(run.realized.size());
    r.m = prepared_.m;
    r.alg_cost = run.total;
    r.mock_cost = run.mock_cost;
    r.backup_cost = run.backup_cost;
    r.backup_raw = run.backup_raw;
    if (full_opt_) {
      r.opt_value = full_opt_->value;
      r.opt_exact = full_opt_->exact;
    } else {
      const OptResult opt = BestOpt(*prepared_.original.problem, run.realized);
      r.opt_value = opt.value;
      r.opt_exact = opt.exact;
    }
    r.ratio = Ratio(r.alg_cost, r.opt_value);
    r.beta_final = run.stats.beta_final;
    r.phases = run.stats.phases;
    r.clamped_samples = run.stats.clamped_samples;
    r.seed = seed;
    r.feasible = run.feasible;
    return out;
  }

 private:
  // Same streams as RandomOrderRun, with potentials recorded against an
  // optimum of the whole request set.
  ReductionReport DiagnosticRun(uint64_t seed, uint32_t trial,
                                std::vector<DiagnosticRow>& rows) const {
    Rng order_rng = MakeStream(seed, "shuffle");
    Rng coins = MakeStream(seed, "algorithm");
    const std::vector<Request> order = UniformRevealOrder(requests_, order_rng);
    const OptResult reference = BestOpt(*prepared_.problem, requests_);
    auto algorithm =
        MakeAlgorithm(config_.algorithm, prepared_.problem,
                      static_cast<int32_t>(order.size()),
                      config_.algorithm_config);
    auto* nmfl = dynamic_cast<NmflAlgorithm*>(algorithm.get());
    auto* smc = dynamic_cast<SmcAlgorithm*>(algorithm.get());
    if (nmfl) nmfl->EnableDiagnostics(reference.solution, order);
    if (smc) smc->EnableDiagnostics(reference.solution, order);
    for (const Request r : order) algorithm->Feed(r, coins);
    if (nmfl) {
      for (const auto& d : nmfl->diagnostics()) rows.push_back({trial, d});
    }
    if (smc) {
      for (const auto& d : smc->diagnostics()) rows.push_back({trial, d});
    }
    ReductionReport report;
    report.solution = algorithm->solution();
    report.fed = order;
    report.realized = order;
    report.mock_cost = report.solution.cost();
    report.total = report.mock_cost;
    report.stats = algorithm->stats();
    report.feasible = prepared_.problem->IsFeasible(report.solution, order);
    return report;
  }

  const RunConfig& config_;
  PreparedInstance prepared_;
  std::vector<Request> requests_;
  std::vector<DiscreteDistribution> distributions_;
  std::optional<OptResult> full_opt_;
};

}  // namespace

const char* ArrivalModelName(ArrivalModel model) {
  switch (model) {
    case ArrivalModel::kRandomOrder:
      return "random-order";
    case ArrivalModel::kProphet:
      return "prophet";
    case ArrivalModel::kTwoStage:
      return "2stage";
    case ArrivalModel::kWithASample:
      return "was";
  }
  return "?";
}

ArrivalModel ParseArrivalModel(std::string_view name) {
  if (name == "random-order") return ArrivalModel::kRandomOrder;
  if (name == "prophet") return ArrivalModel::kProphet;
  if (name == "2stage") return ArrivalModel::kTwoStage;
  if (name == "was") return ArrivalModel::kWithASample;
  throw StructuralError("unknown arrival model '" + std::string(name) + "'");
}

std::string TrialCsvRow(const TrialReport& r) {
  std::string row;
  row += std::to_string(r.trial_id) + ",";
  row += r.model + "," + r.algorithm + "," + r.instance_id + ",";
  row += std::to_string(r.n) + "," + std::to_string(r.m) + ",";
  row += r.alg_cost.ToString() + "," + r.mock_cost.ToString() + ",";
  row += r.backup_cost.ToString() + "," + r.opt_value.ToString() + ",";
  row += std::string(r.opt_exact ? "true" : "false") + ",";
  row += FormatDouble(r.ratio) + "," + r.beta_final.ToString() + ",";
  row += std::to_string(r.phases) + "," + std::to_string(r.seed);
  return row;
}

void WriteTrialCsv(std::ostream& out, const std::vector<TrialReport>& reports) {
  out << kTrialCsvHeader << "\n";
  for (const auto& r : reports) out << TrialCsvRow(r) << "\n";
}

PreparedInstance PrepareInstance(const InstanceBundle& bundle,
                                 AlgorithmKind algorithm) {
  if (!bundle.problem) throw StructuralError("empty instance");
  PreparedInstance p;
  p.original = bundle;
  const auto* sc = bundle.set_cover();
  const auto* smc = bundle.multicover();
  const auto* fl = bundle.facility_location();
  switch (algorithm) {
    case AlgorithmKind::kNmfl:
      if (sc) {
        p.problem = SetCoverAsFacilityLocation(*sc);
      } else if (fl) {
        p.problem = bundle.problem;
      } else {
        throw StructuralError("nmfl runs on facility location or set cover");
      }
      break;
    case AlgorithmKind::kMfl:
      if (!fl || !fl->metric()) {
        throw StructuralError("mfl runs on metric facility location only");
      }
      p.problem = bundle.problem;
      break;
    case AlgorithmKind::kSmc:
      if (sc) {
        p.problem = SetCoverAsMulticover(*sc);
      } else if (smc) {
        p.problem = bundle.problem;
      } else {
        throw StructuralError("smc runs on multicover or unit-cost set cover");
      }
      break;
  }
  if (sc) p.m = sc->num_sets();
  if (smc) p.m = smc->num_columns();
  if (fl) p.m = fl->num_facilities();
  return p;
}

std::vector<DiscreteDistribution> ProphetDistributions(
    const InstanceBundle& bundle, const RunConfig& config) {
  std::vector<DiscreteDistribution> dists = bundle.distributions;
  if (dists.empty()) {
    const int32_t n = bundle.problem->num_requests();
    if (n == 0) return {};
    const int32_t s = std::clamp(config.support_size, 1, n);
    Rng rng = MakeStream(config.seed, "distributions");
    std::vector<Request> ids = AllRequests(*bundle.problem);
    for (int32_t t = 0; t < n; ++t) {
      for (int32_t i = 0; i < s; ++i) {
        const int32_t j = i + static_cast<int32_t>(UniformIndex(rng, n - i));
        std::swap(ids[i], ids[j]);
      }
      dists.push_back(DiscreteDistribution::Uniform(
          std::vector<Request>(ids.begin(), ids.begin() + s)));
    }
  }
  if (config.iid) {
    const DiscreteDistribution avg = DiscreteDistribution::Average(dists);
    dists.assign(dists.size(), avg);
  }
  return dists;
}

RunResult RunTrials(const InstanceBundle& bundle, const RunConfig& config) {
  const TrialRunner runner(bundle, config);
  const uint32_t trials = config.trials;
  std::vector<TrialOutput> outputs(trials);
  std::vector<std::exception_ptr> errors(trials);
  std::atomic<uint32_t> next{0};
  auto work = [&] {
    for (uint32_t t = next++; t < trials; t = next++) {
      try {
        outputs[t] = runner.Run(t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const uint32_t jobs = std::max<uint32_t>(1, std::min(config.jobs, trials));
  std::vector<std::thread> pool;
  for (uint32_t j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  RunResult result;
  for (auto& o : outputs) {
    result.reports.push_back(std::move(o.report));
    for (auto& d : o.diagnostics) result.diagnostics.push_back(std::move(d));
  }
  return result;
}

void WriteDiagnosticsCsv(std::ostream& out, AlgorithmKind algorithm,
                         const std::vector<DiagnosticRow>& rows) {
  if (algorithm == AlgorithmKind::kNmfl) {
    out << "trial_id,round,kappa,xi_event,spend,phi_l,phi_c,phase,beta,"
           "phi_l_start,phi_c_start\n";
  } else {
    out << "trial_id,round,covered_on_arrival,X,d,bought,phi_l,phi_c,phase,"
           "beta,phi_l_start,phi_c_start\n";
  }
  for (const auto& row : rows) {
    out << row.trial_id << ",";
    if (const auto* d = std::get_if<NmflDiagnostics>(&row.row)) {
      out << d->round << "," << d->kappa.ToString() << ","
          << (d->xi ? 1 : 0) << "," << d->spend.ToString() << ","
          << FormatDouble(d->phi_l) << "," << FormatDouble(d->phi_c) << ","
          << d->phase << "," << d->beta.ToString() << ","
          << FormatDouble(d->phi_l_start) << ","
          << FormatDouble(d->phi_c_start) << "\n";
    } else if (const auto* s = std::get_if<SmcDiagnostics>(&row.row)) {
      out << s->round << "," << (s->covered_on_arrival ? 1 : 0) << ","
          << FormatDouble(s->weight) << "," << s->deficiency << ","
          << s->bought << "," << FormatDouble(s->phi_l) << ","
          << FormatDouble(s->phi_c) << "," << s->phase << "," << s->beta
          << "," << FormatDouble(s->phi_l_start) << ","
          << FormatDouble(s->phi_c_start) << "\n";
    }
  }
}

MeanSe MeanAndSe(const std::vector<double>& values) {
  MeanSe out;
  if (values.empty()) return out;
  double sum = 0;
  for (const double v : values) sum += v;
  const double n = static_cast<double>(values.size());
  out.mean = sum / n;
  if (values.size() < 2) return out;
  double ss = 0;
  for (const double v : values) ss += (v - out.mean) * (v - out.mean);
  out.se = std::sqrt(ss / (n - 1) / n);
  return out;
}

Summary Summarize(const std::vector<TrialReport>& reports) {
  Summary s;
  s.trials = static_cast<int64_t>(reports.size());
  if (reports.empty()) return s;
  std::vector<double> ratios;
  double alg = 0, opt = 0, mock = 0, backup = 0;
  for (const auto& r : reports) {
    ratios.push_back(r.ratio);
    s.max_ratio = std::max(s.max_ratio, r.ratio);
    alg += r.alg_cost.ToDouble();
    opt += r.opt_value.ToDouble();
    mock += r.mock_cost.ToDouble();
    backup += r.backup_cost.ToDouble();
    if (!r.feasible) ++s.infeasible;
  }
  const MeanSe ms = MeanAndSe(ratios);
  s.mean_ratio = ms.mean;
  s.se_ratio = ms.se;
  const double n = static_cast<double>(reports.size());
  s.mean_alg_cost = alg / n;
  s.mean_mock_cost = mock / n;
  s.mean_backup_cost = backup / n;
  s.ratio_of_means = opt > 0 ? alg / opt : 0;
  const double mn = static_cast<double>(reports.front().m) *
                    std::max(reports.front().n, 1);
  s.mean_ratio_per_log = mn > 1 ? s.mean_ratio / std::log(mn) : s.mean_ratio;
  return s;
}

void PrintSummary(std::ostream& out, const Summary& s) {
  out << "trials=" << s.trials << " mean_ratio=" << FormatDouble(s.mean_ratio)
      << " se=" << FormatDouble(s.se_ratio)
      << " max_ratio=" << FormatDouble(s.max_ratio)
      << " ratio_per_ln_mn=" << FormatDouble(s.mean_ratio_per_log)
      << " ratio_of_means=" << FormatDouble(s.ratio_of_means)
      << " mean_alg_cost=" << FormatDouble(s.mean_alg_cost)
      << " mean_mock_cost=" << FormatDouble(s.mean_mock_cost)
      << " mean_backup_cost=" << FormatDouble(s.mean_backup_cost)
      << " infeasible=" << s.infeasible << "\n";
}

}  // namespace aiplab
