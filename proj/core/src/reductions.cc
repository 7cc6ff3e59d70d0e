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

#include "aiplab/reductions.h"

#include <cmath>
#include <utility>

#include "aiplab/error.h"
#include "aiplab/random.h"

namespace aiplab {
namespace {

struct InnerRun {
  std::unique_ptr<OnlineAlgorithm> algorithm;
  std::vector<Request> fed;
};

// Feeds `requests` in the order picked by the algorithm and records it.
class RecordingFeeder {
 public:
  static InnerRun Run(const AlgorithmFactory& factory,
                      std::span<const Request> requests, uint64_t seed) {
    InnerRun run;
    run.algorithm = factory(static_cast<int32_t>(requests.size()));
    if (!run.algorithm) throw StructuralError("factory returned no algorithm");
    Rng order = MakeStream(seed, "shuffle");
    Rng coins = MakeStream(seed, "algorithm");
    std::vector<Request> pending(requests.begin(), requests.end());
    while (!pending.empty()) {
      const size_t k = run.algorithm->ChooseNext(pending, order);
      if (k >= pending.size()) {
        throw StructuralError("ChooseNext returned an index out of range");
      }
      const Request next = pending[k];
      pending[k] = pending.back();
      pending.pop_back();
      run.fed.push_back(next);
      run.algorithm->Feed(next, coins);
    }
    return run;
  }
};

void CheckDistributions(const Problem& problem,
                        std::span<const DiscreteDistribution> distributions) {
  for (const auto& d : distributions) {
    if (d.support().empty()) throw StructuralError("empty distribution");
    for (const Request r : d.support()) {
      if (r.id < 0 || r.id >= problem.num_requests()) {
        throw StructuralError("distribution support outside the instance");
      }
    }
  }
}

// Serves `arrivals` in order on top of `z` with single-request backups.
// Returns the list-price cost added.
Money ServeWithBackups(const Problem& problem, Solution& z,
                       std::span<const Request> arrivals,
                       std::vector<Request>& context) {
  Money added = Money::Zero();
  for (const Request r : arrivals) {
    if (!problem.Satisfies(z, r)) {
      const Request w[] = {r};
      added += z.MaxWith(problem.Backup(w, z, context));
    }
    context.push_back(r);
  }
  return added;
}

void Finish(const Problem& problem, ReductionReport& report) {
  report.total = report.mock_cost + report.backup_cost;
  report.feasible = problem.IsFeasible(report.solution, report.realized);
}

}  // namespace

int32_t SampleSize(double alpha, int32_t n) {
  if (!(alpha > 0 && alpha <= 1)) throw DomainError("alpha must lie in (0, 1]");
  return static_cast<int32_t>(std::floor(alpha * n + 0.5));
}

ReductionReport RandomOrderRun(const Problem& problem,
                               const AlgorithmFactory& factory,
                               std::span<const Request> requests,
                               uint64_t seed) {
  InnerRun run = RecordingFeeder::Run(factory, requests, seed);
  ReductionReport report;
  report.solution = run.algorithm->solution();
  report.fed = std::move(run.fed);
  report.realized = report.fed;
  report.mock_cost = report.solution.cost();
  report.stats = run.algorithm->stats();
  Finish(problem, report);
  return report;
}

ReductionReport ProphetSingleSample(
    const Problem& problem, const AlgorithmFactory& factory,
    std::span<const DiscreteDistribution> distributions, uint64_t seed) {
  return TwoStageProphet(problem, factory, distributions, 1, seed);
}

ReductionReport TwoStageProphet(
    const Problem& problem, const AlgorithmFactory& factory,
    std::span<const DiscreteDistribution> distributions, int32_t lambda,
    uint64_t seed) {
  if (lambda < 1) throw DomainError("lambda must be a positive integer");
  CheckDistributions(problem, distributions);
  Rng mock_rng = MakeStream(seed, "mock-draw");
  std::vector<Request> mock;
  mock.reserve(distributions.size() * lambda);
  for (int32_t copy = 0; copy < lambda; ++copy) {
    for (const auto& d : distributions) mock.push_back(d.Sample(mock_rng));
  }
  InnerRun run = RecordingFeeder::Run(factory, mock, seed);

  ReductionReport report;
  report.stats = run.algorithm->stats();
  report.solution = run.algorithm->solution();
  report.mock_cost = report.solution.cost();
  report.fed = std::move(run.fed);

  Rng real_rng = MakeStream(seed, "real-draw");
  for (const auto& d : distributions) {
    report.realized.push_back(d.Sample(real_rng));
  }
  // z_1 only ever holds variables outside z_0, so its list price is the
  // cost the backups add to max(z_0, z_1).
  std::vector<Request> context = report.fed;
  report.backup_raw =
      ServeWithBackups(problem, report.solution, report.realized, context);
  report.backup_cost = report.backup_raw * lambda;
  Finish(problem, report);
  return report;
}

ReductionReport OnlineWithASample(const Problem& problem,
                                  const AlgorithmFactory& factory,
                                  std::span<const Request> adversary_order,
                                  double alpha, uint64_t seed) {
  const int32_t n = static_cast<int32_t>(adversary_order.size());
  const int32_t k = SampleSize(alpha, n);
  // Partial Fisher-Yates: the first k positions become a uniform subset.
  std::vector<int32_t> positions(n);
  for (int32_t i = 0; i < n; ++i) positions[i] = i;
  Rng mock_rng = MakeStream(seed, "mock-draw");
  for (int32_t i = 0; i < k; ++i) {
    const int32_t j =
        i + static_cast<int32_t>(UniformIndex(mock_rng, n - i));
    std::swap(positions[i], positions[j]);
  }
  std::vector<Request> samples;
  for (int32_t i = 0; i < k; ++i) {
    samples.push_back(adversary_order[positions[i]]);
  }
  InnerRun run = RecordingFeeder::Run(factory, samples, seed);

  ReductionReport report;
  report.stats = run.algorithm->stats();
  report.solution = run.algorithm->solution();
  report.mock_cost = report.solution.cost();
  report.fed = std::move(run.fed);
  report.realized.assign(adversary_order.begin(), adversary_order.end());
  std::vector<Request> context = report.fed;
  report.backup_raw =
      ServeWithBackups(problem, report.solution, report.realized, context);
  report.backup_cost = report.backup_raw;
  Finish(problem, report);
  return report;
}

}  // namespace aiplab
