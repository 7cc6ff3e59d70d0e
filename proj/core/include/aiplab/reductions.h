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

// Meta-algorithms that turn a random-order algorithm into algorithms for
// the single-sample prophet, 2-stage prophet and online-with-a-sample
// models. The inner algorithm is a black box built by a factory.
//
// All randomness derives from one seed through named substreams:
// "mock-draw" (sampled requests), "shuffle" (the order fed to the inner
// algorithm), "real-draw" (realized arrivals) and "algorithm" (the inner
// algorithm's own coins). Runs with equal seeds are therefore paired.

#ifndef AIPLAB_REDUCTIONS_H_
#define AIPLAB_REDUCTIONS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "aiplab/aip.h"
#include "aiplab/instances.h"
#include "aiplab/online_algorithm.h"

namespace aiplab {

// Builds a fresh inner algorithm for a run that will feed `horizon`
// requests.
using AlgorithmFactory =
    std::function<std::unique_ptr<OnlineAlgorithm>(int32_t horizon)>;

struct ReductionReport {
  Solution solution;
  // Requests the inner algorithm saw, in the order it saw them.
  std::vector<Request> fed;
  // Realized arrivals, in arrival order.
  std::vector<Request> realized;
  // c of the inner algorithm's output (z-hat, or z_0 for 2-stage).
  Money mock_cost = Money::Zero();
  // Backup purchases at list price (c(z_1) for 2-stage).
  Money backup_raw = Money::Zero();
  // Backup purchases as charged: backup_raw times the markup.
  Money backup_cost = Money::Zero();
  // mock_cost + backup_cost.
  Money total = Money::Zero();
  AlgorithmStats stats;
  bool feasible = false;
};

// Feeds every request of `requests` to the algorithm in uniformly random
// order (the plain random-order model, no backups).
ReductionReport RandomOrderRun(const Problem& problem,
                               const AlgorithmFactory& factory,
                               std::span<const Request> requests,
                               uint64_t seed);

// One sample per distribution forms the mock run, fed to the algorithm in
// random order; real arrivals v^t ~ D^t then come in order 1..n and are
// served by z <- max(z, backup(v^t | z)).
ReductionReport ProphetSingleSample(
    const Problem& problem, const AlgorithmFactory& factory,
    std::span<const DiscreteDistribution> distributions, uint64_t seed);

// lambda mock runs, fed together in random order, give the stage-1
// solution z_0 at list price; unsatisfied real arrivals are served into
// z_1 at lambda times list price.
ReductionReport TwoStageProphet(
    const Problem& problem, const AlgorithmFactory& factory,
    std::span<const DiscreteDistribution> distributions, int32_t lambda,
    uint64_t seed);

// A uniformly random subset of round(alpha n) adversarial requests is fed
// to the algorithm in random order; then all n requests arrive in the
// adversary's order and are served by backups.
ReductionReport OnlineWithASample(const Problem& problem,
                                  const AlgorithmFactory& factory,
                                  std::span<const Request> adversary_order,
                                  double alpha, uint64_t seed);

// round(alpha n) with halves rounded up.
int32_t SampleSize(double alpha, int32_t n);

}  // namespace aiplab

#endif  // AIPLAB_REDUCTIONS_H_
