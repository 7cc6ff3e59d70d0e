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

// Learn-or-cover for random-order set multicover with multiplicity
// constraints, wrapped in guess-and-double.

#ifndef AIPLAB_SMC_H_
#define AIPLAB_SMC_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "aiplab/instances.h"
#include "aiplab/online_algorithm.h"

namespace aiplab {

// max(0, b - <a, z>) for a row given by its sorted support.
int32_t Deficiency(std::span<const int32_t> row, int32_t demand,
                   const Solution& z);

struct SmcState {
  // Guesses are whole numbers of sets.
  int64_t beta = 1;
  std::vector<double> x;
  Solution z;
  int32_t t = 0;
  int64_t phase_spend = 0;
  int64_t clamped_samples = 0;
};

struct SmcRoundResult {
  bool covered_on_arrival = false;
  // Fractional weight of the unbought support and the deficiency, both at
  // the start of the round.
  double weight = 0;
  int32_t deficiency = 0;
  bool weights_updated = false;
  int32_t bought = 0;
};

// One round for row i. Throws InfeasibleError if the row cannot be
// covered by the columns left.
SmcRoundResult SmcRound(const SmcInstance& instance, SmcState& state,
                        int32_t i, Rng& rng, bool sample_support_only = false);

struct SmcDiagnostics {
  int32_t round = 0;
  int32_t phase = 0;
  int64_t beta = 0;
  bool covered_on_arrival = false;
  double weight = 0;
  int32_t deficiency = 0;
  int32_t bought = 0;
  double phi_l_start = 0;
  double phi_c_start = 0;
  double phi_l = 0;
  double phi_c = 0;
};

class SmcAlgorithm final : public OnlineAlgorithm {
 public:
  SmcAlgorithm(std::shared_ptr<const SmcInstance> instance, int32_t horizon,
               const AlgorithmConfig& config);

  AlgorithmKind kind() const override { return AlgorithmKind::kSmc; }
  Money Feed(Request r, Rng& rng) override;
  const Solution& solution() const override { return state_.z; }
  AlgorithmStats stats() const override;

  const SmcState& state() const { return state_; }
  double budget() const;

  // See NmflAlgorithm::EnableDiagnostics.
  void EnableDiagnostics(const Solution& reference,
                         std::vector<Request> sequence);
  const std::vector<SmcDiagnostics>& diagnostics() const { return diag_; }

 private:
  void StartPhase(int64_t beta);
  std::pair<double, double> Potentials() const;

  std::shared_ptr<const SmcInstance> instance_;
  int32_t horizon_;
  AlgorithmConfig config_;
  SmcState state_;
  int32_t phases_ = 0;
  bool started_ = false;

  bool diagnostics_on_ = false;
  std::vector<double> x_star_;
  std::vector<Request> sequence_;
  std::vector<SmcDiagnostics> diag_;
};

}  // namespace aiplab

#endif  // AIPLAB_SMC_H_
