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

// Learn-or-cover for random-order non-metric facility location, wrapped in
// guess-and-double on the optimum estimate beta.

#ifndef AIPLAB_NMFL_H_
#define AIPLAB_NMFL_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "aiplab/instances.h"
#include "aiplab/online_algorithm.h"

namespace aiplab {

struct KappaResult {
  Money kappa;
  int32_t facility = -1;
};

// min_f 1{f closed in z} c_f + c_fv, lowest facility id on ties. Infinite
// connection costs never attain the minimum. Throws InfeasibleError when
// every connection of v is infinite.
KappaResult Kappa(const FlInstance& instance, const Solution& z, int32_t v);

// {f : c_fv <= kappa / 2}, ascending.
std::vector<int32_t> GammaSet(const FlInstance& instance, Money kappa,
                              int32_t v);

// Initial weights for a guess beta: x_f = beta / (c_f m') on
// F' = {f : beta/m <= c_f <= beta}, m' = |F'|, zero elsewhere.
std::vector<double> InitialNmflWeights(const FlInstance& instance, Money beta);

struct NmflState {
  Money beta;
  std::vector<double> x;
  // Open facilities and connections, in the instance's variable layout.
  Solution z;
  // Rounds served so far, across phases.
  int32_t t = 0;
  Money phase_spend = Money::Zero();
  int64_t clamped_samples = 0;
};

struct NmflRoundResult {
  Money kappa;
  bool xi = false;
  bool weights_updated = false;
  // Cost added to z by this round.
  Money spend = Money::Zero();
};

// One round for client v: the learn-or-cover step when kappa >= beta / t
// (t counted including this round), then the connection to the cheapest
// facility computed before sampling (after sampling when
// `recompute_backup`). A client that is already connected is a no-op
// round with kappa 0.
NmflRoundResult NmflRound(const FlInstance& instance, NmflState& state,
                          int32_t v, Rng& rng, bool recompute_backup = false);

// One diagnostic row. The potentials are evaluated at the start of the
// round (after any phase change) and at its end, with the current beta.
struct NmflDiagnostics {
  int32_t round = 0;
  int32_t phase = 0;
  Money beta;
  Money kappa;
  bool xi = false;
  Money spend;
  double phi_l_start = 0;
  double phi_c_start = 0;
  double phi_l = 0;
  double phi_c = 0;
};

class NmflAlgorithm final : public OnlineAlgorithm {
 public:
  NmflAlgorithm(std::shared_ptr<const FlInstance> instance, int32_t horizon,
                const AlgorithmConfig& config);

  AlgorithmKind kind() const override { return AlgorithmKind::kNmfl; }
  Money Feed(Request r, Rng& rng) override;
  const Solution& solution() const override { return state_.z; }
  AlgorithmStats stats() const override;

  const NmflState& state() const { return state_; }
  double budget() const;

  // Records potentials each round against the reference solution
  // `reference` (an integral optimum for the whole sequence), assuming the
  // requests arrive as `sequence`. Must be called before the first Feed.
  void EnableDiagnostics(const Solution& reference,
                         std::vector<Request> sequence);
  const std::vector<NmflDiagnostics>& diagnostics() const { return diag_; }

 private:
  void StartPhase(Money beta);
  std::pair<double, double> Potentials() const;

  std::shared_ptr<const FlInstance> instance_;
  int32_t horizon_;
  AlgorithmConfig config_;
  NmflState state_;
  bool started_ = false;
  int32_t phases_ = 0;

  bool diagnostics_on_ = false;
  std::vector<double> x_star_;
  std::vector<Money> reference_connection_;
  std::vector<Request> sequence_;
  std::vector<NmflDiagnostics> diag_;
};

}  // namespace aiplab

#endif  // AIPLAB_NMFL_H_
