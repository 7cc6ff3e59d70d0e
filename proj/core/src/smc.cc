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

#include "aiplab/smc.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "aiplab/error.h"

namespace aiplab {
namespace {

void Normalize(int64_t beta, std::vector<double>& x) {
  double mass = 0;
  for (const double w : x) mass += w;
  if (mass <= 0) return;
  const double z = mass / static_cast<double>(beta);
  for (double& w : x) w /= z;
}

}  // namespace

int32_t Deficiency(std::span<const int32_t> row, int32_t demand,
                   const Solution& z) {
  int64_t have = 0;
  for (const int32_t j : row) {
    if (j < 0 || j >= z.size()) {
      throw StructuralError("row refers to a column outside the solution");
    }
    have += z[j];
  }
  return static_cast<int32_t>(std::max<int64_t>(0, demand - have));
}

SmcRoundResult SmcRound(const SmcInstance& instance, SmcState& state,
                        int32_t i, Rng& rng, bool sample_support_only) {
  ++state.t;
  SmcRoundResult result;
  const std::span<const int32_t> row = instance.row(i);
  const int32_t d = Deficiency(row, instance.demand(i), state.z);
  result.deficiency = d;
  if (d == 0) {
    result.covered_on_arrival = true;
    return result;
  }

  std::vector<int32_t> support;
  for (const int32_t j : row) {
    if (state.z[j] == 0) support.push_back(j);
  }
  for (const int32_t j : support) result.weight += state.x[j];

  const double beta = static_cast<double>(state.beta);
  auto sample = [&](int32_t j) {
    const double p = d * state.x[j] / beta;
    if (p > 1) ++state.clamped_samples;
    if (Bernoulli(rng, p)) {
      state.z.Raise(j, 1);
      ++result.bought;
    }
  };
  if (sample_support_only) {
    for (const int32_t j : support) sample(j);
  } else {
    for (int32_t j = 0; j < instance.num_columns(); ++j) {
      if (state.z[j] == 0) sample(j);
    }
  }

  if (result.weight <= d) {
    for (const int32_t j : support) {
      if (state.x[j] >= 1 / std::numbers::e && state.z[j] == 0) {
        state.z.Raise(j, 1);
        ++result.bought;
      }
    }
    for (const int32_t j : support) state.x[j] *= std::numbers::e;
    Normalize(state.beta, state.x);
    result.weights_updated = true;
  }

  const int32_t missing = Deficiency(row, instance.demand(i), state.z);
  if (missing > 0) {
    std::vector<int32_t> open;
    for (const int32_t j : row) {
      if (state.z[j] == 0) open.push_back(j);
    }
    if (static_cast<int32_t>(open.size()) < missing) {
      throw InfeasibleError("row " + std::to_string(i) +
                            " cannot be covered by the unbought columns");
    }
    std::stable_sort(open.begin(), open.end(), [&](int32_t a, int32_t b) {
      return state.x[a] > state.x[b];
    });
    for (int32_t k = 0; k < missing; ++k) {
      state.z.Raise(open[k], 1);
      ++result.bought;
    }
  }
  state.phase_spend += result.bought;
  return result;
}

SmcAlgorithm::SmcAlgorithm(std::shared_ptr<const SmcInstance> instance,
                           int32_t horizon, const AlgorithmConfig& config)
    : instance_(std::move(instance)), horizon_(horizon), config_(config) {
  if (!instance_) throw StructuralError("smc: null instance");
  if (instance_->num_columns() < 1) throw StructuralError("smc: no columns");
  if (horizon_ < 0) throw StructuralError("smc: negative horizon");
  if (config_.beta0 && !(*config_.beta0 > Money::Zero() &&
                         config_.beta0->is_finite())) {
    throw DomainError("smc: beta0 must be positive and finite");
  }
  state_.z = instance_->EmptySolution();
}

double SmcAlgorithm::budget() const {
  const double mn = static_cast<double>(instance_->num_columns()) *
                    std::max(horizon_, 1);
  return config_.doubling_k * static_cast<double>(state_.beta) *
         (1.0 + std::log(mn));
}

AlgorithmStats SmcAlgorithm::stats() const {
  return {Money::FromUnits(state_.beta), phases_, state_.clamped_samples};
}

// Guesses never exceed m: every optimum buys at most m columns, and the
// cap keeps the initial weights beta/m at most 1.
void SmcAlgorithm::StartPhase(int64_t beta) {
  const int64_t m = instance_->num_columns();
  state_.beta = std::clamp<int64_t>(beta, 1, m);
  state_.x.assign(m, static_cast<double>(state_.beta) / static_cast<double>(m));
  state_.phase_spend = 0;
  ++phases_;
}

void SmcAlgorithm::EnableDiagnostics(const Solution& reference,
                                     std::vector<Request> sequence) {
  if (started_) {
    throw StructuralError("smc: diagnostics must be enabled before Feed");
  }
  if (reference.size() != instance_->num_vars()) {
    throw StructuralError("smc: reference solution has the wrong size");
  }
  diagnostics_on_ = true;
  x_star_.assign(reference.values().begin(), reference.values().end());
  sequence_ = std::move(sequence);
}

// Learning part: unweighted KL(x* || x). Covering part: beta log(rho/beta
// + 1/m) with rho the summed deficiency of the rows still to arrive.
std::pair<double, double> SmcAlgorithm::Potentials() const {
  double phi_l = 0;
  for (size_t j = 0; j < x_star_.size(); ++j) {
    const double x = state_.x[j];
    const double xs = x_star_[j];
    if (x <= 0) continue;
    phi_l += xs > 0 ? xs * std::log(xs / x) - xs + x : x;
  }
  double rho = 0;
  for (size_t k = static_cast<size_t>(state_.t); k < sequence_.size(); ++k) {
    const int32_t i = sequence_[k].id;
    rho += Deficiency(instance_->row(i), instance_->demand(i), state_.z);
  }
  const double beta = static_cast<double>(state_.beta);
  const double m = static_cast<double>(instance_->num_columns());
  return {phi_l, beta * std::log(rho / beta + 1.0 / m)};
}

Money SmcAlgorithm::Feed(Request r, Rng& rng) {
  const SmcInstance& inst = *instance_;
  if (r.id < 0 || r.id >= inst.num_rows()) {
    throw StructuralError("smc: row id out of range");
  }
  if (!started_) {
    started_ = true;
    int64_t beta0 = 1;
    if (config_.beta0) {
      const int64_t micros = config_.beta0->micros();
      beta0 = (micros + Money::kScale - 1) / Money::kScale;
    }
    StartPhase(beta0);
  }
  const int32_t d = Deficiency(inst.row(r.id), inst.demand(r.id), state_.z);
  while (d > state_.beta && state_.beta < inst.num_columns()) {
    StartPhase(state_.beta * 2);
  }

  SmcDiagnostics row;
  if (diagnostics_on_) {
    if (static_cast<size_t>(state_.t) >= sequence_.size() ||
        sequence_[state_.t] != r) {
      throw StructuralError("smc: fed request differs from the diagnostic "
                            "sequence");
    }
    std::tie(row.phi_l_start, row.phi_c_start) = Potentials();
    row.phase = phases_;
    row.beta = state_.beta;
  }

  const SmcRoundResult result = SmcRound(inst, state_, r.id, rng,
                                         config_.sample_support_only);

  if (diagnostics_on_) {
    row.round = state_.t;
    row.covered_on_arrival = result.covered_on_arrival;
    row.weight = result.weight;
    row.deficiency = result.deficiency;
    row.bought = result.bought;
    std::tie(row.phi_l, row.phi_c) = Potentials();
    diag_.push_back(row);
  }
  if (static_cast<double>(state_.phase_spend) > budget() &&
      state_.beta < inst.num_columns()) {
    StartPhase(state_.beta * 2);
  }
  return Money::FromUnits(result.bought);
}

}  // namespace aiplab
