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

#include "aiplab/nmfl.h"

#include <cmath>
#include <string>
#include <utility>

#include "aiplab/error.h"

namespace aiplab {
namespace {

using Wide = __int128;

// Smallest positive cost of any variable, or one micro-unit.
Money SmallestPositiveCost(const FlInstance& instance) {
  Money best = Money::Infinite();
  for (const Money c : instance.costs()) {
    if (c > Money::Zero() && c < best) best = c;
  }
  return best.is_finite() ? best : Money::FromMicros(1);
}

void Normalize(const FlInstance& instance, Money beta, std::vector<double>& x) {
  double mass = 0;
  for (size_t f = 0; f < x.size(); ++f) {
    mass += instance.opening_cost(static_cast<int32_t>(f)).ToDouble() * x[f];
  }
  if (mass <= 0) return;
  const double z = mass / beta.ToDouble();
  for (double& w : x) w /= z;
}

}  // namespace

KappaResult Kappa(const FlInstance& instance, const Solution& z, int32_t v) {
  KappaResult best{Money::Infinite(), -1};
  for (int32_t f = 0; f < instance.num_facilities(); ++f) {
    const Money c_fv = instance.connection_cost(f, v);
    if (c_fv.is_infinite()) continue;
    const Money marginal =
        (instance.IsOpen(z, f) ? Money::Zero() : instance.opening_cost(f)) +
        c_fv;
    if (best.facility < 0 || marginal < best.kappa) best = {marginal, f};
  }
  if (best.facility < 0) {
    throw InfeasibleError("client " + std::to_string(v) +
                          " has no finite connection");
  }
  return best;
}

std::vector<int32_t> GammaSet(const FlInstance& instance, Money kappa,
                              int32_t v) {
  if (kappa.is_infinite()) throw DomainError("kappa must be finite");
  std::vector<int32_t> gamma;
  for (int32_t f = 0; f < instance.num_facilities(); ++f) {
    const Money c_fv = instance.connection_cost(f, v);
    // c_fv <= kappa / 2 without rounding.
    if (c_fv.is_finite() && Wide{c_fv.micros()} * 2 <= kappa.micros()) {
      gamma.push_back(f);
    }
  }
  return gamma;
}

std::vector<double> InitialNmflWeights(const FlInstance& instance,
                                       Money beta) {
  const int32_t m = instance.num_facilities();
  std::vector<double> x(m, 0.0);
  std::vector<int32_t> support;
  for (int32_t f = 0; f < m; ++f) {
    const Money c = instance.opening_cost(f);
    if (Wide{c.micros()} * m >= beta.micros() && c <= beta &&
        c > Money::Zero()) {
      support.push_back(f);
    }
  }
  const double m_prime = static_cast<double>(support.size());
  for (const int32_t f : support) {
    x[f] = beta.ToDouble() / (instance.opening_cost(f).ToDouble() * m_prime);
  }
  return x;
}

NmflRoundResult NmflRound(const FlInstance& instance, NmflState& state,
                          int32_t v, Rng& rng, bool recompute_backup) {
  const int32_t t = ++state.t;
  NmflRoundResult result;
  result.kappa = Money::Zero();
  if (instance.Satisfies(state.z, Request{v})) return result;

  const Money before = state.z.cost();
  const KappaResult k = Kappa(instance, state.z, v);
  result.kappa = k.kappa;
  if (Wide{k.kappa.micros()} * t >= state.beta.micros()) {
    result.xi = true;
    const std::vector<int32_t> gamma = GammaSet(instance, k.kappa, v);
    double covered = 0;
    for (const int32_t f : gamma) covered += state.x[f];

    const double kappa = k.kappa.ToDouble();
    const double beta = state.beta.ToDouble();
    for (int32_t f = 0; f < instance.num_facilities(); ++f) {
      if (state.x[f] <= 0) continue;
      const double p = kappa * state.x[f] / beta;
      if (p > 1) ++state.clamped_samples;
      if (Bernoulli(rng, p)) state.z.Raise(f, 1);
    }

    if (covered < 1) {
      for (const int32_t f : gamma) {
        if (state.x[f] <= 0) continue;
        const Money c_f = instance.opening_cost(f);
        if (Wide{k.kappa.micros()} > Wide{c_f.micros()} * 2) {
          throw InvariantError("exponent kappa/c_f exceeds 2 for facility " +
                               std::to_string(f));
        }
        state.x[f] *= std::exp(static_cast<double>(k.kappa.micros()) /
                               static_cast<double>(c_f.micros()));
      }
      Normalize(instance, state.beta, state.x);
      result.weights_updated = true;
    }
  }

  const int32_t target =
      recompute_backup ? Kappa(instance, state.z, v).facility : k.facility;
  state.z.Raise(target, 1);
  state.z.Raise(instance.ConnectionVar(target, v), 1);
  result.spend = state.z.cost() - before;
  state.phase_spend += result.spend;
  return result;
}

NmflAlgorithm::NmflAlgorithm(std::shared_ptr<const FlInstance> instance,
                             int32_t horizon, const AlgorithmConfig& config)
    : instance_(std::move(instance)), horizon_(horizon), config_(config) {
  if (!instance_) throw StructuralError("nmfl: null instance");
  if (horizon_ < 0) throw StructuralError("nmfl: negative horizon");
  if (config_.beta0 && !(*config_.beta0 > Money::Zero() &&
                         config_.beta0->is_finite())) {
    throw DomainError("nmfl: beta0 must be positive and finite");
  }
  state_.z = instance_->EmptySolution();
}

double NmflAlgorithm::budget() const {
  const double mn = static_cast<double>(instance_->num_facilities()) *
                    std::max(horizon_, 1);
  return config_.doubling_k * state_.beta.ToDouble() * (1.0 + std::log(mn));
}

AlgorithmStats NmflAlgorithm::stats() const {
  return {state_.beta, phases_, state_.clamped_samples};
}

void NmflAlgorithm::StartPhase(Money beta) {
  state_.x = InitialNmflWeights(*instance_, beta);
  // An empty F' can be repaired by growing beta only while some opening
  // cost is still above beta.
  Money max_opening = Money::Zero();
  for (int32_t f = 0; f < instance_->num_facilities(); ++f) {
    max_opening = std::max(max_opening, instance_->opening_cost(f));
  }
  auto empty = [&] {
    for (const double w : state_.x) {
      if (w > 0) return false;
    }
    return true;
  };
  while (empty() && beta < max_opening) {
    beta = beta * 2;
    state_.x = InitialNmflWeights(*instance_, beta);
  }
  state_.beta = beta;
  state_.phase_spend = Money::Zero();
  ++phases_;
}

void NmflAlgorithm::EnableDiagnostics(const Solution& reference,
                                      std::vector<Request> sequence) {
  if (started_) {
    throw StructuralError("nmfl: diagnostics must be enabled before Feed");
  }
  if (reference.size() != instance_->num_vars()) {
    throw StructuralError("nmfl: reference solution has the wrong size");
  }
  diagnostics_on_ = true;
  x_star_.assign(instance_->num_facilities(), 0.0);
  for (int32_t f = 0; f < instance_->num_facilities(); ++f) {
    x_star_[f] = static_cast<double>(reference[f]);
  }
  reference_connection_.assign(instance_->num_clients(), Money::Zero());
  for (int32_t v = 0; v < instance_->num_clients(); ++v) {
    const int32_t f = instance_->ConnectedFacility(reference, v);
    if (f >= 0) reference_connection_[v] = instance_->connection_cost(f, v);
  }
  sequence_ = std::move(sequence);
}

// Learning part: the weighted KL over the current support plus twice the
// reference connection cost of the clients still to arrive. Coordinates
// with x_f = 0 stay zero for the whole phase, so dropping them shifts the
// potential by a per-phase constant. Covering part: beta log(rho/beta +
// 1/n) with rho the summed marginal cost of the clients still to arrive.
std::pair<double, double> NmflAlgorithm::Potentials() const {
  const FlInstance& inst = *instance_;
  double phi_l = 0;
  for (int32_t f = 0; f < inst.num_facilities(); ++f) {
    const double x = state_.x[f];
    if (x <= 0) continue;
    const double xs = x_star_[f];
    const double term = xs > 0 ? xs * std::log(xs / x) - xs + x : x;
    phi_l += inst.opening_cost(f).ToDouble() * term;
  }
  double rho = 0;
  double pending_connection = 0;
  for (size_t i = static_cast<size_t>(state_.t); i < sequence_.size(); ++i) {
    const int32_t v = sequence_[i].id;
    pending_connection += reference_connection_[v].ToDouble();
    if (!inst.Satisfies(state_.z, sequence_[i])) {
      rho += Kappa(inst, state_.z, v).kappa.ToDouble();
    }
  }
  phi_l += 2 * pending_connection;
  const double beta = state_.beta.ToDouble();
  const double n = static_cast<double>(std::max(horizon_, 1));
  return {phi_l, beta * std::log(rho / beta + 1.0 / n)};
}

Money NmflAlgorithm::Feed(Request r, Rng& rng) {
  const FlInstance& inst = *instance_;
  if (r.id < 0 || r.id >= inst.num_clients()) {
    throw StructuralError("nmfl: client id out of range");
  }
  const bool satisfied = inst.Satisfies(state_.z, r);
  if (!started_) {
    started_ = true;
    Money beta0;
    if (config_.beta0) {
      beta0 = *config_.beta0;
    } else {
      beta0 = Kappa(inst, state_.z, r.id).kappa;
      if (beta0 == Money::Zero()) beta0 = SmallestPositiveCost(inst);
    }
    StartPhase(beta0);
  }
  if (!satisfied) {
    const Money kappa = Kappa(inst, state_.z, r.id).kappa;
    while (kappa > state_.beta) StartPhase(state_.beta * 2);
  }

  NmflDiagnostics row;
  if (diagnostics_on_) {
    if (static_cast<size_t>(state_.t) >= sequence_.size() ||
        sequence_[state_.t] != r) {
      throw StructuralError("nmfl: fed request differs from the diagnostic "
                            "sequence");
    }
    std::tie(row.phi_l_start, row.phi_c_start) = Potentials();
    row.phase = phases_;
    row.beta = state_.beta;
  }

  const NmflRoundResult result =
      NmflRound(inst, state_, r.id, rng, config_.recompute_backup);

  if (diagnostics_on_) {
    row.round = state_.t;
    row.kappa = result.kappa;
    row.xi = result.xi;
    row.spend = result.spend;
    std::tie(row.phi_l, row.phi_c) = Potentials();
    diag_.push_back(row);
  }
  if (state_.phase_spend.ToDouble() > budget()) {
    StartPhase(state_.beta * 2);
  }
  return result.spend;
}

}  // namespace aiplab
