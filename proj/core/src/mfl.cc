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

#include "aiplab/mfl.h"

#include <string>
#include <utility>

#include "aiplab/error.h"

namespace aiplab {

MflAlgorithm::MflAlgorithm(std::shared_ptr<const FlInstance> instance)
    : instance_(std::move(instance)) {
  if (!instance_) throw StructuralError("mfl: null instance");
  if (!instance_->metric()) {
    throw StructuralError("mfl: instance is not flagged metric");
  }
  z_ = instance_->EmptySolution();
}

Money MflAlgorithm::Feed(Request r, Rng& rng) {
  const FlInstance& inst = *instance_;
  if (r.id < 0 || r.id >= inst.num_clients()) {
    throw StructuralError("mfl: client id out of range");
  }
  if (inst.Satisfies(z_, r)) return Money::Zero();
  const int32_t v = r.id;
  const Money before = z_.cost();

  if (num_open_ == 0) {
    int32_t best = -1;
    Money best_cost = Money::Infinite();
    for (int32_t f = 0; f < inst.num_facilities(); ++f) {
      const Money c = inst.opening_cost(f) + inst.connection_cost(f, v);
      if (c.is_finite() && (best < 0 || c < best_cost)) {
        best = f;
        best_cost = c;
      }
    }
    if (best < 0) {
      throw InfeasibleError("client " + std::to_string(v) +
                            " has no finite connection");
    }
    z_.Raise(best, 1);
    ++num_open_;
  } else {
    Money delta = Money::Infinite();
    for (int32_t f = 0; f < inst.num_facilities(); ++f) {
      if (inst.IsOpen(z_, f)) delta = std::min(delta, inst.connection_cost(f, v));
    }
    int32_t candidate = -1;
    Money candidate_cost = Money::Infinite();
    for (int32_t f = 0; f < inst.num_facilities(); ++f) {
      if (inst.IsOpen(z_, f)) continue;
      const Money c_fv = inst.connection_cost(f, v);
      if (!(c_fv < delta)) continue;
      const Money c = inst.opening_cost(f) + c_fv;
      if (candidate < 0 || c < candidate_cost) {
        candidate = f;
        candidate_cost = c;
      }
    }
    if (candidate >= 0) {
      const Money c_g = inst.opening_cost(candidate);
      const double p = c_g == Money::Zero()
                           ? 1.0
                           : delta.ToDouble() / c_g.ToDouble();
      if (Bernoulli(rng, p)) {
        z_.Raise(candidate, 1);
        ++num_open_;
      }
    }
  }

  int32_t nearest = -1;
  for (int32_t f = 0; f < inst.num_facilities(); ++f) {
    if (!inst.IsOpen(z_, f)) continue;
    if (nearest < 0 ||
        inst.connection_cost(f, v) < inst.connection_cost(nearest, v)) {
      nearest = f;
    }
  }
  if (inst.connection_cost(nearest, v).is_infinite()) {
    throw InfeasibleError("client " + std::to_string(v) +
                          " cannot reach an open facility");
  }
  z_.Raise(inst.ConnectionVar(nearest, v), 1);
  return z_.cost() - before;
}

}  // namespace aiplab
