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

#include "aiplab/instances.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "aiplab/error.h"

namespace aiplab {
namespace {

void SortUnique(std::vector<int32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// SetCoverInstance.

SetCoverInstance::SetCoverInstance(int32_t universe_size,
                                   std::vector<std::vector<int32_t>> sets,
                                   std::vector<Money> costs)
    : Problem(std::move(costs)),
      universe_size_(universe_size),
      sets_(std::move(sets)),
      containing_(universe_size < 0 ? 0 : universe_size) {
  if (universe_size < 0) throw StructuralError("negative universe size");
  if (static_cast<size_t>(num_vars()) != sets_.size()) {
    throw StructuralError("set cover: " + std::to_string(sets_.size()) +
                          " sets but " + std::to_string(num_vars()) +
                          " costs");
  }
  for (int32_t j = 0; j < num_sets(); ++j) {
    if (!(set_cost(j) > Money::Zero()) || set_cost(j).is_infinite()) {
      throw StructuralError("set cover: cost of set " + std::to_string(j) +
                            " must be finite and positive");
    }
    SortUnique(sets_[j]);
    for (const int32_t e : sets_[j]) {
      if (e < 0 || e >= universe_size_) {
        throw StructuralError("set cover: element " + std::to_string(e) +
                              " of set " + std::to_string(j) +
                              " out of range");
      }
      containing_[e].push_back(j);
    }
  }
  for (int32_t e = 0; e < universe_size_; ++e) {
    if (containing_[e].empty()) {
      throw StructuralError("set cover: element " + std::to_string(e) +
                            " is not covered by any set");
    }
  }
}

bool SetCoverInstance::unit_costs() const {
  return std::all_of(costs().begin(), costs().end(),
                     [](Money c) { return c == Money::FromUnits(1); });
}

bool SetCoverInstance::Satisfies(const Solution& z, Request r) const {
  for (const int32_t j : containing_[r.id]) {
    if (z[j] > 0) return true;
  }
  return false;
}

Increment SetCoverInstance::BackupSingle(const Solution& z, Request r) const {
  if (Satisfies(z, r)) return {};
  int32_t best = -1;
  for (const int32_t j : containing_[r.id]) {
    if (best < 0 || set_cost(j) < set_cost(best)) best = j;
  }
  if (best < 0) {
    throw InfeasibleError("element " + std::to_string(r.id) +
                          " cannot be covered");
  }
  return Increment{{{best, 1}}, set_cost(best)};
}

// SmcInstance.

SmcInstance::SmcInstance(int32_t num_columns,
                         std::vector<std::vector<int32_t>> rows,
                         std::vector<int32_t> demands)
    : Problem(std::vector<Money>(num_columns < 0 ? 0 : num_columns,
                                 Money::FromUnits(1))),
      rows_(std::move(rows)),
      demands_(std::move(demands)) {
  if (num_columns < 0) throw StructuralError("negative column count");
  if (rows_.size() != demands_.size()) {
    throw StructuralError("multicover: " + std::to_string(rows_.size()) +
                          " rows but " + std::to_string(demands_.size()) +
                          " demands");
  }
  for (size_t i = 0; i < rows_.size(); ++i) {
    SortUnique(rows_[i]);
    for (const int32_t j : rows_[i]) {
      if (j < 0 || j >= num_columns) {
        throw StructuralError("multicover: column " + std::to_string(j) +
                              " of row " + std::to_string(i) +
                              " out of range");
      }
    }
    if (demands_[i] < 1 ||
        static_cast<size_t>(demands_[i]) > rows_[i].size()) {
      throw StructuralError("multicover: demand of row " + std::to_string(i) +
                            " must lie in [1, row support size]");
    }
  }
}

int32_t SmcInstance::Deficiency(int32_t i, const Solution& z) const {
  int32_t covered = 0;
  for (const int32_t j : rows_[i]) covered += z[j] > 0 ? 1 : 0;
  return std::max(0, demands_[i] - covered);
}

bool SmcInstance::Satisfies(const Solution& z, Request r) const {
  return Deficiency(r.id, z) == 0;
}

Increment SmcInstance::BackupSingle(const Solution& z, Request r) const {
  int32_t d = Deficiency(r.id, z);
  Increment w;
  for (const int32_t j : rows_[r.id]) {
    if (d == 0) break;
    if (z[j] > 0) continue;
    w.entries.emplace_back(j, 1);
    w.cost += Money::FromUnits(1);
    --d;
  }
  if (d > 0) {
    throw InfeasibleError("row " + std::to_string(r.id) +
                          " cannot be covered");
  }
  return w;
}

// FlInstance.

std::vector<Money> FlInstance::Flatten(
    const std::vector<Money>& opening,
    const std::vector<std::vector<Money>>& connection) {
  std::vector<Money> costs = opening;
  costs.reserve(opening.size() * (connection.size() + 1));
  for (size_t v = 0; v < connection.size(); ++v) {
    if (connection[v].size() != opening.size()) {
      throw StructuralError("facility location: client " + std::to_string(v) +
                            " has " + std::to_string(connection[v].size()) +
                            " connection costs, expected " +
                            std::to_string(opening.size()));
    }
    costs.insert(costs.end(), connection[v].begin(), connection[v].end());
  }
  return costs;
}

FlInstance::FlInstance(std::vector<Money> opening_costs,
                       std::vector<std::vector<Money>> connection, bool metric)
    : Problem(Flatten(opening_costs, connection)),
      num_facilities_(static_cast<int32_t>(opening_costs.size())),
      num_clients_(static_cast<int32_t>(connection.size())),
      metric_(metric) {
  if (num_facilities_ == 0 && num_clients_ > 0) {
    throw StructuralError("facility location: clients but no facilities");
  }
  for (int32_t f = 0; f < num_facilities_; ++f) {
    if (opening_cost(f).is_infinite()) {
      throw StructuralError("facility location: opening cost of facility " +
                            std::to_string(f) + " must be finite");
    }
  }
  for (int32_t v = 0; v < num_clients_; ++v) {
    bool any_finite = false;
    for (int32_t f = 0; f < num_facilities_; ++f) {
      any_finite |= connection_cost(f, v).is_finite();
    }
    if (!any_finite) {
      throw StructuralError("facility location: client " + std::to_string(v) +
                            " has no finite connection cost");
    }
  }
  if (metric_ && !SatisfiesTriangleInequality()) {
    throw StructuralError(
        "facility location: metric flag set but connection costs violate "
        "the triangle inequality");
  }
}

Money FlInstance::max_finite_cost() const {
  Money best = Money::Zero();
  for (const Money c : costs()) {
    if (c.is_finite() && c > best) best = c;
  }
  return best;
}

int32_t FlInstance::ConnectedFacility(const Solution& z, int32_t v) const {
  for (int32_t f = 0; f < num_facilities_; ++f) {
    if (z[ConnectionVar(f, v)] > 0 && z[f] > 0) return f;
  }
  return -1;
}

bool FlInstance::Satisfies(const Solution& z, Request r) const {
  return ConnectedFacility(z, r.id) >= 0;
}

Increment FlInstance::BackupSingle(const Solution& z, Request r) const {
  if (Satisfies(z, r)) return {};
  const int32_t v = r.id;
  int32_t best = -1;
  Money best_cost = Money::Infinite();
  for (int32_t f = 0; f < num_facilities_; ++f) {
    const Money c_fv = connection_cost(f, v);
    if (c_fv.is_infinite()) continue;
    const bool bought = z[ConnectionVar(f, v)] > 0;
    const Money marginal = (IsOpen(z, f) ? Money::Zero() : opening_cost(f)) +
                           (bought ? Money::Zero() : c_fv);
    if (best < 0 || marginal < best_cost) {
      best = f;
      best_cost = marginal;
    }
  }
  if (best < 0) {
    throw InfeasibleError("client " + std::to_string(v) +
                          " has no finite connection");
  }
  Increment w;
  if (!IsOpen(z, best)) w.entries.emplace_back(best, 1);
  if (z[ConnectionVar(best, v)] == 0) {
    w.entries.emplace_back(ConnectionVar(best, v), 1);
  }
  w.cost = best_cost;
  return w;
}

bool FlInstance::SatisfiesTriangleInequality(int64_t slack_micros) const {
  const int32_t m = num_facilities_;
  const int32_t n = num_clients_;
  for (const Money c : costs()) {
    if (c.is_infinite()) return false;
  }
  // through[f][g] = min_w (c_fw + c_gw): the cheapest two-hop path from
  // facility f to facility g through some client.
  std::vector<std::vector<int64_t>> through(
      m, std::vector<int64_t>(m, std::numeric_limits<int64_t>::max()));
  for (int32_t w = 0; w < n; ++w) {
    for (int32_t f = 0; f < m; ++f) {
      const int64_t a = connection_cost(f, w).micros();
      for (int32_t g = 0; g < m; ++g) {
        through[f][g] =
            std::min(through[f][g], a + connection_cost(g, w).micros());
      }
    }
  }
  for (int32_t f = 0; f < m; ++f) {
    for (int32_t g = 0; g < m; ++g) {
      if (f == g) continue;
      for (int32_t v = 0; v < n; ++v) {
        if (connection_cost(f, v).micros() >
            through[f][g] + connection_cost(g, v).micros() + slack_micros) {
          return false;
        }
      }
    }
  }
  return true;
}

// DiscreteDistribution.

DiscreteDistribution::DiscreteDistribution(std::vector<Request> support,
                                           std::vector<uint64_t> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  if (support_.size() != weights_.size()) {
    throw StructuralError("distribution: support and weight sizes differ");
  }
  for (const uint64_t w : weights_) total_ += w;
  if (support_.empty() || total_ == 0) {
    throw StructuralError("distribution: empty support or zero mass");
  }
}

DiscreteDistribution DiscreteDistribution::PointMass(Request r) {
  return DiscreteDistribution({r}, {1});
}

DiscreteDistribution DiscreteDistribution::Uniform(
    std::vector<Request> support) {
  std::vector<uint64_t> weights(support.size(), 1);
  return DiscreteDistribution(std::move(support), std::move(weights));
}

DiscreteDistribution DiscreteDistribution::Average(
    std::span<const DiscreteDistribution> components) {
  if (components.empty()) throw StructuralError("average of no distributions");
  // Components are rescaled to the lcm of their totals so that equal mixing
  // weights stay integral.
  uint64_t common = 1;
  for (const auto& d : components) common = std::lcm(common, d.total_);
  std::vector<Request> support;
  std::vector<uint64_t> weights;
  for (const auto& d : components) {
    const uint64_t scale = common / d.total_;
    for (size_t i = 0; i < d.support_.size(); ++i) {
      const auto it =
          std::find(support.begin(), support.end(), d.support_[i]);
      if (it == support.end()) {
        support.push_back(d.support_[i]);
        weights.push_back(d.weights_[i] * scale);
      } else {
        weights[it - support.begin()] += d.weights_[i] * scale;
      }
    }
  }
  uint64_t g = 0;
  for (const uint64_t w : weights) g = std::gcd(g, w);
  for (uint64_t& w : weights) w /= g;
  return DiscreteDistribution(std::move(support), std::move(weights));
}

Request DiscreteDistribution::Sample(Rng& rng) const {
  uint64_t r = UniformIndex(rng, total_);
  for (size_t i = 0; i < weights_.size(); ++i) {
    if (r < weights_[i]) return support_[i];
    r -= weights_[i];
  }
  return support_.back();
}

// Embeddings.

std::shared_ptr<const FlInstance> SetCoverAsFacilityLocation(
    const SetCoverInstance& sc) {
  std::vector<std::vector<Money>> connection(
      sc.universe_size(),
      std::vector<Money>(sc.num_sets(), Money::Infinite()));
  for (int32_t j = 0; j < sc.num_sets(); ++j) {
    for (const int32_t e : sc.sets()[j]) connection[e][j] = Money::Zero();
  }
  return std::make_shared<const FlInstance>(sc.costs(), std::move(connection),
                                            /*metric=*/false);
}

std::shared_ptr<const SmcInstance> SetCoverAsMulticover(
    const SetCoverInstance& sc) {
  if (!sc.unit_costs()) {
    throw StructuralError(
        "set cover with non-unit costs cannot be run as multicover");
  }
  std::vector<std::vector<int32_t>> rows(sc.universe_size());
  for (int32_t e = 0; e < sc.universe_size(); ++e) {
    const auto s = sc.sets_containing(e);
    rows[e].assign(s.begin(), s.end());
  }
  return std::make_shared<const SmcInstance>(
      sc.num_sets(), std::move(rows),
      std::vector<int32_t>(sc.universe_size(), 1));
}

std::vector<Request> AllRequests(const Problem& problem) {
  std::vector<Request> out(problem.num_requests());
  for (int32_t i = 0; i < problem.num_requests(); ++i) out[i] = Request{i};
  return out;
}

}  // namespace aiplab
