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

// Concrete AIPs: weighted set cover, unit-cost set multicover with
// multiplicity constraints, and (non-)metric facility location.

#ifndef AIPLAB_INSTANCES_H_
#define AIPLAB_INSTANCES_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "aiplab/aip.h"
#include "aiplab/money.h"
#include "aiplab/random.h"

namespace aiplab {

// Universe [0, N), m sets with positive costs. Requests are elements. All
// elements must be covered by at least one set.
class SetCoverInstance final : public Problem {
 public:
  // Sets are sorted and deduplicated on construction. Throws
  // StructuralError on out-of-range elements, non-positive costs or an
  // element no set covers.
  SetCoverInstance(int32_t universe_size,
                   std::vector<std::vector<int32_t>> sets,
                   std::vector<Money> costs);

  ProblemKind kind() const override { return ProblemKind::kSetCover; }
  int32_t num_requests() const override { return universe_size_; }

  int32_t universe_size() const { return universe_size_; }
  int32_t num_sets() const { return static_cast<int32_t>(sets_.size()); }
  const std::vector<std::vector<int32_t>>& sets() const { return sets_; }
  std::span<const int32_t> sets_containing(int32_t element) const {
    return containing_[element];
  }
  Money set_cost(int32_t j) const { return costs()[j]; }
  bool unit_costs() const;

  bool Satisfies(const Solution& z, Request r) const override;
  // Cheapest set containing the element; ties go to the lowest set id.
  Increment BackupSingle(const Solution& z, Request r) const override;

  friend bool operator==(const SetCoverInstance& a,
                         const SetCoverInstance& b) {
    return a.universe_size_ == b.universe_size_ && a.sets_ == b.sets_ &&
           a.costs() == b.costs();
  }

 private:
  int32_t universe_size_;
  std::vector<std::vector<int32_t>> sets_;
  std::vector<std::vector<int32_t>> containing_;
};

// min <1, z> s.t. A z >= b, z in {0,1}^m, A a 0/1 matrix stored as sorted
// row supports. Requests are rows.
class SmcInstance final : public Problem {
 public:
  // Throws StructuralError unless every 1 <= b_i <= |support(a_i)| and all
  // columns lie in [0, m).
  SmcInstance(int32_t num_columns, std::vector<std::vector<int32_t>> rows,
              std::vector<int32_t> demands);

  ProblemKind kind() const override { return ProblemKind::kSetMulticover; }
  int32_t num_requests() const override {
    return static_cast<int32_t>(rows_.size());
  }

  int32_t num_columns() const { return num_vars(); }
  int32_t num_rows() const { return static_cast<int32_t>(rows_.size()); }
  std::span<const int32_t> row(int32_t i) const { return rows_[i]; }
  int32_t demand(int32_t i) const { return demands_[i]; }
  const std::vector<std::vector<int32_t>>& rows() const { return rows_; }
  const std::vector<int32_t>& demands() const { return demands_; }

  // max(0, b_i - <a_i, z>).
  int32_t Deficiency(int32_t i, const Solution& z) const;

  bool Satisfies(const Solution& z, Request r) const override;
  // The d lowest-id unbought columns of the row.
  Increment BackupSingle(const Solution& z, Request r) const override;

  friend bool operator==(const SmcInstance& a, const SmcInstance& b) {
    return a.num_vars() == b.num_vars() && a.rows_ == b.rows_ &&
           a.demands_ == b.demands_;
  }

 private:
  std::vector<std::vector<int32_t>> rows_;
  std::vector<int32_t> demands_;
};

// m facilities with opening costs, n clients with per-pair connection
// costs (Money::Infinite() allowed). Variables are laid out as the m
// facility indicators followed by the m*n connection indicators, client
// major. Requests are clients.
class FlInstance final : public Problem {
 public:
  // connection[v][f]. Throws StructuralError on ragged input or a client
  // with no finite connection; if `metric` is set the triangle inequality
  // is validated as well.
  FlInstance(std::vector<Money> opening_costs,
             std::vector<std::vector<Money>> connection, bool metric);

  ProblemKind kind() const override { return ProblemKind::kFacilityLocation; }
  int32_t num_requests() const override { return num_clients_; }

  int32_t num_facilities() const { return num_facilities_; }
  int32_t num_clients() const { return num_clients_; }
  bool metric() const { return metric_; }
  Money opening_cost(int32_t f) const { return costs()[f]; }
  Money connection_cost(int32_t f, int32_t v) const {
    return costs()[ConnectionVar(f, v)];
  }
  int32_t ConnectionVar(int32_t f, int32_t v) const {
    return num_facilities_ + v * num_facilities_ + f;
  }
  // Largest finite opening or connection cost.
  Money max_finite_cost() const;

  bool IsOpen(const Solution& z, int32_t f) const { return z[f] > 0; }
  // The facility v is connected to, or -1.
  int32_t ConnectedFacility(const Solution& z, int32_t v) const;

  bool Satisfies(const Solution& z, Request r) const override;
  // Opens (if needed) and connects to argmin_f 1{f closed} c_f + c_fv,
  // lowest facility id on ties.
  Increment BackupSingle(const Solution& z, Request r) const override;

  // Checks c_fv <= c_fv' + c_f'v' + c_f'v for all f, f', v, v' up to an
  // absolute slack of `slack_micros` (absorbs fixed-point rounding).
  bool SatisfiesTriangleInequality(int64_t slack_micros = 4) const;

  friend bool operator==(const FlInstance& a, const FlInstance& b) {
    return a.num_facilities_ == b.num_facilities_ &&
           a.num_clients_ == b.num_clients_ && a.metric_ == b.metric_ &&
           a.costs() == b.costs();
  }

 private:
  static std::vector<Money> Flatten(
      const std::vector<Money>& opening,
      const std::vector<std::vector<Money>>& connection);

  int32_t num_facilities_;
  int32_t num_clients_;
  bool metric_;
};

// Finite probability mass over requests with integer weights; the
// probability of support point i is weight_i / total_weight.
class DiscreteDistribution {
 public:
  DiscreteDistribution() = default;
  // Throws StructuralError on size mismatch, empty support or zero total.
  DiscreteDistribution(std::vector<Request> support,
                       std::vector<uint64_t> weights);

  static DiscreteDistribution PointMass(Request r);
  static DiscreteDistribution Uniform(std::vector<Request> support);
  // Mixture with equal mixing weights over the components (used for the
  // averaged distribution D*).
  static DiscreteDistribution Average(
      std::span<const DiscreteDistribution> components);

  const std::vector<Request>& support() const { return support_; }
  const std::vector<uint64_t>& weights() const { return weights_; }
  uint64_t total_weight() const { return total_; }
  double probability(size_t i) const {
    return static_cast<double>(weights_[i]) / static_cast<double>(total_);
  }

  Request Sample(Rng& rng) const;

  friend bool operator==(const DiscreteDistribution&,
                         const DiscreteDistribution&) = default;

 private:
  std::vector<Request> support_;
  std::vector<uint64_t> weights_;
  uint64_t total_ = 0;
};

// Weighted set cover as facility location: facility = set, client =
// element, c_fv = 0 if the element is in the set and infinite otherwise.
std::shared_ptr<const FlInstance> SetCoverAsFacilityLocation(
    const SetCoverInstance& sc);

// Unit-cost set cover as multicover with b = 1. Throws StructuralError
// when costs are not all one unit.
std::shared_ptr<const SmcInstance> SetCoverAsMulticover(
    const SetCoverInstance& sc);

// All request ids of a problem, in id order.
std::vector<Request> AllRequests(const Problem& problem);

}  // namespace aiplab

#endif  // AIPLAB_INSTANCES_H_
