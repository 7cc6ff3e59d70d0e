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

// Augmentable integer programs: the abstract problem interface shared by
// the online algorithms, the reductions and the oracles.

#ifndef AIPLAB_AIP_H_
#define AIPLAB_AIP_H_

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "aiplab/money.h"

namespace aiplab {

// One online arrival. Its meaning is problem specific: an element of a set
// cover universe, a row of a multicover matrix, or a facility location
// client.
struct Request {
  int32_t id = 0;
  friend constexpr auto operator<=>(Request, Request) = default;
};

// A sparse increment w: (variable, value) pairs sorted by variable, and its
// cost c(w).
struct Increment {
  std::vector<std::pair<int32_t, int64_t>> entries;
  Money cost;

  bool empty() const { return entries.empty(); }
};

// Monotone integer solution vector with an exact cost cache. Values only
// ever increase; the cost vector belongs to the problem, which must outlive
// the solution.
class Solution {
 public:
  Solution() = default;
  explicit Solution(const std::vector<Money>& costs)
      : costs_(&costs), z_(costs.size(), 0) {}

  int32_t size() const { return static_cast<int32_t>(z_.size()); }
  int64_t operator[](int32_t j) const { return z_[j]; }
  std::span<const int64_t> values() const { return z_; }
  Money cost() const { return cost_; }

  // z_j <- max(z_j, value). Returns the cost added.
  Money Raise(int32_t j, int64_t value);
  // z <- max(z, w). Returns the cost added.
  Money MaxWith(const Increment& w);
  Money MaxWith(const Solution& other);

  // Coordinate-wise z <= other.
  bool LessEq(const Solution& other) const;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.z_ == b.z_;
  }

 private:
  const std::vector<Money>* costs_ = nullptr;
  std::vector<int64_t> z_;
  Money cost_ = Money::Zero();
};

enum class ProblemKind { kSetCover, kSetMulticover, kFacilityLocation };

const char* ProblemKindName(ProblemKind kind);

// An AIP: decision variables with costs, a universe of requests, a
// feasibility predicate and the single-request augmentation oracle.
//
// For the three concrete problems the cheapest augmentation for one
// request depends only on z and that request; the context set of
// previously satisfied requests is accepted for interface fidelity and
// ignored.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual ProblemKind kind() const = 0;
  // Requests are identified by ids in [0, num_requests()).
  virtual int32_t num_requests() const = 0;
  // Largest value any variable may take (1 for all shipped problems).
  virtual int64_t var_upper_bound() const { return 1; }

  int32_t num_vars() const { return static_cast<int32_t>(costs_.size()); }
  const std::vector<Money>& costs() const { return costs_; }
  Solution EmptySolution() const { return Solution(costs_); }

  // True iff z satisfies the single request r.
  virtual bool Satisfies(const Solution& z, Request r) const = 0;

  // Cheapest w with max(w, z) satisfying r, under the problem's documented
  // tie-break. Empty if r is already satisfied. Throws InfeasibleError
  // when no augmentation exists.
  virtual Increment BackupSingle(const Solution& z, Request r) const = 0;

  // z in Sols(requests). Throws StructuralError on dimension mismatch.
  bool IsFeasible(const Solution& z, std::span<const Request> requests) const;

  // aug(W | z, context). Only |W| <= 1 is served here; batches go through
  // the exact oracle (ExactAugment). Returns Money::Infinite() when no
  // augmentation exists.
  Money Aug(std::span<const Request> w, const Solution& z,
            std::span<const Request> context = {}) const;

  // backup(W | z, context), |W| <= 1. Throws InfeasibleError when aug is
  // infinite.
  Increment Backup(std::span<const Request> w, const Solution& z,
                   std::span<const Request> context = {}) const;

 protected:
  explicit Problem(std::vector<Money> costs) : costs_(std::move(costs)) {}
  Problem(const Problem&) = default;
  Problem& operator=(const Problem&) = default;

  void CheckSolution(const Solution& z) const;
  void CheckRequest(Request r) const;

 private:
  std::vector<Money> costs_;
};

// Weighted KL divergence sum_i c_i [x_i log(x_i / y_i) - x_i + y_i] with the
// convention 0 log 0 = 0. Throws DomainError if x_i > 0 where y_i = 0 and
// StructuralError on length mismatch.
double WeightedKl(std::span<const double> c, std::span<const double> x,
                  std::span<const double> y);

}  // namespace aiplab

#endif  // AIPLAB_AIP_H_
