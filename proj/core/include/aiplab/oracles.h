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

// Offline optima: exact branch and bound at small sizes, greedy and local
// search upper bounds beyond, brute force for cross-checking, and the
// expected optimum of iid draws.

#ifndef AIPLAB_ORACLES_H_
#define AIPLAB_ORACLES_H_

#include <cstdint>
#include <optional>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "aiplab/aip.h"
#include "aiplab/instances.h"

namespace aiplab {

inline constexpr int32_t kExactCoverMaxColumns = 30;
inline constexpr int32_t kExactFlMaxFacilities = 20;
inline constexpr int32_t kNaiveMaxVariables = 16;

struct OptResult {
  Money value = Money::Zero();
  Solution solution;
  // True only for certified optima.
  bool exact = false;
};

// Optimum of set cover or multicover restricted to `requests` (duplicates
// allowed). Throws SizeGuardError above kExactCoverMaxColumns columns and
// StructuralError for other problem types. An unsatisfiable request set
// yields an infinite value.
OptResult ExactOptCover(const Problem& problem,
                        std::span<const Request> requests);

// Facility location optimum over the given clients. Throws SizeGuardError
// above kExactFlMaxFacilities facilities.
OptResult ExactOptFl(const FlInstance& instance,
                     std::span<const Request> requests);

// Density greedy for set cover and multicover: repeatedly buy the column
// with the most residual demand covered per unit cost. Throws
// InfeasibleError when the requests cannot be covered.
OptResult GreedyCover(const Problem& problem,
                      std::span<const Request> requests);

// Add/drop local search from the best single facility. Upper bound only.
OptResult LocalSearchFl(const FlInstance& instance,
                        std::span<const Request> requests);

// Exact where the size guard allows, otherwise the matching upper bound
// (exact = false).
OptResult BestOpt(const Problem& problem, std::span<const Request> requests);

// Batch augmentation aug(W | z): the cheapest increment making z feasible
// for all of W, solved exactly. value is the cost of the increment and
// solution is max(z, increment).
OptResult ExactAugment(const Problem& problem, const Solution& z,
                       std::span<const Request> w);

// Exhaustive enumeration over all 0/1 solutions (cover) or all facility
// subsets (facility location). Cross-check for the exact solvers; throws
// SizeGuardError above kNaiveMaxVariables columns or facilities.
OptResult NaiveOpt(const Problem& problem, std::span<const Request> requests);

using Rational = boost::multiprecision::cpp_rational;

struct ExpectedOpt {
  double value = 0;
  // Set when the expectation was computed by exhaustive enumeration.
  std::optional<Rational> exact;
  // Standard error of the Monte-Carlo estimate (0 when exact).
  double standard_error = 0;
  // Outcome tuples enumerated, or Monte-Carlo samples drawn.
  int64_t outcomes = 0;
};

inline constexpr double kMaxEnumeratedOutcomes = 1e6;

// E[opt({v_1, ..., v_k})] for k = n_draws iid draws from `distribution`.
// Enumerates all |support|^k outcome tuples (grouped into multisets with
// multinomial weights) when that count is at most kMaxEnumeratedOutcomes,
// otherwise averages `mc_samples` seeded samples. Each outcome is solved
// with the exact oracle.
ExpectedOpt ExpectedOptIid(const Problem& problem,
                           const DiscreteDistribution& distribution,
                           int32_t n_draws, uint64_t seed = 0,
                           int64_t mc_samples = 2000);

// E[opt({v_1, ..., v_n})] for independent v_t ~ distributions[t], by
// enumerating the product of the supports. Throws SizeGuardError above
// kMaxEnumeratedOutcomes outcomes.
ExpectedOpt ExpectedOptIndependent(
    const Problem& problem,
    std::span<const DiscreteDistribution> distributions);

}  // namespace aiplab

#endif  // AIPLAB_ORACLES_H_
