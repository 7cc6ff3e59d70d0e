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

// Common interface of the random-order online algorithms. An instance of
// an algorithm is single use: construct, feed requests one by one, read
// the solution.

#ifndef AIPLAB_ONLINE_ALGORITHM_H_
#define AIPLAB_ONLINE_ALGORITHM_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "aiplab/aip.h"
#include "aiplab/money.h"
#include "aiplab/random.h"

namespace aiplab {

enum class AlgorithmKind { kNmfl, kSmc, kMfl };

const char* AlgorithmKindName(AlgorithmKind kind);
// Accepts "nmfl", "smc" and "mfl". Throws StructuralError otherwise.
AlgorithmKind ParseAlgorithmKind(std::string_view name);

struct AlgorithmConfig {
  // Phase budget multiplier: a phase ends once its spend exceeds
  // doubling_k * beta * (1 + ln(m * n)).
  double doubling_k = 8.0;
  // Initial guess of the optimum; the algorithm picks its own default when
  // unset.
  std::optional<Money> beta0;
  // NMFL: connect to the cheapest facility after the sampled ones open.
  bool recompute_backup = false;
  // SMC: only sample the unbought columns of the arriving row.
  bool sample_support_only = false;
};

struct AlgorithmStats {
  Money beta_final = Money::Zero();
  int32_t phases = 0;
  // Sampling probabilities that had to be clamped to 1.
  int64_t clamped_samples = 0;
};

class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;

  virtual AlgorithmKind kind() const = 0;

  // Serves one arrival and returns the cost it added to the solution.
  virtual Money Feed(Request r, Rng& rng) = 0;
  virtual const Solution& solution() const = 0;
  virtual AlgorithmStats stats() const = 0;

  // Free-order hook: index into `pending` of the request to reveal next.
  // Random-order algorithms reveal uniformly at random.
  virtual size_t ChooseNext(std::span<const Request> pending, Rng& rng) {
    return static_cast<size_t>(UniformIndex(rng, pending.size()));
  }
};

// `horizon` is the number of requests the algorithm will be fed. Throws
// StructuralError when the algorithm does not apply to the problem type
// (nmfl: facility location; smc: multicover; mfl: metric facility
// location).
std::unique_ptr<OnlineAlgorithm> MakeAlgorithm(
    AlgorithmKind kind, std::shared_ptr<const Problem> problem,
    int32_t horizon, const AlgorithmConfig& config = {});

// Feeds `requests` in the order chosen by the algorithm's ChooseNext hook
// (a uniform random order for the shipped algorithms), drawing the order
// from `order_rng` and passing `algorithm_rng` to Feed. Returns the total
// spend.
Money FeedInChosenOrder(OnlineAlgorithm& algorithm,
                        std::span<const Request> requests, Rng& order_rng,
                        Rng& algorithm_rng);

// The order FeedInChosenOrder produces for an algorithm that keeps the
// default ChooseNext, given the same order stream.
std::vector<Request> UniformRevealOrder(std::span<const Request> requests,
                                        Rng& order_rng);

}  // namespace aiplab

#endif  // AIPLAB_ONLINE_ALGORITHM_H_
