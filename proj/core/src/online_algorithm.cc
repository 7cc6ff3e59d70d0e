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

#include "aiplab/online_algorithm.h"

#include <string>
#include <utility>
#include <vector>

#include "aiplab/error.h"
#include "aiplab/instances.h"
#include "aiplab/mfl.h"
#include "aiplab/nmfl.h"
#include "aiplab/smc.h"

namespace aiplab {

const char* AlgorithmKindName(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kNmfl:
      return "nmfl";
    case AlgorithmKind::kSmc:
      return "smc";
    case AlgorithmKind::kMfl:
      return "mfl";
  }
  return "?";
}

AlgorithmKind ParseAlgorithmKind(std::string_view name) {
  if (name == "nmfl") return AlgorithmKind::kNmfl;
  if (name == "smc") return AlgorithmKind::kSmc;
  if (name == "mfl") return AlgorithmKind::kMfl;
  throw StructuralError("unknown algorithm '" + std::string(name) + "'");
}

std::unique_ptr<OnlineAlgorithm> MakeAlgorithm(
    AlgorithmKind kind, std::shared_ptr<const Problem> problem,
    int32_t horizon, const AlgorithmConfig& config) {
  switch (kind) {
    case AlgorithmKind::kNmfl:
    case AlgorithmKind::kMfl: {
      auto fl = std::dynamic_pointer_cast<const FlInstance>(problem);
      if (!fl) {
        throw StructuralError(std::string(AlgorithmKindName(kind)) +
                              " needs a facility location instance");
      }
      if (kind == AlgorithmKind::kMfl) {
        return std::make_unique<MflAlgorithm>(std::move(fl));
      }
      return std::make_unique<NmflAlgorithm>(std::move(fl), horizon, config);
    }
    case AlgorithmKind::kSmc: {
      auto smc = std::dynamic_pointer_cast<const SmcInstance>(problem);
      if (!smc) throw StructuralError("smc needs a multicover instance");
      return std::make_unique<SmcAlgorithm>(std::move(smc), horizon, config);
    }
  }
  throw StructuralError("unknown algorithm kind");
}

Money FeedInChosenOrder(OnlineAlgorithm& algorithm,
                        std::span<const Request> requests, Rng& order_rng,
                        Rng& algorithm_rng) {
  std::vector<Request> pending(requests.begin(), requests.end());
  Money spend = Money::Zero();
  while (!pending.empty()) {
    const size_t k = algorithm.ChooseNext(pending, order_rng);
    if (k >= pending.size()) {
      throw StructuralError("ChooseNext returned an index out of range");
    }
    const Request next = pending[k];
    pending[k] = pending.back();
    pending.pop_back();
    spend += algorithm.Feed(next, algorithm_rng);
  }
  return spend;
}

std::vector<Request> UniformRevealOrder(std::span<const Request> requests,
                                        Rng& order_rng) {
  std::vector<Request> pending(requests.begin(), requests.end());
  std::vector<Request> order;
  order.reserve(pending.size());
  while (!pending.empty()) {
    const size_t k = static_cast<size_t>(UniformIndex(order_rng, pending.size()));
    order.push_back(pending[k]);
    pending[k] = pending.back();
    pending.pop_back();
  }
  return order;
}

}  // namespace aiplab
