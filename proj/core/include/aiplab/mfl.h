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

// Meyerson-style online facility location for metric instances.
//
// With no facility open the client opens argmin_f c_f + c_fv. Otherwise
// let delta be its distance to the nearest open facility and g the closed
// facility minimizing c_g + c_gv among those strictly closer than delta;
// g opens with probability min(delta / c_g, 1). The client then connects
// to the nearest open facility (lowest id on ties).

#ifndef AIPLAB_MFL_H_
#define AIPLAB_MFL_H_

#include <memory>

#include "aiplab/instances.h"
#include "aiplab/online_algorithm.h"

namespace aiplab {

class MflAlgorithm final : public OnlineAlgorithm {
 public:
  // Throws StructuralError unless the instance is flagged metric.
  explicit MflAlgorithm(std::shared_ptr<const FlInstance> instance);

  AlgorithmKind kind() const override { return AlgorithmKind::kMfl; }
  Money Feed(Request r, Rng& rng) override;
  const Solution& solution() const override { return z_; }
  AlgorithmStats stats() const override { return {Money::Zero(), 0, 0}; }

  int32_t num_open() const { return num_open_; }

 private:
  std::shared_ptr<const FlInstance> instance_;
  Solution z_;
  int32_t num_open_ = 0;
};

}  // namespace aiplab

#endif  // AIPLAB_MFL_H_
