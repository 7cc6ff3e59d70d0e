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

// Seeded random instance families and fixed fixtures. Every generator is a
// pure function of its arguments. The default parameters are our own
// choices; no reference instance family exists for these problems.

#ifndef AIPLAB_GENERATORS_H_
#define AIPLAB_GENERATORS_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "aiplab/instances.h"

namespace aiplab {

struct CostRange {
  double lo = 1.0;
  double hi = 1.0;
};

// Each (set, element) membership is Bernoulli(density); an element left
// uncovered is then added to a uniformly random set. Costs are uniform in
// the range, rounded to whole micro-units.
std::shared_ptr<const SetCoverInstance> GenerateSetCover(
    uint64_t seed, int32_t universe_size, int32_t num_sets, double density,
    CostRange cost_range = {});

// Row supports are Bernoulli(density) per column (an empty row gets one
// random column); b_i is uniform in [1, min(b_max, |support|)].
std::shared_ptr<const SmcInstance> GenerateSetMulticover(uint64_t seed,
                                                        int32_t num_rows,
                                                        int32_t num_columns,
                                                        double density,
                                                        int32_t b_max);

struct FlCostModel {
  // Metric: facilities and clients are uniform points in the unit square,
  // connection cost = Euclidean distance. Otherwise connection costs are
  // iid uniform in `connection`, each replaced by the infinite sentinel with
  // probability `infinite_fraction` (a client left with no finite edge gets
  // one random finite edge back).
  bool metric = false;
  CostRange opening{0.5, 2.0};
  CostRange connection{0.0, 1.0};
  double infinite_fraction = 0.0;
};

std::shared_ptr<const FlInstance> GenerateFacilityLocation(
    uint64_t seed, int32_t num_facilities, int32_t num_clients,
    const FlCostModel& model);

// A set cover instance with per-arrival prophet distributions and their
// average.
struct ProphetFixture {
  std::shared_ptr<const SetCoverInstance> instance;
  std::vector<DiscreteDistribution> prophet;
  DiscreteDistribution averaged;
};

// The grid counterexample: universe {(i, j) : i in [rows], j in [cols]},
// one unit-cost set per sequence s in [cols]^[rows] covering {(i, s_i)},
// D^i uniform over row i, D* their average. Element (i, j) (1-based) has
// id (i-1)*cols + (j-1); sets are enumerated with the last row varying
// fastest.
ProphetFixture GridCounterexample(int32_t rows, int32_t cols);

// The 2x2 instance: opt of any one-per-row draw is 1, while two iid draws
// from D* have expected opt 5/4.
inline ProphetFixture TwoByTwoFixture() { return GridCounterexample(2, 2); }

}  // namespace aiplab

#endif  // AIPLAB_GENERATORS_H_
