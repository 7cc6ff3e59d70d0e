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

#include "aiplab/generators.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "aiplab/error.h"
#include "aiplab/random.h"

namespace aiplab {
namespace {

Money DrawCost(Rng& rng, CostRange range) {
  if (range.hi < range.lo) throw StructuralError("cost range is inverted");
  return Money::FromDouble(UniformReal(rng, range.lo, range.hi));
}

void CheckDensity(double density) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw StructuralError("density must lie in (0, 1]");
  }
}

}  // namespace

std::shared_ptr<const SetCoverInstance> GenerateSetCover(
    uint64_t seed, int32_t universe_size, int32_t num_sets, double density,
    CostRange cost_range) {
  CheckDensity(density);
  if (num_sets < 1 || universe_size < 0) {
    throw StructuralError("set cover generator needs at least one set");
  }
  if (!(cost_range.lo > 0)) {
    throw StructuralError("set costs must be positive");
  }
  Rng rng(seed);
  std::vector<std::vector<int32_t>> sets(num_sets);
  std::vector<bool> covered(universe_size, false);
  for (int32_t j = 0; j < num_sets; ++j) {
    for (int32_t e = 0; e < universe_size; ++e) {
      if (Bernoulli(rng, density)) {
        sets[j].push_back(e);
        covered[e] = true;
      }
    }
  }
  for (int32_t e = 0; e < universe_size; ++e) {
    if (!covered[e]) sets[UniformIndex(rng, num_sets)].push_back(e);
  }
  std::vector<Money> costs(num_sets);
  for (auto& c : costs) c = DrawCost(rng, cost_range);
  return std::make_shared<const SetCoverInstance>(universe_size,
                                                  std::move(sets),
                                                  std::move(costs));
}

std::shared_ptr<const SmcInstance> GenerateSetMulticover(uint64_t seed,
                                                        int32_t num_rows,
                                                        int32_t num_columns,
                                                        double density,
                                                        int32_t b_max) {
  CheckDensity(density);
  if (num_columns < 1 || num_rows < 0 || b_max < 1) {
    throw StructuralError("multicover generator: bad dimensions");
  }
  Rng rng(seed);
  std::vector<std::vector<int32_t>> rows(num_rows);
  std::vector<int32_t> demands(num_rows);
  for (int32_t i = 0; i < num_rows; ++i) {
    for (int32_t j = 0; j < num_columns; ++j) {
      if (Bernoulli(rng, density)) rows[i].push_back(j);
    }
    if (rows[i].empty()) {
      rows[i].push_back(static_cast<int32_t>(UniformIndex(rng, num_columns)));
    }
    const int32_t cap =
        std::min<int32_t>(b_max, static_cast<int32_t>(rows[i].size()));
    demands[i] = 1 + static_cast<int32_t>(UniformIndex(rng, cap));
  }
  return std::make_shared<const SmcInstance>(num_columns, std::move(rows),
                                             std::move(demands));
}

std::shared_ptr<const FlInstance> GenerateFacilityLocation(
    uint64_t seed, int32_t num_facilities, int32_t num_clients,
    const FlCostModel& model) {
  if (num_facilities < 1 || num_clients < 0) {
    throw StructuralError("facility location generator: bad dimensions");
  }
  Rng rng(seed);
  std::vector<Money> opening(num_facilities);
  for (auto& c : opening) c = DrawCost(rng, model.opening);
  std::vector<std::vector<Money>> connection(
      num_clients, std::vector<Money>(num_facilities));
  if (model.metric) {
    std::vector<std::pair<double, double>> fac(num_facilities);
    std::vector<std::pair<double, double>> cli(num_clients);
    for (auto& [x, y] : fac) {
      x = Uniform01(rng);
      y = Uniform01(rng);
    }
    for (auto& [x, y] : cli) {
      x = Uniform01(rng);
      y = Uniform01(rng);
    }
    for (int32_t v = 0; v < num_clients; ++v) {
      for (int32_t f = 0; f < num_facilities; ++f) {
        connection[v][f] = Money::FromDouble(
            std::hypot(fac[f].first - cli[v].first,
                       fac[f].second - cli[v].second));
      }
    }
  } else {
    for (int32_t v = 0; v < num_clients; ++v) {
      bool any_finite = false;
      for (int32_t f = 0; f < num_facilities; ++f) {
        const Money c = DrawCost(rng, model.connection);
        if (Bernoulli(rng, model.infinite_fraction)) {
          connection[v][f] = Money::Infinite();
        } else {
          connection[v][f] = c;
          any_finite = true;
        }
      }
      if (!any_finite) {
        connection[v][UniformIndex(rng, num_facilities)] =
            DrawCost(rng, model.connection);
      }
    }
  }
  return std::make_shared<const FlInstance>(
      std::move(opening), std::move(connection), model.metric);
}

ProphetFixture GridCounterexample(int32_t rows, int32_t cols) {
  if (rows < 1 || cols < 1) throw StructuralError("empty grid");
  double count = std::pow(static_cast<double>(cols), rows);
  if (count > 1 << 20) throw SizeGuardError("grid has too many sets");
  const int32_t num_sets = static_cast<int32_t>(count);
  std::vector<std::vector<int32_t>> sets(num_sets);
  for (int32_t s = 0; s < num_sets; ++s) {
    // Digit i of s in base cols (most significant first) is the column
    // chosen for row i.
    int32_t rest = s;
    std::vector<int32_t> choice(rows);
    for (int32_t i = rows - 1; i >= 0; --i) {
      choice[i] = rest % cols;
      rest /= cols;
    }
    for (int32_t i = 0; i < rows; ++i) sets[s].push_back(i * cols + choice[i]);
  }
  ProphetFixture fixture;
  fixture.instance = std::make_shared<const SetCoverInstance>(
      rows * cols, std::move(sets),
      std::vector<Money>(num_sets, Money::FromUnits(1)));
  for (int32_t i = 0; i < rows; ++i) {
    std::vector<Request> support;
    for (int32_t j = 0; j < cols; ++j) support.push_back(Request{i * cols + j});
    fixture.prophet.push_back(DiscreteDistribution::Uniform(support));
  }
  fixture.averaged = DiscreteDistribution::Average(fixture.prophet);
  return fixture;
}

}  // namespace aiplab
