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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "aiplab/error.h"
#include "aiplab/generators.h"
#include "aiplab/instances.h"
#include "aiplab/oracles.h"
#include "aiplab/random.h"
#include "brute_force.h"

namespace aiplab {
namespace {

Money U(double v) { return Money::FromDouble(v); }

std::vector<Request> Ids(std::initializer_list<int32_t> ids) {
  std::vector<Request> out;
  for (const int32_t id : ids) out.push_back({id});
  return out;
}

// Grid element (row r, col c) with 1-based indices.
Request Cell(int32_t r, int32_t c) { return {(r - 1) * 2 + (c - 1)}; }

TEST(ExactOptCoverTest, FixturePairs) {
  const ProphetFixture fx = TwoByTwoFixture();
  const std::vector<Request> cross = {Cell(1, 1), Cell(2, 2)};
  const std::vector<Request> same = {Cell(1, 1), Cell(1, 2)};
  EXPECT_EQ(ExactOptCover(*fx.instance, cross).value, U(1));
  EXPECT_EQ(ExactOptCover(*fx.instance, same).value, U(2));
  const OptResult none = ExactOptCover(*fx.instance, {});
  EXPECT_EQ(none.value, Money::Zero());
  EXPECT_TRUE(none.exact);
}

TEST(ExactOptCoverTest, SizeGuard) {
  const auto inst = GenerateSetCover(1, 10, kExactCoverMaxColumns + 1, 0.3);
  EXPECT_THROW(ExactOptCover(*inst, AllRequests(*inst)), SizeGuardError);
}

TEST(ExactOptFlTest, Examples) {
  const FlInstance two({U(5), U(3)}, {{U(1), U(4)}}, false);
  EXPECT_EQ(ExactOptFl(two, Ids({0})).value, U(6));
  EXPECT_EQ(ExactOptFl(two, {}).value, Money::Zero());
  const FlInstance one({U(2)}, {{U(1)}, {U(0.5)}, {U(3)}}, false);
  EXPECT_EQ(ExactOptFl(one, Ids({0, 1, 2})).value, U(2 + 1 + 0.5 + 3));
}

TEST(ExactOptFlTest, SizeGuard) {
  const auto inst =
      GenerateFacilityLocation(1, kExactFlMaxFacilities + 1, 3, {});
  EXPECT_THROW(ExactOptFl(*inst, AllRequests(*inst)), SizeGuardError);
}

TEST(OracleAgreementTest, CoverMatchesBruteForce) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = GenerateSetMulticover(seed, 10, 9, 0.4, 3);
    std::vector<std::vector<int>> cols(9);
    for (int32_t i = 0; i < inst->num_rows(); ++i) {
      for (const int32_t j : inst->row(i)) cols[j].push_back(i);
    }
    std::vector<int> need, demand;
    for (int32_t i = 0; i < inst->num_rows(); ++i) {
      need.push_back(i);
      demand.push_back(inst->demand(i));
    }
    const double brute = testing::BruteCoverAug(
        cols, std::vector<double>(9, 1.0), std::vector<int>(9, 0), need,
        demand);
    const OptResult exact = ExactOptCover(*inst, AllRequests(*inst));
    EXPECT_TRUE(exact.exact);
    EXPECT_NEAR(exact.value.ToDouble(), brute, 1e-9);
    EXPECT_TRUE(inst->IsFeasible(exact.solution, AllRequests(*inst)));
    EXPECT_EQ(exact.solution.cost(), exact.value);
    EXPECT_EQ(NaiveOpt(*inst, AllRequests(*inst)).value, exact.value);
  }
}

TEST(OracleAgreementTest, WeightedCoverMatchesNaive) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = GenerateSetCover(seed, 14, 12, 0.2, {0.5, 4});
    const auto all = AllRequests(*inst);
    EXPECT_EQ(ExactOptCover(*inst, all).value, NaiveOpt(*inst, all).value);
  }
}

TEST(OracleAgreementTest, FlMatchesBruteForce) {
  FlCostModel model;
  model.infinite_fraction = 0.3;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = GenerateFacilityLocation(seed, 7, 9, model);
    std::vector<double> opening;
    std::vector<std::vector<double>> conn(9, std::vector<double>(7));
    for (int32_t f = 0; f < 7; ++f) {
      opening.push_back(inst->opening_cost(f).ToDouble());
      for (int32_t v = 0; v < 9; ++v) {
        conn[v][f] = inst->connection_cost(f, v).ToDouble();
      }
    }
    const OptResult exact = ExactOptFl(*inst, AllRequests(*inst));
    EXPECT_NEAR(exact.value.ToDouble(),
                testing::BruteFl(opening, conn, {0, 1, 2, 3, 4, 5, 6, 7, 8}),
                1e-6);
    EXPECT_TRUE(inst->IsFeasible(exact.solution, AllRequests(*inst)));
    EXPECT_EQ(NaiveOpt(*inst, AllRequests(*inst)).value, exact.value);
  }
}

TEST(OracleAgreementTest, DuplicateRequestsCountOnce) {
  const FlInstance two({U(5), U(3)}, {{U(1), U(4)}}, false);
  EXPECT_EQ(ExactOptFl(two, Ids({0, 0, 0})).value, U(6));
}

TEST(GreedyCoverTest, SingleSet) {
  const SetCoverInstance inst(2, {{0, 1}}, {U(3)});
  const OptResult g = GreedyCover(inst, Ids({0, 1}));
  EXPECT_EQ(g.value, U(3));
  EXPECT_FALSE(g.exact);
}

TEST(GreedyCoverTest, UpperBoundWithinLogFactor) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = GenerateSetCover(seed, 12, 10, 0.25, {1, 5});
    const auto all = AllRequests(*inst);
    const double exact = ExactOptCover(*inst, all).value.ToDouble();
    const OptResult g = GreedyCover(*inst, all);
    EXPECT_TRUE(inst->IsFeasible(g.solution, all));
    EXPECT_GE(g.value.ToDouble(), exact - 1e-9);
    EXPECT_LE(g.value.ToDouble(), (1 + std::log(12.0)) * exact + 1e-9);
  }
}

TEST(LocalSearchFlTest, UpperBound) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = GenerateFacilityLocation(seed, 8, 15, {});
    const auto all = AllRequests(*inst);
    const OptResult ls = LocalSearchFl(*inst, all);
    EXPECT_FALSE(ls.exact);
    EXPECT_TRUE(inst->IsFeasible(ls.solution, all));
    EXPECT_GE(ls.value, ExactOptFl(*inst, all).value);
  }
}

TEST(BestOptTest, SwitchesToUpperBoundAboveGuard) {
  const auto small = GenerateSetCover(1, 20, 10, 0.2);
  const auto large = GenerateSetCover(1, 60, 50, 0.1);
  EXPECT_TRUE(BestOpt(*small, AllRequests(*small)).exact);
  EXPECT_FALSE(BestOpt(*large, AllRequests(*large)).exact);
}

TEST(ExactAugmentTest, AugmentsPartialSolution) {
  const SetCoverInstance inst(3, {{0, 1}, {1, 2}, {2}},
                              {U(2), U(2), U(1)});
  Solution z = inst.EmptySolution();
  z.Raise(0, 1);
  const OptResult aug = ExactAugment(inst, z, Ids({0, 1, 2}));
  EXPECT_EQ(aug.value, U(1));
  EXPECT_EQ(aug.solution[2], 1);
  EXPECT_EQ(aug.solution[0], 1);
}

// opt(A u B) <= opt(A) + opt(B).
TEST(OraclePropertyTest, Subadditivity) {
  Rng rng = MakeStream(5, "subadd");
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = GenerateSetMulticover(seed, 12, 10, 0.35, 2);
    std::vector<Request> a, b, ab;
    for (int32_t i = 0; i < 12; ++i) {
      const bool in_a = Bernoulli(rng, 0.4), in_b = Bernoulli(rng, 0.4);
      if (in_a) a.push_back({i});
      if (in_b) b.push_back({i});
      if (in_a || in_b) ab.push_back({i});
    }
    EXPECT_LE(ExactOptCover(*inst, ab).value,
              ExactOptCover(*inst, a).value + ExactOptCover(*inst, b).value);
  }
}

TEST(ExpectedOptTest, FixtureIidIsFiveQuarters) {
  const ProphetFixture fx = TwoByTwoFixture();
  const ExpectedOpt e = ExpectedOptIid(*fx.instance, fx.averaged, 2);
  ASSERT_TRUE(e.exact.has_value());
  EXPECT_EQ(*e.exact, Rational(5, 4));
  EXPECT_EQ(e.outcomes, 16);
  const ExpectedOpt p = ExpectedOptIndependent(*fx.instance, fx.prophet);
  ASSERT_TRUE(p.exact.has_value());
  EXPECT_EQ(*p.exact, Rational(1));
}

// Hand enumeration of the 16 ordered pairs: 4 identical (opt 1), 4
// same-row distinct (opt 2), 8 cross-row (opt 1).
TEST(ExpectedOptTest, FixtureIidMatchesPairCount) {
  const ProphetFixture fx = TwoByTwoFixture();
  Rational total = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const std::vector<Request> pair = {{a}, {b}};
      total += Rational(ExactOptCover(*fx.instance, pair).value.micros(),
                        Money::kScale);
    }
  }
  EXPECT_EQ(total / 16, *ExpectedOptIid(*fx.instance, fx.averaged, 2).exact);
}

TEST(ExpectedOptTest, ZeroDraws) {
  const ProphetFixture fx = TwoByTwoFixture();
  const ExpectedOpt e = ExpectedOptIid(*fx.instance, fx.averaged, 0);
  ASSERT_TRUE(e.exact.has_value());
  EXPECT_EQ(*e.exact, Rational(0));
}

TEST(ExpectedOptTest, LargerGridEnumeratesItself) {
  // 4 rows x 2 cols: 8 elements, 16 sets, 8^4 outcomes.
  const ProphetFixture fx = GridCounterexample(4, 2);
  const ExpectedOpt e = ExpectedOptIid(*fx.instance, fx.averaged, 4);
  ASSERT_TRUE(e.exact.has_value());
  EXPECT_EQ(e.outcomes, 4096);
  EXPECT_EQ(*ExpectedOptIndependent(*fx.instance, fx.prophet).exact,
            Rational(1));
  EXPECT_GT(*e.exact, Rational(1));
}

TEST(ExpectedOptTest, MonteCarloFallbackAboveGuard) {
  const auto inst = GenerateSetCover(3, 30, 12, 0.2);
  std::vector<Request> support;
  for (int32_t e = 0; e < 30; ++e) support.push_back({e});
  const DiscreteDistribution d = DiscreteDistribution::Uniform(support);
  const ExpectedOpt e = ExpectedOptIid(*inst, d, 5, 1, 300);
  EXPECT_FALSE(e.exact.has_value());
  EXPECT_EQ(e.outcomes, 300);
  EXPECT_GT(e.standard_error, 0);
  EXPECT_GT(e.value, 0);
}

}  // namespace
}  // namespace aiplab
