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
#include <memory>
#include <vector>

#include <gtest/gtest.h>

#include "aiplab/aip.h"
#include "aiplab/error.h"
#include "aiplab/generators.h"
#include "aiplab/instances.h"
#include "aiplab/oracles.h"
#include "aiplab/random.h"
#include "brute_force.h"

namespace aiplab {
namespace {

using testing::BruteCoverAug;
using testing::FormulaKl;

// S1 = {a, b} cost 2, S2 = {b, c} cost 2, S3 = {c} cost 1; a, b, c = 0, 1, 2.
SetCoverInstance ThreeSets() {
  return SetCoverInstance(3, {{0, 1}, {1, 2}, {2}},
                          {Money::FromUnits(2), Money::FromUnits(2),
                           Money::FromUnits(1)});
}

TEST(MoneyTest, DecimalRoundTrip) {
  EXPECT_EQ(Money::FromDouble(1.5).micros(), 1'500'000);
  EXPECT_EQ(Money::FromDouble(1.5).ToString(), "1.5");
  EXPECT_EQ(Money::FromUnits(3).ToString(), "3");
  EXPECT_EQ(Money::FromMicros(1).ToString(), "0.000001");
  EXPECT_EQ(Money::Infinite().ToString(), "inf");
}

TEST(MoneyTest, InfinityAbsorbs) {
  EXPECT_TRUE((Money::Infinite() + Money::FromUnits(1)).is_infinite());
  EXPECT_LT(Money::FromUnits(1'000'000), Money::Infinite());
  EXPECT_TRUE(std::isinf(Money::Infinite().ToDouble()));
}

TEST(MoneyTest, RejectsBadDoubles) {
  EXPECT_THROW(Money::FromDouble(-1), Error);
  EXPECT_THROW(Money::FromDouble(std::nan("")), Error);
}

TEST(SolutionTest, RaiseAndMaxWith) {
  const SetCoverInstance inst = ThreeSets();
  Solution z = inst.EmptySolution();
  EXPECT_EQ(z.Raise(0, 1), Money::FromUnits(2));
  EXPECT_EQ(z.Raise(0, 1), Money::Zero());
  Increment w{{{0, 1}, {2, 1}}, Money::FromUnits(3)};
  EXPECT_EQ(z.MaxWith(w), Money::FromUnits(1));
  EXPECT_EQ(z.cost(), Money::FromUnits(3));
  Solution empty = inst.EmptySolution();
  EXPECT_TRUE(empty.LessEq(z));
  EXPECT_FALSE(z.LessEq(empty));
}

TEST(AipTest, IsFeasibleExamples) {
  const SetCoverInstance inst = ThreeSets();
  Solution z = inst.EmptySolution();
  z.Raise(0, 1);
  const std::vector<Request> ab = {{0}, {1}};
  const std::vector<Request> c = {{2}};
  EXPECT_TRUE(inst.IsFeasible(z, ab));
  EXPECT_FALSE(inst.IsFeasible(z, c));
  EXPECT_TRUE(inst.IsFeasible(z, {}));
}

TEST(AipTest, IsFeasibleRejectsWrongDimension) {
  const SetCoverInstance inst = ThreeSets();
  const SetCoverInstance other(1, {{0}}, {Money::FromUnits(1)});
  const std::vector<Request> a = {{0}};
  EXPECT_THROW(inst.IsFeasible(other.EmptySolution(), a), StructuralError);
}

TEST(AipTest, BatchAugmentMatchesBruteForce) {
  const SetCoverInstance inst = ThreeSets();
  const std::vector<std::vector<int>> sets = {{0, 1}, {1, 2}, {2}};
  const std::vector<double> cost = {2, 2, 1};
  const std::vector<Request> all = {{0}, {1}, {2}};
  const double brute = BruteCoverAug(sets, cost, {0, 0, 0}, {0, 1, 2},
                                     {1, 1, 1});
  EXPECT_EQ(brute, 3);
  const OptResult aug = ExactAugment(inst, inst.EmptySolution(), all);
  EXPECT_EQ(aug.value, Money::FromDouble(brute));
  EXPECT_TRUE(inst.IsFeasible(aug.solution, all));
}

TEST(AipTest, SingleAugmentAndBackup) {
  const SetCoverInstance inst = ThreeSets();
  Solution z = inst.EmptySolution();
  z.Raise(0, 1);
  const std::vector<Request> c = {{2}};
  EXPECT_EQ(inst.Aug(c, z), Money::FromUnits(1));
  const Increment w = inst.Backup(c, z);
  ASSERT_EQ(w.entries.size(), 1u);
  EXPECT_EQ(w.entries[0].first, 2);
  EXPECT_EQ(w.cost, Money::FromUnits(1));
}

TEST(AipTest, EmptyBatchCostsNothing) {
  const SetCoverInstance inst = ThreeSets();
  EXPECT_EQ(inst.Aug({}, inst.EmptySolution()), Money::Zero());
  EXPECT_TRUE(inst.Backup({}, inst.EmptySolution()).empty());
}

TEST(AipTest, SatisfiedRequestHasEmptyBackup) {
  const SetCoverInstance inst = ThreeSets();
  Solution z = inst.EmptySolution();
  z.Raise(2, 1);
  const std::vector<Request> c = {{2}};
  EXPECT_EQ(inst.Aug(c, z), Money::Zero());
  EXPECT_TRUE(inst.Backup(c, z).empty());
}

TEST(AipTest, MulticoverBackupBuysDeficiency) {
  const SmcInstance inst(3, {{0, 1, 2}}, {2});
  Solution z = inst.EmptySolution();
  z.Raise(1, 1);
  const std::vector<Request> r = {{0}};
  const Increment w = inst.Backup(r, z);
  EXPECT_EQ(w.cost, Money::FromUnits(1));
  z.MaxWith(w);
  EXPECT_TRUE(inst.IsFeasible(z, r));
}

TEST(AipTest, FlBackupIsCheapestMarginal) {
  // f0: open 5, c=1; f1: open 3, c=4. Brute force: min(5+1, 3+4) = 6.
  const FlInstance inst({Money::FromUnits(5), Money::FromUnits(3)},
                        {{Money::FromUnits(1), Money::FromUnits(4)}}, false);
  const std::vector<Request> v = {{0}};
  EXPECT_EQ(inst.Aug(v, inst.EmptySolution()), Money::FromUnits(6));
  Solution z = inst.EmptySolution();
  z.Raise(1, 1);
  EXPECT_EQ(inst.Aug(v, z), Money::FromUnits(4));
}

// A connection bought earlier is free once its facility opens.
TEST(AipTest, FlBoughtEdgeIsFree) {
  const FlInstance inst({Money::FromUnits(5), Money::FromUnits(3)},
                        {{Money::FromUnits(1), Money::FromUnits(4)}}, false);
  Solution z = inst.EmptySolution();
  z.Raise(inst.ConnectionVar(1, 0), 1);
  const std::vector<Request> v = {{0}};
  EXPECT_EQ(inst.Aug(v, z), Money::FromUnits(3));
  EXPECT_EQ(ExactAugment(inst, z, v).value, Money::FromUnits(3));
  const Increment w = inst.Backup(v, z);
  ASSERT_EQ(w.entries.size(), 1u);
  EXPECT_EQ(w.entries[0].first, 1);
}

TEST(AipTest, UnservableClientRejectedAtConstruction) {
  EXPECT_THROW(FlInstance({Money::FromUnits(1)}, {{Money::Infinite()}}, false),
               StructuralError);
}

TEST(WeightedKlTest, MatchesFormula) {
  const std::vector<double> c = {1, 2}, x = {1, 0}, y = {0.5, 0.5};
  EXPECT_NEAR(WeightedKl(c, x, y), std::log(2.0) + 0.5, 1e-12);
  EXPECT_NEAR(WeightedKl(c, x, y), FormulaKl(c, x, y), 1e-12);
}

TEST(WeightedKlTest, ZeroOnEqualVectors) {
  const std::vector<double> c = {3, 1, 2}, x = {0.2, 0.7, 1.1};
  EXPECT_NEAR(WeightedKl(c, x, x), 0, 1e-15);
}

TEST(WeightedKlTest, SupportViolationIsDomainError) {
  const std::vector<double> c = {1, 1}, x = {1, 1}, y = {1, 0};
  EXPECT_THROW(WeightedKl(c, x, y), DomainError);
}

TEST(WeightedKlTest, RandomVectorsMatchFormula) {
  Rng rng = MakeStream(7, "kl");
  for (int it = 0; it < 200; ++it) {
    std::vector<double> c(5), x(5), y(5);
    for (int i = 0; i < 5; ++i) {
      c[i] = UniformReal(rng, 0.1, 3);
      x[i] = Bernoulli(rng, 0.3) ? 0 : UniformReal(rng, 0, 2);
      y[i] = UniformReal(rng, 0.01, 2);
    }
    const double kl = WeightedKl(c, x, y);
    EXPECT_NEAR(kl, FormulaKl(c, x, y), 1e-9);
    EXPECT_GE(kl, -1e-12);
  }
}

// aug({r} | z') <= aug({r} | z) whenever z <= z'.
TEST(AipPropertyTest, MonotoneAugmentation) {
  Rng rng = MakeStream(11, "monotone");
  for (int it = 0; it < 100; ++it) {
    const auto sc = GenerateSetCover(it, 8, 6, 0.35, {1, 4});
    const auto smc = GenerateSetMulticover(it, 6, 8, 0.5, 3);
    const auto fl = GenerateFacilityLocation(it, 4, 5, {});
    for (const Problem* p : std::vector<const Problem*>{sc.get(), smc.get(),
                                                        fl.get()}) {
      Solution small = p->EmptySolution();
      Solution big = p->EmptySolution();
      for (int32_t j = 0; j < p->num_vars(); ++j) {
        const bool in_small = Bernoulli(rng, 0.2);
        if (in_small) small.Raise(j, 1);
        if (in_small || Bernoulli(rng, 0.3)) big.Raise(j, 1);
      }
      ASSERT_TRUE(small.LessEq(big));
      const std::vector<Request> r = {
          {static_cast<int32_t>(UniformIndex(rng, p->num_requests()))}};
      EXPECT_LE(p->Aug(r, big), p->Aug(r, small));
    }
  }
}

TEST(AipPropertyTest, SingleAugmentMatchesBruteForceOnSetCover) {
  for (int it = 0; it < 100; ++it) {
    const auto inst = GenerateSetCover(100 + it, 6, 7, 0.4, {1, 5});
    Rng rng = MakeStream(it, "z");
    std::vector<std::vector<int>> sets;
    std::vector<double> cost;
    std::vector<int> bought;
    Solution z = inst->EmptySolution();
    for (int32_t j = 0; j < inst->num_sets(); ++j) {
      sets.emplace_back(inst->sets()[j].begin(), inst->sets()[j].end());
      cost.push_back(inst->set_cost(j).ToDouble());
      bought.push_back(Bernoulli(rng, 0.25));
      if (bought.back()) z.Raise(j, 1);
    }
    for (int32_t e = 0; e < inst->universe_size(); ++e) {
      const std::vector<Request> r = {{e}};
      EXPECT_NEAR(inst->Aug(r, z).ToDouble(),
                  BruteCoverAug(sets, cost, bought, {e}, {1}), 1e-9);
    }
  }
}

}  // namespace
}  // namespace aiplab
