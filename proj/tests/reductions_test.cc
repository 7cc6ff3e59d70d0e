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

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include <gtest/gtest.h>

#include "aiplab/error.h"
#include "aiplab/generators.h"
#include "aiplab/online_algorithm.h"
#include "aiplab/random.h"
#include "aiplab/reductions.h"

namespace aiplab {
namespace {

AlgorithmFactory Factory(AlgorithmKind kind,
                         std::shared_ptr<const Problem> problem) {
  return [kind, problem](int32_t horizon) {
    return MakeAlgorithm(kind, problem, horizon);
  };
}

std::vector<DiscreteDistribution> RandomDistributions(const Problem& p,
                                                      int32_t n,
                                                      uint64_t seed) {
  Rng rng = MakeStream(seed, "dists");
  std::vector<DiscreteDistribution> out;
  for (int32_t t = 0; t < n; ++t) {
    std::vector<Request> support;
    for (int k = 0; k < 3; ++k) {
      support.push_back(
          {static_cast<int32_t>(UniformIndex(rng, p.num_requests()))});
    }
    out.push_back(DiscreteDistribution(support, {1, 2, 3}));
  }
  return out;
}

TEST(SampleSizeTest, RoundsHalvesUp) {
  EXPECT_EQ(SampleSize(0.5, 5), 3);
  EXPECT_EQ(SampleSize(0.25, 4), 1);
  EXPECT_EQ(SampleSize(0.25, 6), 2);
  EXPECT_EQ(SampleSize(1.0, 7), 7);
  EXPECT_THROW(SampleSize(0.0, 7), DomainError);
  EXPECT_THROW(SampleSize(1.5, 7), DomainError);
}

TEST(ProphetTest, PointMassesNeedNoBackup) {
  const auto inst = GenerateSetMulticover(1, 30, 15, 0.2, 2);
  std::vector<DiscreteDistribution> dists;
  for (int32_t i = 0; i < 30; ++i) {
    dists.push_back(DiscreteDistribution::PointMass({i}));
  }
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const ReductionReport r = ProphetSingleSample(
        *inst, Factory(AlgorithmKind::kSmc, inst), dists, seed);
    EXPECT_EQ(r.backup_cost, Money::Zero());
    EXPECT_TRUE(r.feasible);
    std::vector<Request> fed = r.fed, real = r.realized;
    std::sort(fed.begin(), fed.end());
    std::sort(real.begin(), real.end());
    EXPECT_EQ(fed, real);
  }
}

TEST(TwoStageTest, PointMassesLargeLambdaNoStageTwo) {
  const auto inst = GenerateFacilityLocation(2, 8, 12, {});
  std::vector<DiscreteDistribution> dists;
  for (int32_t v = 0; v < 12; ++v) {
    dists.push_back(DiscreteDistribution::PointMass({v}));
  }
  const ReductionReport r = TwoStageProphet(
      *inst, Factory(AlgorithmKind::kNmfl, inst), dists, 5, 3);
  EXPECT_EQ(r.fed.size(), 60u);
  EXPECT_EQ(r.backup_raw, Money::Zero());
  EXPECT_EQ(r.total, r.mock_cost);
}

TEST(TwoStageTest, LambdaOneIsSingleSampleProphet) {
  const auto inst = GenerateSetMulticover(4, 25, 12, 0.25, 2);
  const auto dists = RandomDistributions(*inst, 25, 4);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = Factory(AlgorithmKind::kSmc, inst);
    const ReductionReport a = ProphetSingleSample(*inst, f, dists, seed);
    const ReductionReport b = TwoStageProphet(*inst, f, dists, 1, seed);
    EXPECT_TRUE(a.solution == b.solution);
    EXPECT_EQ(a.mock_cost, b.mock_cost);
    EXPECT_EQ(a.backup_cost, b.backup_cost);
    EXPECT_EQ(a.realized, b.realized);
  }
}

TEST(TwoStageTest, MarkupScalesStageTwo) {
  const auto inst = GenerateSetMulticover(5, 25, 12, 0.25, 2);
  const auto dists = RandomDistributions(*inst, 25, 5);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const ReductionReport r = TwoStageProphet(
        *inst, Factory(AlgorithmKind::kSmc, inst), dists, 3, seed);
    EXPECT_EQ(r.backup_cost, r.backup_raw * 3);
    EXPECT_EQ(r.total, r.mock_cost + r.backup_cost);
    EXPECT_EQ(r.solution.cost(), r.mock_cost + r.backup_raw);
  }
}

TEST(OnlineWithASampleTest, FullSampleNeedsNoBackup) {
  const auto inst = GenerateSetCover(6, 30, 12, 0.15, {1, 3});
  const auto fl = SetCoverAsFacilityLocation(*inst);
  const auto order = AllRequests(*fl);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const ReductionReport r = OnlineWithASample(
        *fl, Factory(AlgorithmKind::kNmfl, fl), order, 1.0, seed);
    EXPECT_EQ(r.fed.size(), order.size());
    EXPECT_EQ(r.backup_cost, Money::Zero());
    EXPECT_TRUE(r.feasible);
  }
}

TEST(OnlineWithASampleTest, SampleIsSubsetOfAdversaryRequests) {
  const auto inst = GenerateSetMulticover(7, 20, 10, 0.3, 2);
  const auto order = AllRequests(*inst);
  const ReductionReport r = OnlineWithASample(
      *inst, Factory(AlgorithmKind::kSmc, inst), order, 0.25, 9);
  ASSERT_EQ(r.fed.size(), 5u);
  std::vector<Request> fed = r.fed;
  std::sort(fed.begin(), fed.end());
  EXPECT_EQ(std::adjacent_find(fed.begin(), fed.end()), fed.end());
  EXPECT_EQ(r.realized, order);
}

TEST(ReductionTest, AllModelsFeasibleAndMonotone) {
  FlCostModel metric;
  metric.metric = true;
  const auto smc = GenerateSetMulticover(8, 20, 10, 0.3, 2);
  const auto fl = GenerateFacilityLocation(8, 6, 15, metric);
  struct Case {
    AlgorithmKind kind;
    std::shared_ptr<const Problem> p;
  };
  for (const Case& c : {Case{AlgorithmKind::kSmc, smc},
                        Case{AlgorithmKind::kNmfl, fl},
                        Case{AlgorithmKind::kMfl, fl}}) {
    const auto f = Factory(c.kind, c.p);
    const auto dists = RandomDistributions(*c.p, c.p->num_requests(), 8);
    const auto all = AllRequests(*c.p);
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const ReductionReport reports[] = {
          RandomOrderRun(*c.p, f, all, seed),
          ProphetSingleSample(*c.p, f, dists, seed),
          TwoStageProphet(*c.p, f, dists, 2, seed),
          OnlineWithASample(*c.p, f, all, 0.5, seed),
      };
      for (const ReductionReport& r : reports) {
        EXPECT_TRUE(r.feasible);
        EXPECT_TRUE(c.p->IsFeasible(r.solution, r.realized));
        EXPECT_GE(r.solution.cost(), r.mock_cost);
      }
    }
  }
}

TEST(ReductionTest, InnerAlgorithmIsABlackBox) {
  const auto inst = GenerateSetMulticover(9, 30, 15, 0.2, 2);
  const auto all = AllRequests(*inst);
  const ReductionReport r =
      RandomOrderRun(*inst, Factory(AlgorithmKind::kSmc, inst), all, 42);
  auto alg = MakeAlgorithm(AlgorithmKind::kSmc, inst, 30);
  Rng order = MakeStream(42, "shuffle");
  Rng coins = MakeStream(42, "algorithm");
  FeedInChosenOrder(*alg, all, order, coins);
  EXPECT_TRUE(alg->solution() == r.solution);
  Rng order2 = MakeStream(42, "shuffle");
  EXPECT_EQ(UniformRevealOrder(all, order2), r.fed);
}

TEST(ReductionTest, RejectsBadInputs) {
  const auto inst = GenerateSetMulticover(1, 5, 5, 0.5, 1);
  const auto f = Factory(AlgorithmKind::kSmc, inst);
  const std::vector<DiscreteDistribution> bad = {
      DiscreteDistribution::PointMass({99})};
  EXPECT_THROW(ProphetSingleSample(*inst, f, bad, 1), StructuralError);
  EXPECT_THROW(TwoStageProphet(*inst, f, {}, 0, 1), DomainError);
}

// Mock run on sample M with backups for real R, versus the roles swapped.
// Since M and R are iid the two costs share a distribution.
Money MatedCost(const Problem& p, const AlgorithmFactory& f,
                const std::vector<Request>& mock,
                const std::vector<Request>& real, uint64_t seed) {
  auto alg = f(static_cast<int32_t>(mock.size()));
  Rng order = MakeStream(seed, "shuffle");
  Rng coins = MakeStream(seed, "algorithm");
  FeedInChosenOrder(*alg, mock, order, coins);
  Solution z = alg->solution();
  for (const Request r : real) {
    const Request w[] = {r};
    z.MaxWith(p.Backup(w, z));
  }
  return z.cost();
}

TEST(ReductionTest, MatesAreExchangeable) {
  const auto inst = GenerateSetMulticover(10, 20, 12, 0.25, 2);
  const auto dists = RandomDistributions(*inst, 20, 10);
  const auto f = Factory(AlgorithmKind::kSmc, inst);
  const int n = 1500;
  double sum = 0, sq = 0;
  for (int s = 0; s < n; ++s) {
    Rng a = MakeStream(s, "mock-draw"), b = MakeStream(s, "real-draw");
    std::vector<Request> m, r;
    for (const auto& d : dists) {
      m.push_back(d.Sample(a));
      r.push_back(d.Sample(b));
    }
    const double diff = MatedCost(*inst, f, m, r, s).ToDouble() -
                        MatedCost(*inst, f, r, m, s).ToDouble();
    sum += diff;
    sq += diff * diff;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sq / n - mean * mean) / n);
  EXPECT_LE(std::abs(mean), 4 * se + 1e-12);
}

}  // namespace
}  // namespace aiplab
