// Copyright 2026 The kcsched Authors
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

#include "kcsched/release.h"

#include <gtest/gtest.h>

#include <random>

#include "kcsched/errors.h"
#include "kcsched/generators.h"
#include "kcsched/oracle.h"
#include "test_util.h"

namespace kcsched {
namespace {

TEST(ResidualDemandRtTest, Examples) {
  const Instance one({Job{2, {}, 0}});
  EXPECT_EQ(ResidualDemandRt(0, 2, DueDateAssignment({0}), one), 1);
  EXPECT_EQ(ResidualDemandRt(0, 2, DueDateAssignment({2}), one), 0);
  EXPECT_THROW(ResidualDemandRt(1, 2, DueDateAssignment({0}), one), DomainError);
  EXPECT_THROW(ResidualDemandRt(0, 3, DueDateAssignment({0}), one), DomainError);
  EXPECT_THROW(ResidualDemandRt(0, 0, DueDateAssignment({0}), one), DomainError);
}

TEST(ResidualDemandRtTest, MatchesScan) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = GenRandom(testing::ReleaseSuiteSpec(seed));
    std::mt19937_64 rng(seed);
    std::vector<Time> sigma;
    for (const Job& job : inst.jobs()) {
      sigma.push_back(std::uniform_int_distribution<Time>(job.release, inst.horizon())(rng));
    }
    for (Time r : inst.release_dates()) {
      for (Time t = r + 1; t <= inst.horizon(); ++t) {
        EXPECT_EQ(ResidualDemandRt(r, t, DueDateAssignment(sigma), inst),
                  testing::IntervalDemandByScan(r, t, sigma, inst));
      }
    }
  }
}

TEST(MaxIntervalDemandTest, CandidatesMatchFullScan) {
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    const Instance inst = GenRandom(testing::ReleaseSuiteSpec(seed));
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Time> sigma;
      for (const Job& job : inst.jobs()) {
        sigma.push_back(std::uniform_int_distribution<Time>(job.release, inst.horizon())(rng));
      }
      EXPECT_EQ(MaxIntervalDemand(sigma, inst), MaxIntervalDemand(sigma, inst, true));
    }
  }
}

TEST(MaxIntervalDemandTest, TwoJobExample) {
  const Instance inst({Job{3, {}, 0}, Job{1, {}, 3}});
  ASSERT_EQ(inst.horizon(), 7);
  const std::vector<Time> sigma = {0, 3};
  // Brute force over all (r, t).
  IntervalDemand best{-1, -1, -1};
  for (Time r : {0, 3}) {
    for (Time t = r + 1; t <= 7; ++t) {
      const Time d = testing::IntervalDemandByScan(r, t, sigma, inst);
      if (d > best.value || (d == best.value && (t > best.t || (t == best.t && r > best.r)))) {
        best = {r, t, d};
      }
    }
  }
  EXPECT_EQ(MaxIntervalDemand(sigma, inst), best);
  EXPECT_EQ(best, (IntervalDemand{0, 1, 3}));
}

TEST(MaxIntervalDemandTest, SingleViolatedInterval) {
  // Job 2 released at 2 and due at 2: only [2, 3) is violated.
  const Instance inst({Job{2, {}, 0}, Job{1, {}, 2}});
  const std::vector<Time> sigma = {5, 2};
  const IntervalDemand m = MaxIntervalDemand(sigma, inst);
  EXPECT_EQ(m, (IntervalDemand{2, 3, 1}));
  EXPECT_FALSE(CoversAllDemands(sigma, inst));
}

TEST(DecomposeReleaseTest, SingleReleaseMatchesLocalRatio) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = GenRandom(testing::SuiteSpec(seed));
    std::mt19937_64 rng(seed);
    std::vector<Time> sigma;
    for (JobId j = 0; j < inst.num_jobs(); ++j) {
      sigma.push_back(std::uniform_int_distribution<Time>(0, inst.horizon())(rng));
    }
    if (CoversAllDemands(sigma, inst)) continue;
    const CostVector g(inst);
    const Decomposition a = Decompose(g, DueDateAssignment(sigma), inst);
    const Decomposition b = DecomposeRelease(g, DueDateAssignment(sigma), inst);
    EXPECT_EQ(a.t_star, b.t_star);
    EXPECT_EQ(a.residual_demand, b.residual_demand);
    EXPECT_EQ(a.alpha, b.alpha);
    EXPECT_EQ(a.job, b.job);
    EXPECT_EQ(a.s, b.s);
    EXPECT_EQ(b.r_star, 0);
  }
}

TEST(SolveReleaseTest, ZeroCostsAndFeasibility) {
  const Instance inst({Job{2, {}, 0}, Job{1, {}, 1}});
  const LocalRatioResult r = SolveRelease(inst, {.check_invariants = true});
  EXPECT_EQ(r.cost, Cost(0));
  EXPECT_TRUE(FeasibleAssignment(r.due_dates, inst));
  for (const Segment& s : r.schedule.segments) EXPECT_GE(s.start, inst.job(s.job).release);
}

TEST(SolveReleaseTest, LastJobDueNoEarlierThanItCanFinish) {
  // Job 1 released at 5 must finish at 6 or later.
  const Instance inst({Job{1, CostFunction{{6, Cost(1)}}, 5}, Job{3, {}, 0}});
  const LocalRatioResult r = SolveRelease(inst, {.check_invariants = true});
  EXPECT_GE(r.due_dates[0], 6);
  EXPECT_GE(r.schedule.completion[0], 6);
}

TEST(SolveReleaseTest, RandomSuiteWithinFourKappa) {
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = GenRandom(testing::ReleaseSuiteSpec(seed));
    const LocalRatioResult r = SolveRelease(inst, {.check_invariants = true});
    const Cost opt = ExactOptRelease(inst).opt_cost;
    EXPECT_TRUE(testing::SimulateEdd(r.due_dates.due, inst));
    EXPECT_LE(r.cost.value(), 4 * inst.kappa() * opt.value()) << "seed " << seed;
    EXPECT_LE(opt, r.cost);
    EXPECT_LE(r.lower_bound, MakeRational(opt.value()));
    for (const LocalRatioFrame& f : r.trace) ASSERT_TRUE(f.r_star.has_value());
  }
}

}  // namespace
}  // namespace kcsched
