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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kcsched/errors.h"

namespace kcsched {

Time ResidualDemandRt(Time r, Time t, const DueDateAssignment& sigma,
                      const Instance& instance) {
  auto h = instance.release_dates();
  if (!std::binary_search(h.begin(), h.end(), r)) {
    throw DomainError("r=" + std::to_string(r) + " is not a release date");
  }
  if (t <= r || t > instance.horizon()) {
    throw DomainError("t=" + std::to_string(t) + " outside (r, T]");
  }
  return IntervalResidualDemand(r, t, sigma.due, instance);
}

IntervalDemand MaxIntervalDemand(std::span<const Time> sigma,
                                 const Instance& instance, bool full_scan) {
  const Time horizon = instance.horizon();
  IntervalDemand best{-1, -1, -1};
  auto consider = [&](Time r, Time t) {
    if (t <= r || t > horizon) return;
    const Time d = IntervalResidualDemand(r, t, sigma, instance);
    if (d > best.value || (d == best.value && (t > best.t || (t == best.t && r > best.r)))) {
      best = {r, t, d};
    }
  };
  for (Time r : instance.release_dates()) {
    if (full_scan) {
      for (Time t = r + 1; t <= horizon; ++t) consider(r, t);
    } else {
      consider(r, r + 1);
      consider(r, horizon);
      for (Time due : sigma) consider(r, due + 1);
    }
  }
  return best;
}

Decomposition DecomposeRelease(const CostVector& g,
                               const DueDateAssignment& sigma,
                               const Instance& instance) {
  if (CoversAllDemands(sigma.due, instance)) {
    throw ContractViolation("decomposition requested for a feasible assignment");
  }
  const IntervalDemand m = MaxIntervalDemand(sigma.due, instance);
  Decomposition result{m.t, m.r, m.value, 0, {}, 0, 0};
  result.model_size.assign(instance.num_jobs(), 0);
  for (JobId i = 0; i < instance.num_jobs(); ++i) {
    const Time r_i = instance.job(i).release;
    if (m.r <= r_i && r_i < m.t && sigma[i] < m.t) {
      result.model_size[i] = std::min(instance.job(i).p, m.value);
    }
  }
  auto tight = FindTightPair(g.functions(), result.model_size, m.t);
  if (!tight) {
    throw InfeasibleInstance("instance infeasible under cost functions: demand on [" +
                             std::to_string(m.r) + ", " + std::to_string(m.t) +
                             ") cannot be covered");
  }
  result.alpha = std::move(tight->alpha);
  result.job = tight->job;
  result.s = tight->time;
  return result;
}

LocalRatioResult SolveRelease(const Instance& instance,
                              const LocalRatioOptions& options) {
  internal::LocalRatioProblem problem;
  std::vector<Time> initial;
  for (const Job& job : instance.jobs()) initial.push_back(job.release);
  problem.initial = DueDateAssignment(std::move(initial));
  problem.feasible = [&instance](std::span<const Time> sigma) {
    return CoversAllDemands(sigma, instance);
  };
  problem.decompose = [&instance](const CostVector& g, const DueDateAssignment& sigma) {
    return DecomposeRelease(g, sigma, instance);
  };
  problem.charge_factor = 4 * instance.kappa();
  LocalRatioResult result = internal::RunLocalRatio(instance, problem, options);
  PreemptiveEddResult edd = PreemptiveEdd(result.due_dates, instance);
  if (!edd.feasible) {
    throw InvariantViolation("preemptive EDD misses a due date of a feasible assignment");
  }
  result.schedule = std::move(edd.schedule);
  result.cost = result.schedule.total_cost;
  if (options.check_invariants && result.cost > AssignmentCost(result.due_dates, instance)) {
    throw InvariantViolation("schedule costs more than its due dates");
  }
  return result;
}

}  // namespace kcsched
