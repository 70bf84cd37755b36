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

#include "kcsched/oracle.h"

#include <algorithm>
#include <string>

#include "kcsched/errors.h"

namespace kcsched {

Cost SequenceCost(const std::vector<JobId>& order, const Instance& instance) {
  Cost total(0);
  Time now = 0;
  for (JobId j : order) {
    now += instance.job(j).p;
    total += instance.job(j).cost.At(now);
  }
  return total;
}

OracleResult ExactOpt(const Instance& instance) {
  if (instance.has_release_dates()) {
    throw ContractViolation("ExactOpt does not handle release dates; use ExactOptRelease");
  }
  const int n = instance.num_jobs();
  if (n > kMaxOracleJobs) {
    throw SizeLimitError("oracle limited to " + std::to_string(kMaxOracleJobs) +
                         " jobs, got " + std::to_string(n));
  }
  const uint32_t full = (uint32_t{1} << n) - 1;
  std::vector<Cost> dp(full + 1, Cost::Infeasible());
  std::vector<int8_t> last(full + 1, -1);
  std::vector<Time> size(full + 1, 0);
  dp[0] = Cost(0);
  OracleResult result;
  for (uint32_t s = 1; s <= full; ++s) {
    const int low = __builtin_ctz(s);
    size[s] = size[s & (s - 1)] + instance.job(low).p;
    for (int j = 0; j < n; ++j) {
      if (!(s >> j & 1)) continue;
      ++result.nodes_explored;
      const Cost c = dp[s ^ (uint32_t{1} << j)] + instance.job(j).cost.At(size[s]);
      if (c < dp[s]) {
        dp[s] = c;
        last[s] = static_cast<int8_t>(j);
      }
    }
  }
  if (dp[full].is_infeasible()) throw InfeasibleInstance("no feasible schedule");
  result.opt_cost = dp[full];
  for (uint32_t s = full; s != 0; s ^= uint32_t{1} << last[s]) {
    result.permutation.push_back(last[s]);
  }
  std::reverse(result.permutation.begin(), result.permutation.end());
  Time now = 0;
  result.due_dates = DueDateAssignment(n, 0);
  for (JobId j : result.permutation) result.due_dates[j] = now += instance.job(j).p;
  return result;
}

OracleResult ExactOptRelease(const Instance& instance) {
  const int n = instance.num_jobs();
  const Time horizon = instance.horizon();
  if (n > kMaxReleaseOracleJobs || horizon > kMaxReleaseOracleHorizon) {
    throw SizeLimitError("release oracle limited to n <= " +
                         std::to_string(kMaxReleaseOracleJobs) + " and T <= " +
                         std::to_string(kMaxReleaseOracleHorizon));
  }
  OracleResult result;
  result.opt_cost = Cost::Infeasible();
  DueDateAssignment sigma(n, 0);
  for (JobId j = 0; j < n; ++j) sigma[j] = instance.job(j).release + instance.job(j).p;
  // Odometer over the box [r_j + p_j, T]^n.
  while (true) {
    ++result.nodes_explored;
    const Cost cost = AssignmentCost(sigma, instance);
    if (cost < result.opt_cost && PreemptiveEdd(sigma, instance).feasible) {
      result.opt_cost = cost;
      result.due_dates = sigma;
    }
    int j = 0;
    while (j < n && sigma[j] == horizon) {
      sigma[j] = instance.job(j).release + instance.job(j).p;
      ++j;
    }
    if (j == n) break;
    ++sigma[j];
  }
  if (result.opt_cost.is_infeasible()) throw InfeasibleInstance("no feasible schedule");
  const PreemptiveEddResult edd = PreemptiveEdd(result.due_dates, instance);
  std::vector<JobId> order(n);
  for (JobId j = 0; j < n; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](JobId a, JobId b) {
    return std::pair(edd.schedule.completion[a], a) < std::pair(edd.schedule.completion[b], b);
  });
  result.permutation = std::move(order);
  return result;
}

}  // namespace kcsched
