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

#include "kcsched/edd.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "kcsched/errors.h"

namespace kcsched {
namespace {

void AppendSegment(std::vector<Segment>& segments, JobId job, Time start,
                   Time end) {
  if (!segments.empty() && segments.back().job == job &&
      segments.back().end == start) {
    segments.back().end = end;
  } else {
    segments.push_back({job, start, end});
  }
}

void CheckRange(const DueDateAssignment& sigma, const Instance& instance) {
  if (sigma.size() != instance.num_jobs()) {
    throw ContractViolation("due-date vector has " +
                            std::to_string(sigma.size()) + " entries for " +
                            std::to_string(instance.num_jobs()) + " jobs");
  }
  for (JobId j = 0; j < sigma.size(); ++j) {
    if (sigma[j] < 1 || sigma[j] > instance.horizon()) {
      throw ContractViolation("job " + std::to_string(j + 1) + " has due date " +
                              std::to_string(sigma[j]) + " outside [1, T]");
    }
  }
}

std::vector<JobId> EddOrder(std::span<const Time> sigma) {
  std::vector<JobId> order(sigma.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](JobId a, JobId b) {
    return sigma[a] < sigma[b];
  });
  return order;
}

}  // namespace

Cost ScheduleCost(std::span<const Time> completion, const Instance& instance) {
  Cost total(0);
  for (JobId j = 0; j < instance.num_jobs(); ++j) {
    total += instance.job(j).cost.At(completion[j]);
  }
  return total;
}

Cost AssignmentCost(const DueDateAssignment& sigma, const Instance& instance) {
  return ScheduleCost(sigma.due, instance);
}

Time IntervalResidualDemand(Time r, Time t, std::span<const Time> sigma,
                            const Instance& instance) {
  Time late = 0;
  for (JobId j = 0; j < instance.num_jobs(); ++j) {
    const Time release = instance.job(j).release;
    if (r <= release && release <= sigma[j] && sigma[j] < t) {
      late += instance.job(j).p;
    }
  }
  return std::max<Time>(r + late - t + 1, 0);
}

bool CoversAllDemands(std::span<const Time> sigma, const Instance& instance) {
  const Time horizon = instance.horizon();
  for (JobId j = 0; j < instance.num_jobs(); ++j) {
    if (sigma[j] < instance.job(j).release) return false;
  }
  // D(r, ., sigma) is positive somewhere on (r, T] iff it is positive at the
  // left end or just after some due date.
  for (Time r : instance.release_dates()) {
    if (r + 1 <= horizon && IntervalResidualDemand(r, r + 1, sigma, instance) > 0) {
      return false;
    }
    for (Time due : sigma) {
      const Time t = due + 1;
      if (t > r + 1 && t <= horizon &&
          IntervalResidualDemand(r, t, sigma, instance) > 0) {
        return false;
      }
    }
  }
  return true;
}

bool FeasibleAssignment(const DueDateAssignment& sigma,
                        const Instance& instance) {
  CheckRange(sigma, instance);
  return CoversAllDemands(sigma.due, instance);
}

Schedule EddSchedule(const DueDateAssignment& sigma, const Instance& instance) {
  if (instance.has_release_dates()) {
    throw ContractViolation("EddSchedule requires an instance without releases");
  }
  CheckRange(sigma, instance);
  const std::vector<JobId> order = EddOrder(sigma.due);
  Schedule schedule;
  schedule.completion.assign(instance.num_jobs(), 0);
  Time now = 0;
  for (size_t k = 0; k < order.size(); ++k) {
    const JobId j = order[k];
    schedule.segments.push_back({j, now, now + instance.job(j).p});
    now += instance.job(j).p;
    schedule.completion[j] = now;
  }
  // The processing due by d is exactly the completion time of the last job
  // with due date <= d, so a late job marks the first uncovered demand.
  for (size_t k = 0; k < order.size(); ++k) {
    const JobId j = order[k];
    const bool last_of_group =
        k + 1 == order.size() || sigma[order[k + 1]] != sigma[j];
    if (last_of_group && schedule.completion[j] > sigma[j]) {
      throw InfeasibleAssignment(
          "due dates cannot be met: demand at t=" + std::to_string(sigma[j] + 1) +
              " is uncovered",
          sigma[j] + 1);
    }
  }
  schedule.total_cost = ScheduleCost(schedule.completion, instance);
  return schedule;
}

namespace {

struct EddKey {
  Time due;
  JobId job;
  friend auto operator<=>(const EddKey&, const EddKey&) = default;
};

Schedule EventSweep(const DueDateAssignment& sigma, const Instance& instance) {
  const int n = instance.num_jobs();
  std::vector<JobId> by_release(n);
  std::iota(by_release.begin(), by_release.end(), 0);
  std::stable_sort(by_release.begin(), by_release.end(), [&](JobId a, JobId b) {
    return instance.job(a).release < instance.job(b).release;
  });
  std::vector<Time> remaining(n);
  for (JobId j = 0; j < n; ++j) remaining[j] = instance.job(j).p;

  Schedule schedule;
  schedule.completion.assign(n, 0);
  std::set<EddKey> ready;
  Time now = 0;
  int next = 0;
  int done = 0;
  while (done < n) {
    while (next < n && instance.job(by_release[next]).release <= now) {
      ready.insert({sigma[by_release[next]], by_release[next]});
      ++next;
    }
    if (ready.empty()) {
      now = instance.job(by_release[next]).release;
      continue;
    }
    const JobId j = ready.begin()->job;
    const Time next_release = next < n ? instance.job(by_release[next]).release
                                       : std::numeric_limits<Time>::max();
    const Time run = std::min(remaining[j], next_release - now);
    AppendSegment(schedule.segments, j, now, now + run);
    now += run;
    remaining[j] -= run;
    if (remaining[j] == 0) {
      schedule.completion[j] = now;
      ready.erase(ready.begin());
      ++done;
    }
  }
  return schedule;
}

Schedule UnitSweep(const DueDateAssignment& sigma, const Instance& instance) {
  const int n = instance.num_jobs();
  std::vector<Time> remaining(n);
  for (JobId j = 0; j < n; ++j) remaining[j] = instance.job(j).p;
  Schedule schedule;
  schedule.completion.assign(n, 0);
  int done = 0;
  for (Time slot = 0; done < n; ++slot) {
    std::optional<EddKey> best;
    for (JobId j = 0; j < n; ++j) {
      if (remaining[j] == 0 || instance.job(j).release > slot) continue;
      const EddKey key{sigma[j], j};
      if (!best || key < *best) best = key;
    }
    if (!best) continue;
    const JobId j = best->job;
    AppendSegment(schedule.segments, j, slot, slot + 1);
    if (--remaining[j] == 0) {
      schedule.completion[j] = slot + 1;
      ++done;
    }
  }
  return schedule;
}

}  // namespace

PreemptiveEddResult PreemptiveEdd(const DueDateAssignment& sigma,
                                  const Instance& instance,
                                  const PreemptiveEddOptions& options) {
  CheckRange(sigma, instance);
  PreemptiveEddResult result;
  result.schedule = options.unit_sweep ? UnitSweep(sigma, instance)
                                       : EventSweep(sigma, instance);
  result.schedule.total_cost = ScheduleCost(result.schedule.completion, instance);
  for (JobId j = 0; j < instance.num_jobs(); ++j) {
    if (result.schedule.completion[j] <= sigma[j]) continue;
    const DeadlineMiss miss{j, sigma[j]};
    if (!result.first_miss || miss.due < result.first_miss->due) {
      result.first_miss = miss;
    }
  }
  result.feasible = !result.first_miss.has_value();
  return result;
}

}  // namespace kcsched
