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

#ifndef KCSCHED_EDD_H_
#define KCSCHED_EDD_H_

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "kcsched/instance.h"

namespace kcsched {

// sigma: one due date per job, in {0, ..., T}. 0 means "not yet assigned" and
// only appears as algorithm state.
struct DueDateAssignment {
  std::vector<Time> due;

  DueDateAssignment() = default;
  explicit DueDateAssignment(std::vector<Time> values) : due(std::move(values)) {}
  DueDateAssignment(std::initializer_list<Time> values) : due(values) {}
  DueDateAssignment(int num_jobs, Time value) : due(num_jobs, value) {}

  int size() const { return static_cast<int>(due.size()); }
  Time operator[](JobId j) const { return due[j]; }
  Time& operator[](JobId j) { return due[j]; }
  friend bool operator==(const DueDateAssignment&,
                         const DueDateAssignment&) = default;
};

struct Segment {
  JobId job;
  Time start;
  Time end;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Schedule {
  std::vector<Segment> segments;  // in time order, contiguous runs merged
  std::vector<Time> completion;   // C_j per job
  Cost total_cost;
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Sum_j f_j(C_j) for the given completion times.
Cost ScheduleCost(std::span<const Time> completion, const Instance& instance);
// Sum_j f_j(sigma_j).
Cost AssignmentCost(const DueDateAssignment& sigma, const Instance& instance);

// Interval residual demand with releases:
//   D(r,t,sigma) = max(r + p({j : r <= r_j <= sigma_j < t}) - t + 1, 0).
// No range checks; see release.h for the checked entry point.
Time IntervalResidualDemand(Time r, Time t, std::span<const Time> sigma,
                            const Instance& instance);

// True when every demand is covered. Accepts 0 entries (never covering).
// Without releases: D(t, sigma) = 0 for all t. With releases: no job is due
// before its release and D(r,t,sigma) = 0 for all r in H, r < t <= T.
bool CoversAllDemands(std::span<const Time> sigma, const Instance& instance);

// Public feasibility test. Throws ContractViolation if some sigma_j is
// outside [1, T].
bool FeasibleAssignment(const DueDateAssignment& sigma,
                        const Instance& instance);

// Nonpreemptive earliest-due-date schedule (ties by job id) with no idle time.
// Requires no release dates. Throws InfeasibleAssignment carrying the first
// time t whose demand is uncovered.
Schedule EddSchedule(const DueDateAssignment& sigma, const Instance& instance);

struct DeadlineMiss {
  JobId job;
  Time due;
  friend bool operator==(const DeadlineMiss&, const DeadlineMiss&) = default;
};

struct PreemptiveEddResult {
  bool feasible = false;
  Schedule schedule;
  std::optional<DeadlineMiss> first_miss;
};

struct PreemptiveEddOptions {
  // Run the unit-time reference sweep instead of the event-driven one.
  bool unit_sweep = false;
};

// Preemptive EDD honoring release dates: at every moment run the released,
// unfinished job with the earliest due date (ties by id). The schedule is
// always completed; due-date misses are reported, not thrown. The first miss
// is the missed job with the smallest due date (ties by id).
PreemptiveEddResult PreemptiveEdd(const DueDateAssignment& sigma,
                                  const Instance& instance,
                                  const PreemptiveEddOptions& options = {});

}  // namespace kcsched

#endif  // KCSCHED_EDD_H_
