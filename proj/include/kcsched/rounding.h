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

// (1+eps) cost-class rounding: the primal-dual algorithm on a compressed time
// scale whose slots are the left endpoints of the cost classes.
//
// Class 0 of job j is {t : f_j(t) = 0}, class k >= 1 is
// {t : (1+eps)^(k-1) <= f_j(t) < (1+eps)^k}, and INFEASIBLE is a final class
// of its own. T^ collects 1 and every class left endpoint. An interval
// [t_i, t_{i+1} - 1] costs f'_j(t_i) = f_j(t_{i+1} - 1); the last one costs
// f_j(T).

#ifndef KCSCHED_ROUNDING_H_
#define KCSCHED_ROUNDING_H_

#include <cstdint>
#include <vector>

#include "kcsched/covering_model.h"
#include "kcsched/edd.h"
#include "kcsched/instance.h"
#include "kcsched/primal_dual.h"
#include "kcsched/rational.h"

namespace kcsched {

// floor(log_{1+eps} v) for v >= 1, exact. Throws DomainError unless eps > 0
// and v >= 1.
int64_t FloorLog(int64_t v, const Rational& eps);

// Class index of a finite cost value: 0 for 0, else FloorLog(v) + 1.
int64_t CostClass(int64_t v, const Rational& eps);

struct IntervalPartition {
  Rational epsilon;
  Time horizon = 0;
  std::vector<Time> endpoints;  // t_1 = 1 < t_2 < ... < t_tau

  int num_intervals() const { return static_cast<int>(endpoints.size()); }
  // 0-based interval bounds.
  Time Left(int i) const { return endpoints[i]; }
  Time Right(int i) const {
    return i + 1 < num_intervals() ? endpoints[i + 1] - 1 : horizon;
  }
  // Interval containing t in [1, T].
  int IntervalOf(Time t) const;
};

// Throws DomainError if eps <= 0.
IntervalPartition BuildPartition(const Instance& instance, const Rational& eps);

// sum_j (2 + FloorLog(max(1, largest finite f_j)) + [f_j reaches INFEASIBLE]) + 1.
int64_t PartitionSizeBound(const Instance& instance, const Rational& eps);

// f'[j][i] for job j and 0-based interval i.
std::vector<std::vector<Cost>> ModifiedCosts(const Instance& instance,
                                             const IntervalPartition& partition);

// Covering model with one slot per interval and costs f'.
CoveringModel RoundedModel(const Instance& instance,
                           const IntervalPartition& partition);

// Slot (1-based) whose interval contains sigma_j, for each job.
DueDateAssignment SnapToSlots(const DueDateAssignment& sigma,
                              const IntervalPartition& partition);
// Right end of each slot's interval.
DueDateAssignment SlotsToDueDates(const DueDateAssignment& slots,
                                  const IntervalPartition& partition);
// sum_j f'_j over the given slots.
Cost RoundedObjective(const DueDateAssignment& slots, const Instance& instance,
                      const IntervalPartition& partition);

struct RoundedOutcome {
  // Due dates in original time; dual and trace are in slots.
  SolveOutcome outcome;
  IntervalPartition partition;
  DueDateAssignment slots;
  Cost rounded_objective;
};

// Requires an instance without release dates. With check_invariants, also
// verifies f <= f' <= (1+eps) f on T^, the size bound, feasibility of the
// mapped due dates and cost == rounded objective.
RoundedOutcome SolveRounded(const Instance& instance, const Rational& eps,
                            const SolveOptions& options = {});

}  // namespace kcsched

#endif  // KCSCHED_ROUNDING_H_
