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

// Local ratio with release dates: a 4*kappa-approximation, kappa = |{r_j}|.
//
// Demands are indexed by intervals [r, t) with r a release date. The model
// cost charges jobs released in [r*, t*) that are due before t*. Due dates
// start at the release dates and the final schedule is preemptive EDD.

#ifndef KCSCHED_RELEASE_H_
#define KCSCHED_RELEASE_H_

#include <span>

#include "kcsched/edd.h"
#include "kcsched/instance.h"
#include "kcsched/local_ratio.h"

namespace kcsched {

// D(r, t, sigma). Throws DomainError unless r is a release date and
// r < t <= T.
Time ResidualDemandRt(Time r, Time t, const DueDateAssignment& sigma,
                      const Instance& instance);

struct IntervalDemand {
  Time r;
  Time t;
  Time value;
  friend bool operator==(const IntervalDemand&, const IntervalDemand&) = default;
};

// Largest D(r, t, sigma), ties to the largest t, then the largest r. Only
// t in {r + 1} and {sigma_j + 1} can win; full_scan tries every t instead.
IntervalDemand MaxIntervalDemand(std::span<const Time> sigma,
                                 const Instance& instance,
                                 bool full_scan = false);

// Same contract as Decompose, with (r*, t*) from MaxIntervalDemand and model
// sizes nonzero for r* <= r_i < t*, sigma_i < t*.
Decomposition DecomposeRelease(const CostVector& g,
                               const DueDateAssignment& sigma,
                               const Instance& instance);

// Works with or without release dates. The schedule is preemptive EDD.
LocalRatioResult SolveRelease(const Instance& instance,
                              const LocalRatioOptions& options = {});

}  // namespace kcsched

#endif  // KCSCHED_RELEASE_H_
