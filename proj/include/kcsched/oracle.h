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

// Exact optimum at desk scale.

#ifndef KCSCHED_ORACLE_H_
#define KCSCHED_ORACLE_H_

#include <cstdint>
#include <vector>

#include "kcsched/edd.h"
#include "kcsched/instance.h"

namespace kcsched {

struct OracleResult {
  Cost opt_cost;
  // Processing order (no releases) or an optimal due-date vector (releases).
  std::vector<JobId> permutation;
  DueDateAssignment due_dates;
  int64_t nodes_explored = 0;
};

inline constexpr int kMaxOracleJobs = 20;
inline constexpr int kMaxReleaseOracleJobs = 5;
inline constexpr Time kMaxReleaseOracleHorizon = 16;

// Subset DP over no-idle sequences. Requires no releases. Throws
// SizeLimitError above kMaxOracleJobs jobs and InfeasibleInstance when every
// schedule has INFEASIBLE cost.
OracleResult ExactOpt(const Instance& instance);

// Exhaustive over due-date vectors sigma_j in [r_j + p_j, T], filtered by
// preemptive EDD. Throws SizeLimitError beyond the size limits.
OracleResult ExactOptRelease(const Instance& instance);

// Cost of processing jobs back to back in the given order.
Cost SequenceCost(const std::vector<JobId>& order, const Instance& instance);

}  // namespace kcsched

#endif  // KCSCHED_ORACLE_H_
