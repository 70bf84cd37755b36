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

// Machine-readable output: run reports, traces, schedules and partitions.
// Rationals are emitted as "num/den" strings, job ids 1-based.

#ifndef KCSCHED_REPORT_H_
#define KCSCHED_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kcsched/edd.h"
#include "kcsched/instance.h"
#include "kcsched/local_ratio.h"
#include "kcsched/primal_dual.h"
#include "kcsched/rational.h"
#include "kcsched/rounding.h"

namespace kcsched {

using Json = nlohmann::ordered_json;

// Hex SHA-256 of the canonical serialization.
std::string InstanceDigest(const Instance& instance);

Json CostToJson(Cost cost);
Json ScheduleToJson(const Schedule& schedule);
Json DueDatesToJson(const DueDateAssignment& sigma);
Json DualToJson(const DualSolution& dual);
Json PartitionToJson(const IntervalPartition& partition, const Instance& instance);

// One JSON object per line.
std::string GrowTraceJsonl(const GrowTrace& trace);
std::string LocalRatioTraceJsonl(const std::vector<LocalRatioFrame>& trace);

struct RunReport {
  std::string instance_digest;
  std::string algorithm;
  Cost primal_cost;
  std::optional<Rational> dual_value;  // pd, rounded
  std::optional<Rational> lower_bound;  // lr, release
  std::optional<Rational> ratio;        // primal over dual or lower bound
  std::optional<Rational> epsilon;
  std::optional<Cost> opt;
  std::optional<double> wall_seconds;
  std::optional<std::string> trace_path;
  DueDateAssignment due_dates;
  Schedule schedule;
};

Json RunReportToJson(const RunReport& report);

}  // namespace kcsched

#endif  // KCSCHED_REPORT_H_
