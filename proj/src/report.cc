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

#include "kcsched/report.h"

#include <openssl/evp.h>

#include <cstdio>

namespace kcsched {

std::string InstanceDigest(const Instance& instance) {
  const std::string bytes = SerializeInstance(instance);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Json CostToJson(Cost cost) {
  if (cost.is_infeasible()) return "INF";
  return cost.value();
}

Json ScheduleToJson(const Schedule& schedule) {
  Json segments = Json::array();
  for (const Segment& s : schedule.segments) segments.push_back({s.job + 1, s.start, s.end});
  return Json{{"segments", segments},
              {"completions", schedule.completion},
              {"cost", CostToJson(schedule.total_cost)}};
}

Json DueDatesToJson(const DueDateAssignment& sigma) { return sigma.due; }

namespace {

Json Ids(const std::vector<JobId>& ids) {
  Json out = Json::array();
  for (JobId j : ids) out.push_back(j + 1);
  return out;
}

}  // namespace

Json DualToJson(const DualSolution& dual) {
  Json entries = Json::array();
  for (const DualEntry& e : dual.entries) {
    if (e.y == 0) continue;
    entries.push_back({{"t", e.t},
                       {"A", Ids(e.set.Ids())},
                       {"D", e.residual_demand},
                       {"y", RationalToString(e.y)}});
  }
  return Json{{"value", RationalToString(dual.Value())}, {"nonzero", entries}};
}

Json PartitionToJson(const IntervalPartition& partition, const Instance& instance) {
  Json intervals = Json::array();
  for (int i = 0; i < partition.num_intervals(); ++i) {
    intervals.push_back({partition.Left(i), partition.Right(i)});
  }
  Json table = Json::array();
  for (const auto& row : ModifiedCosts(instance, partition)) {
    Json values = Json::array();
    for (Cost c : row) values.push_back(CostToJson(c));
    table.push_back(values);
  }
  return Json{{"epsilon", RationalToString(partition.epsilon)},
              {"intervals", intervals},
              {"modified_costs", table}};
}

std::string GrowTraceJsonl(const GrowTrace& trace) {
  std::string out;
  for (const GrowIteration& it : trace) {
    Json line{{"k", it.k},
              {"t", it.t},
              {"A", Ids(it.set)},
              {"D", it.residual_demand},
              {"alpha", RationalToString(it.alpha)},
              {"tight_job", it.tight_job + 1},
              {"tight_time", it.tight_time}};
    out += line.dump() + "\n";
  }
  return out;
}

std::string LocalRatioTraceJsonl(const std::vector<LocalRatioFrame>& trace) {
  std::string out;
  for (const LocalRatioFrame& f : trace) {
    Json line{{"depth", f.depth}, {"t_star", f.t_star}};
    if (f.r_star) line["r_star"] = *f.r_star;
    line["D"] = f.residual_demand;
    line["alpha"] = RationalToString(f.alpha);
    line["job"] = f.job + 1;
    line["s"] = f.s;
    line["undo_kept"] = f.undo_kept;
    out += line.dump() + "\n";
  }
  return out;
}

Json RunReportToJson(const RunReport& report) {
  Json out{{"instance_digest", report.instance_digest},
           {"algorithm", report.algorithm},
           {"primal_cost", CostToJson(report.primal_cost)}};
  if (report.dual_value) out["dual_value"] = RationalToString(*report.dual_value);
  if (report.lower_bound) out["lower_bound"] = RationalToString(*report.lower_bound);
  if (report.ratio) out["ratio"] = RationalToString(*report.ratio);
  if (report.epsilon) out["epsilon"] = RationalToString(*report.epsilon);
  if (report.opt) out["opt"] = CostToJson(*report.opt);
  if (report.wall_seconds) out["wall_seconds"] = *report.wall_seconds;
  if (report.trace_path) out["trace_path"] = *report.trace_path;
  out["due_dates"] = DueDatesToJson(report.due_dates);
  out["schedule"] = ScheduleToJson(report.schedule);
  return out;
}

}  // namespace kcsched
