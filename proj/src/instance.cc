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

#include "kcsched/instance.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "json.hpp"
#include "kcsched/errors.h"

namespace kcsched {

int64_t Cost::value() const {
  if (infeasible_) throw ContractViolation("value() of an INFEASIBLE cost");
  return value_;
}

Cost operator+(Cost a, Cost b) {
  if (a.infeasible_ || b.infeasible_) return Cost::Infeasible();
  int64_t sum;
  if (__builtin_add_overflow(a.value_, b.value_, &sum)) {
    throw DomainError("cost overflow");
  }
  return Cost(sum);
}

std::string Cost::ToString() const {
  return infeasible_ ? "INF" : std::to_string(value_);
}

CostFunction::CostFunction(std::vector<Breakpoint> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  std::stable_sort(
      breakpoints_.begin(), breakpoints_.end(),
      [](const Breakpoint& a, const Breakpoint& b) { return a.time < b.time; });
  Cost previous(0);
  for (size_t i = 0; i < breakpoints_.size(); ++i) {
    const Breakpoint& bp = breakpoints_[i];
    if (bp.time < 1) throw DomainError("breakpoint time must be >= 1");
    if (i > 0 && bp.time == breakpoints_[i - 1].time) {
      throw DomainError("duplicate breakpoint time " + std::to_string(bp.time));
    }
    if (bp.value.is_finite() && bp.value.value() < 0) {
      throw DomainError("cost must be nonnegative");
    }
    if (bp.value < previous) throw DomainError("cost not nondecreasing");
    previous = bp.value;
  }
}

Cost CostFunction::At(Time t) const {
  auto it = std::upper_bound(
      breakpoints_.begin(), breakpoints_.end(), t,
      [](Time value, const Breakpoint& bp) { return value < bp.time; });
  if (it == breakpoints_.begin()) return Cost(0);
  return std::prev(it)->value;
}

Time CostFunction::LastBreakpointTime() const {
  return breakpoints_.empty() ? 0 : breakpoints_.back().time;
}

int64_t CostFunction::MaxFiniteValue() const {
  int64_t best = 0;
  for (const Breakpoint& bp : breakpoints_) {
    if (bp.value.is_finite()) best = std::max(best, bp.value.value());
  }
  return best;
}

bool CostFunction::ReachesInfeasible() const {
  return !breakpoints_.empty() && breakpoints_.back().value.is_infeasible();
}

Instance::Instance(std::vector<Job> jobs) : jobs_(std::move(jobs)) {
  if (jobs_.empty()) throw DomainError("instance has no jobs");
  Time max_release = 0;
  for (size_t j = 0; j < jobs_.size(); ++j) {
    const std::string who = "job " + std::to_string(j + 1);
    if (jobs_[j].p < 1) throw DomainError(who + ": p must be >= 1");
    if (jobs_[j].release < 0) throw DomainError(who + ": release must be >= 0");
    total_processing_ += jobs_[j].p;
    max_release = std::max(max_release, jobs_[j].release);
    release_dates_.push_back(jobs_[j].release);
  }
  horizon_ = max_release + total_processing_;
  std::sort(release_dates_.begin(), release_dates_.end());
  release_dates_.erase(std::unique(release_dates_.begin(), release_dates_.end()),
                       release_dates_.end());
  for (size_t j = 0; j < jobs_.size(); ++j) {
    const std::string who = "job " + std::to_string(j + 1);
    if (jobs_[j].cost.LastBreakpointTime() > horizon_) {
      throw DomainError(who + ": cost breakpoint beyond horizon " +
                        std::to_string(horizon_));
    }
    if (jobs_[j].cost.At(jobs_[j].release) != Cost(0)) {
      throw DomainError(who + ": cost must be 0 at the release date");
    }
  }
}

bool Instance::has_release_dates() const {
  return release_dates_.size() > 1 || release_dates_.front() != 0;
}

JobSet JobSet::Of(const Instance& instance, std::initializer_list<JobId> ids) {
  JobSet set(instance.num_jobs());
  for (JobId j : ids) set.Insert(j, instance.job(j).p);
  return set;
}

void JobSet::Insert(JobId j, Time p_j) {
  if (!members_[j]) {
    members_[j] = true;
    total_size_ += p_j;
  }
}

void JobSet::Erase(JobId j, Time p_j) {
  if (members_[j]) {
    members_[j] = false;
    total_size_ -= p_j;
  }
}

std::vector<JobId> JobSet::Ids() const {
  std::vector<JobId> ids;
  for (JobId j = 0; j < num_jobs(); ++j) {
    if (members_[j]) ids.push_back(j);
  }
  return ids;
}

Time Demand(Time t, const Instance& instance) {
  if (t < 1 || t > instance.horizon()) {
    throw DomainError("time " + std::to_string(t) + " outside [1, " +
                      std::to_string(instance.horizon()) + "]");
  }
  return instance.horizon() - t + 1;
}

Time ResidualDemand(Time t, const JobSet& committed, const Instance& instance) {
  return std::max<Time>(Demand(t, instance) - committed.total_size(), 0);
}

Time TruncatedSize(JobId j, Time t, const JobSet& committed,
                   const Instance& instance) {
  if (committed.Contains(j)) {
    throw ContractViolation("truncated size of job " + std::to_string(j + 1) +
                            " which is in the committed set");
  }
  return std::min(instance.job(j).p, ResidualDemand(t, committed, instance));
}

Cost CostAt(const Instance& instance, JobId j, Time t) {
  if (t < 0 || t > instance.horizon()) {
    throw DomainError("time " + std::to_string(t) + " outside [0, " +
                      std::to_string(instance.horizon()) + "]");
  }
  return instance.job(j).cost.At(t);
}

namespace {

using nlohmann::json;

[[noreturn]] void Fail(size_t job, const std::string& field,
                       const std::string& message) {
  throw ParseError("job " + std::to_string(job + 1) + ": field '" + field +
                   "': " + message);
}

int64_t ReadInteger(const json& value, size_t job, const std::string& field) {
  if (!value.is_number_integer()) Fail(job, field, "expected an integer");
  return value.get<int64_t>();
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("jobs") || !doc["jobs"].is_array()) {
    throw ParseError("expected an object with a \"jobs\" array");
  }
  std::vector<Job> jobs;
  const json& list = doc["jobs"];
  for (size_t j = 0; j < list.size(); ++j) {
    const json& entry = list[j];
    if (!entry.is_object()) Fail(j, "jobs", "expected an object");
    Job job;
    if (!entry.contains("p")) Fail(j, "p", "missing");
    job.p = ReadInteger(entry["p"], j, "p");
    if (job.p <= 0) Fail(j, "p", "must be a positive integer");
    if (entry.contains("release")) {
      job.release = ReadInteger(entry["release"], j, "release");
      if (job.release < 0) Fail(j, "release", "must be nonnegative");
    }
    std::vector<Breakpoint> breakpoints;
    if (entry.contains("cost")) {
      const json& cost = entry["cost"];
      if (!cost.is_array()) Fail(j, "cost", "expected an array of [t, v]");
      for (const json& pair : cost) {
        if (!pair.is_array() || pair.size() != 2) {
          Fail(j, "cost", "expected [t, v] pairs");
        }
        Breakpoint bp{ReadInteger(pair[0], j, "cost"), Cost(0)};
        if (pair[1].is_string() && pair[1].get<std::string>() == "INF") {
          bp.value = Cost::Infeasible();
        } else {
          int64_t v = ReadInteger(pair[1], j, "cost");
          if (v < 0) Fail(j, "cost", "values must be nonnegative");
          bp.value = Cost(v);
        }
        breakpoints.push_back(bp);
      }
    }
    try {
      job.cost = CostFunction(std::move(breakpoints));
    } catch (const DomainError& e) {
      Fail(j, "cost", e.what());
    }
    jobs.push_back(std::move(job));
  }
  try {
    return Instance(std::move(jobs));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string SerializeInstance(const Instance& instance) {
  nlohmann::ordered_json jobs = nlohmann::ordered_json::array();
  for (const Job& job : instance.jobs()) {
    nlohmann::ordered_json entry;
    entry["p"] = job.p;
    if (job.release != 0) entry["release"] = job.release;
    nlohmann::ordered_json cost = nlohmann::ordered_json::array();
    for (const Breakpoint& bp : job.cost.breakpoints()) {
      if (bp.value.is_infeasible()) {
        cost.push_back({bp.time, "INF"});
      } else {
        cost.push_back({bp.time, bp.value.value()});
      }
    }
    entry["cost"] = std::move(cost);
    jobs.push_back(std::move(entry));
  }
  nlohmann::ordered_json doc;
  doc["jobs"] = std::move(jobs);
  return doc.dump() + "\n";
}

}  // namespace kcsched
