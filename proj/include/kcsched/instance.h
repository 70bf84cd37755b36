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

// Problem data for 1||sum f_j (and its release-date variant 1|r_j,pmtn|sum f_j).
//
// Times are 1-based integers. A job completing at time t pays f_j(t); cost
// functions are nondecreasing step functions given by sparse breakpoints, so
// instances with a large horizon T never materialize dense arrays.
//
// Demand at time t is the processing that must still run at time t or later:
//   D(t)   = T - t + 1
//   D(t,A) = max(D(t) - p(A), 0)           residual demand once A is committed
//   p_j(t,A) = min(p_j, D(t,A))             truncated size of j not in A

#ifndef KCSCHED_INSTANCE_H_
#define KCSCHED_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kcsched {

using Time = int64_t;
// 0-based job index. Files, traces and reports print it 1-based.
using JobId = int;

// Nonnegative integer cost or the INFEASIBLE sentinel, which compares greater
// than every finite value and absorbs addition.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr explicit Cost(int64_t value) : value_(value) {}
  static constexpr Cost Infeasible() {
    Cost c;
    c.infeasible_ = true;
    return c;
  }

  constexpr bool is_infeasible() const { return infeasible_; }
  constexpr bool is_finite() const { return !infeasible_; }
  // Throws ContractViolation when infeasible.
  int64_t value() const;

  friend constexpr bool operator==(Cost a, Cost b) = default;
  friend constexpr std::strong_ordering operator<=>(Cost a, Cost b) {
    if (a.infeasible_ || b.infeasible_) return a.infeasible_ <=> b.infeasible_;
    return a.value_ <=> b.value_;
  }
  friend Cost operator+(Cost a, Cost b);
  Cost& operator+=(Cost other) { return *this = *this + other; }

  // "INF" or the decimal value.
  std::string ToString() const;

 private:
  int64_t value_ = 0;
  bool infeasible_ = false;
};

struct Breakpoint {
  Time time;
  Cost value;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// f(t) = value of the last breakpoint with time <= t, and 0 before the first
// breakpoint (so f(0) = 0 always).
class CostFunction {
 public:
  CostFunction() = default;
  // Sorts by time, then validates: times >= 1 and distinct, values
  // nondecreasing. Throws DomainError naming the offending property.
  explicit CostFunction(std::vector<Breakpoint> breakpoints);
  CostFunction(std::initializer_list<Breakpoint> breakpoints)
      : CostFunction(std::vector<Breakpoint>(breakpoints)) {}

  Cost At(Time t) const;
  std::span<const Breakpoint> breakpoints() const { return breakpoints_; }
  bool empty() const { return breakpoints_.empty(); }
  // Time of the last breakpoint, 0 if none.
  Time LastBreakpointTime() const;
  // Largest finite value attained (0 if none).
  int64_t MaxFiniteValue() const;
  bool ReachesInfeasible() const;

  friend bool operator==(const CostFunction&, const CostFunction&) = default;

 private:
  std::vector<Breakpoint> breakpoints_;
};

struct Job {
  Time p = 1;
  CostFunction cost;
  Time release = 0;
  friend bool operator==(const Job&, const Job&) = default;
};

// Immutable validated instance. Horizon T = max_j r_j + sum_j p_j; with no
// release dates this is sum_j p_j.
class Instance {
 public:
  // Throws DomainError on: no jobs, p < 1, release < 0, a breakpoint beyond
  // the horizon, or f_j(r_j) != 0.
  explicit Instance(std::vector<Job> jobs);

  int num_jobs() const { return static_cast<int>(jobs_.size()); }
  const Job& job(JobId j) const { return jobs_[j]; }
  std::span<const Job> jobs() const { return jobs_; }
  Time horizon() const { return horizon_; }
  Time total_processing() const { return total_processing_; }
  // Sorted distinct release values (H); always nonempty.
  std::span<const Time> release_dates() const { return release_dates_; }
  int kappa() const { return static_cast<int>(release_dates_.size()); }
  bool has_release_dates() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.jobs_ == b.jobs_;
  }

 private:
  std::vector<Job> jobs_;
  Time horizon_ = 0;
  Time total_processing_ = 0;
  std::vector<Time> release_dates_;
};

// Subset of jobs with its total processing time cached.
class JobSet {
 public:
  JobSet() = default;
  explicit JobSet(int num_jobs) : members_(num_jobs, false) {}
  static JobSet Of(const Instance& instance, std::initializer_list<JobId> ids);

  bool Contains(JobId j) const { return members_[j]; }
  void Insert(JobId j, Time p_j);
  void Erase(JobId j, Time p_j);
  Time total_size() const { return total_size_; }
  int num_jobs() const { return static_cast<int>(members_.size()); }
  // Member ids in increasing order.
  std::vector<JobId> Ids() const;

  friend bool operator==(const JobSet&, const JobSet&) = default;

 private:
  std::vector<bool> members_;
  Time total_size_ = 0;
};

// D(t). Throws DomainError unless 1 <= t <= T.
Time Demand(Time t, const Instance& instance);
// D(t, A).
Time ResidualDemand(Time t, const JobSet& committed, const Instance& instance);
// p_j(t, A). Throws ContractViolation if j is in A.
Time TruncatedSize(JobId j, Time t, const JobSet& committed,
                   const Instance& instance);
// f_j(t) for 0 <= t <= T. Throws DomainError outside that range.
Cost CostAt(const Instance& instance, JobId j, Time t);

// JSON instance format:
//   {"jobs":[{"p":int,"release":int?,"cost":[[t,v],...]}]}
// with v an integer or "INF". Horizon and kappa are always recomputed.
// Throws ParseError naming the job (1-based) and field.
Instance ParseInstance(std::string_view text);
// Canonical form: breakpoints sorted, "release" omitted when 0, compact
// output followed by a newline.
std::string SerializeInstance(const Instance& instance);

}  // namespace kcsched

#endif  // KCSCHED_INSTANCE_H_
