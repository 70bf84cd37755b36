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

// Local-ratio counterpart of the primal-dual algorithm.
//
// A call on (sigma, g) returns sigma itself when it is feasible. Otherwise it
// picks t* with the largest residual demand D(t*, sigma), splits
// g = g~ + alpha * g^ with the model cost
//   g^_i(t) = p_i(t*, sigma)  if sigma_i < t* <= t,   0 otherwise,
// and alpha as large as g~ >= 0 allows, raises the due date of a job j to a
// time s where g~_j(s) = 0 < g^_j(s), recurses, and finally lowers j back to
// sigma_j if the returned assignment stays feasible.
//
// The recursion is run as a forward loop plus a reverse undo pass, since its
// depth can reach n * T.

#ifndef KCSCHED_LOCAL_RATIO_H_
#define KCSCHED_LOCAL_RATIO_H_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kcsched/edd.h"
#include "kcsched/instance.h"
#include "kcsched/rational.h"
#include "kcsched/residual_cost.h"

namespace kcsched {

// Residual cost vector g, starting from the instance costs.
class CostVector {
 public:
  explicit CostVector(const Instance& instance);

  int num_jobs() const { return static_cast<int>(g_.size()); }
  const ResidualCost& operator[](JobId j) const { return g_[j]; }
  std::span<const ResidualCost> functions() const { return g_; }
  // g_i -= alpha * g^_i for the model cost of a decomposition.
  void Subtract(Time t_star, const Rational& alpha, std::span<const Time> model_size);

 private:
  std::vector<ResidualCost> g_;
};

struct Decomposition {
  Time t_star;
  std::optional<Time> r_star;  // set by the release-date variant
  Time residual_demand;
  Rational alpha;
  // p_i(t*, sigma) for jobs where g^_i is active, 0 for the others.
  std::vector<Time> model_size;
  JobId job;
  Time s;
};

// Requires sigma infeasible (ContractViolation otherwise). t* maximizes
// D(t, sigma) with ties to the largest t; (j, s) minimizes g_j(s) / p_j(t*,
// sigma) over active jobs and s >= t*, ties to the largest s, then smallest
// id. Throws InfeasibleInstance if every active pair has INFEASIBLE cost.
Decomposition Decompose(const CostVector& g, const DueDateAssignment& sigma,
                        const Instance& instance);

struct LocalRatioFrame {
  int depth;  // 1-based
  Time t_star;
  std::optional<Time> r_star;
  Time residual_demand;
  Rational alpha;
  JobId job;
  Time s;
  Time previous_due;
  // True when the undo step lowered the job back to previous_due.
  bool undo_kept = false;
};

struct LocalRatioOptions {
  // Assert the monotonicity chain, g_j(sigma_j) = 0, g >= 0, the per-call
  // charging bound, and cost <= factor * lower_bound. Throws
  // InvariantViolation.
  bool check_invariants = false;
};

struct LocalRatioResult {
  DueDateAssignment due_dates;
  Schedule schedule;
  Cost cost;
  // sum over calls of alpha * D: a lower bound on the optimum.
  Rational lower_bound;
  std::vector<LocalRatioFrame> trace;
};

// Requires an instance without release dates.
LocalRatioResult SolveLocalRatio(const Instance& instance,
                                 const LocalRatioOptions& options = {});

namespace internal {

struct LocalRatioProblem {
  DueDateAssignment initial;
  std::function<bool(std::span<const Time>)> feasible;
  std::function<Decomposition(const CostVector&, const DueDateAssignment&)> decompose;
  // The per-call charging bound is charge_factor * D.
  int charge_factor = 4;
};

// Returns due dates, trace and lower bound; the caller builds the schedule.
LocalRatioResult RunLocalRatio(const Instance& instance,
                               const LocalRatioProblem& problem,
                               const LocalRatioOptions& options);

}  // namespace internal
}  // namespace kcsched

#endif  // KCSCHED_LOCAL_RATIO_H_
