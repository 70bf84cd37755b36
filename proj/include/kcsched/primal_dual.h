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

// Primal-dual 4-approximation for 1||sum f_j over the knapsack-cover
// strengthened time-indexed relaxation.
//
// Growing phase: repeatedly pick the slot t with the largest residual demand
// D(t, A_t) (ties to the largest t) and raise y(t, A_t) until some dual
// constraint (j, s) becomes tight; commit x_{js} = 1, i.e. j now covers every
// slot <= s. Among simultaneously tight constraints the largest s wins, then
// the smallest job id.
//
// Pruning phase: revisit committed pairs in reverse order and drop each one
// whose removal keeps every demand covered. Each job keeps exactly one pair,
// its due date; jobs are then sequenced in EDD order.
//
// A_t is never stored: committed times of a job only grow, so j is in A_t iff
// its largest committed time (its frontier) is >= t.

#ifndef KCSCHED_PRIMAL_DUAL_H_
#define KCSCHED_PRIMAL_DUAL_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "kcsched/covering_model.h"
#include "kcsched/edd.h"
#include "kcsched/instance.h"
#include "kcsched/rational.h"
#include "kcsched/residual_cost.h"

namespace kcsched {

// One raised dual variable y(t, A). For an interval-indexed model t is a slot.
struct DualEntry {
  Time t;
  JobSet set;
  Time residual_demand;  // D(t, A)
  Rational y;
};

struct DualSolution {
  std::vector<DualEntry> entries;  // iteration order
  // sum over entries of D(t, A) * y.
  Rational Value() const;
};

struct CommittedPair {
  JobId job;
  Time t;
  int iteration;  // 1-based
};

struct GrowState {
  std::vector<CommittedPair> pairs;  // in the order they were set
  std::vector<Time> frontier;        // largest committed t per job, 0 if none
  std::vector<ResidualCost> slack;   // remaining slack of constraint (j, s)

  // Lemma-2 membership: j in A_t.
  bool Covers(JobId j, Time t) const { return frontier[j] >= t; }
};

struct GrowIteration {
  int k;
  Time t;
  std::vector<JobId> set;  // A_{t^k}, sorted
  Time residual_demand;
  Rational alpha;
  JobId tight_job;
  Time tight_time;
};

using GrowTrace = std::vector<GrowIteration>;

struct GrowResult {
  GrowState state;
  DualSolution dual;
  GrowTrace trace;
};

struct GrowOptions {
  // Run CheckDualFeasible on the partial dual after every iteration and throw
  // InvariantViolation on failure.
  bool check_dual_each_iteration = false;
};

// Throws ContractViolation on release dates and InfeasibleInstance when no
// constraint can become tight.
GrowResult Grow(const Instance& instance, const GrowOptions& options = {});
GrowResult GrowOnModel(const CoveringModel& model, const GrowOptions& options = {});

enum class PruneWindow {
  // Re-check slots s0+1..t, those j joined when (j, t) was committed.
  kExclusive,
  // Also re-check s0 itself.
  kInclusive,
};

// Returns one due date (slot) per job.
DueDateAssignment Prune(const GrowState& state, const Instance& instance,
                        PruneWindow window = PruneWindow::kExclusive);
DueDateAssignment PruneOnModel(const GrowState& state, const CoveringModel& model,
                               PruneWindow window = PruneWindow::kExclusive);

struct SolveOptions {
  // Runtime checks of every structural lemma; throws InvariantViolation.
  bool check_invariants = false;
  bool check_dual_each_iteration = false;
  PruneWindow prune_window = PruneWindow::kExclusive;
};

struct SolveOutcome {
  DueDateAssignment due_dates;
  Schedule schedule;
  Cost primal_cost;
  Rational dual_value;
  std::optional<Rational> ratio;  // primal / dual when dual > 0
  GrowTrace trace;
  DualSolution dual;
};

// grow + prune + EDD. Requires an instance without release dates.
SolveOutcome SolvePrimalDual(const Instance& instance,
                             const SolveOptions& options = {});

struct DualViolation {
  JobId job;
  Time s;
  Rational lhs;
  Cost rhs;
};

struct DualCheckReport {
  bool feasible = true;
  std::optional<DualViolation> violation;  // first by (job, s)
};

// Verifies sum_{t <= s, j not in A} p_j(t, A) y(t, A) <= f_j(s) for every job
// and time, exactly. Constraints with an INFEASIBLE right-hand side hold.
DualCheckReport CheckDualFeasible(const DualSolution& dual,
                                  const Instance& instance);
DualCheckReport CheckDualFeasibleOnModel(const DualSolution& dual,
                                         const CoveringModel& model);

struct PrimalViolation {
  Time t;
  std::vector<JobId> set;  // A of the violated knapsack-cover inequality
  Time covered;            // left-hand side
  Time required;           // D(t, A)
};

struct PrimalCheckReport {
  bool feasible = true;
  std::optional<PrimalViolation> violation;
  int inequalities_checked = 0;
};

struct PrimalCheckOptions {
  int random_samples = 64;
  uint64_t seed = 0x5eed;
};

// Checks sum_{j : sigma_j >= t} p_j >= D(t) for every t, then the
// knapsack-cover inequality sum_{j not in A, sigma_j >= t} p_j(t, A) >= D(t, A)
// for every (t, A) in the dual support (if given) and for random (t, A).
// Throws ContractViolation if some sigma_j is outside [1, T].
PrimalCheckReport CheckPrimalFeasible(const DueDateAssignment& sigma,
                                      const Instance& instance,
                                      const DualSolution* support = nullptr,
                                      const PrimalCheckOptions& options = {});

struct ChargingViolation {
  int entry;  // index into DualSolution::entries
  Time charged;
  Time residual_demand;
};

// For each dual entry (t, A, y): sum over j not in A with sigma_j >= t of
// p_j(t, A) must be < 4 D(t, A) (strict when y > 0, <= otherwise).
std::optional<ChargingViolation> CheckChargingBound(const DualSolution& dual,
                                                    const DueDateAssignment& sigma,
                                                    const CoveringModel& model);

namespace internal {
// Throws InvariantViolation unless the run satisfies: monotone committed
// times, zero final residual demand, dual feasibility, feasibility and
// tightness of the kept pairs, the charging bound, and primal <= 4 * dual.
// sigma is in model slots.
void CheckPrimalDualRun(const CoveringModel& model, const GrowResult& grow,
                        const DueDateAssignment& sigma);
}  // namespace internal

}  // namespace kcsched

#endif  // KCSCHED_PRIMAL_DUAL_H_
