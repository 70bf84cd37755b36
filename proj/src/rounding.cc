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

#include "kcsched/rounding.h"

#include <mpfr.h>

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "kcsched/errors.h"

namespace kcsched {
namespace {

constexpr int64_t kInfeasibleClass = std::numeric_limits<int64_t>::max();

void RequirePositive(const Rational& eps) {
  if (eps <= 0) throw DomainError("epsilon must be positive, got " + RationalToString(eps));
}

// Encloses log(v) / log1p(eps) at the given precision and returns the floors
// of both ends.
std::pair<mpz_class, mpz_class> FloorBounds(const mpz_class& v, const Rational& eps,
                                            mpfr_prec_t prec) {
  mpfr_t lv_lo, lv_hi, e_lo, e_hi, lo, hi;
  mpfr_inits2(prec, lv_lo, lv_hi, e_lo, e_hi, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(lv_lo, v.get_mpz_t(), MPFR_RNDD);
  mpfr_log(lv_lo, lv_lo, MPFR_RNDD);
  mpfr_set_z(lv_hi, v.get_mpz_t(), MPFR_RNDU);
  mpfr_log(lv_hi, lv_hi, MPFR_RNDU);
  mpfr_set_q(e_lo, eps.get_mpq_t(), MPFR_RNDD);
  mpfr_log1p(e_lo, e_lo, MPFR_RNDD);
  mpfr_set_q(e_hi, eps.get_mpq_t(), MPFR_RNDU);
  mpfr_log1p(e_hi, e_hi, MPFR_RNDU);
  mpfr_div(lo, lv_lo, e_hi, MPFR_RNDD);
  mpfr_div(hi, lv_hi, e_lo, MPFR_RNDU);
  mpz_class a, b;
  mpfr_get_z(a.get_mpz_t(), lo, MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), hi, MPFR_RNDD);
  mpfr_clears(lv_lo, lv_hi, e_lo, e_hi, lo, hi, static_cast<mpfr_ptr>(nullptr));
  return {a, b};
}

}  // namespace

int64_t FloorLog(int64_t v, const Rational& eps) {
  RequirePositive(eps);
  if (v < 1) throw DomainError("FloorLog of " + std::to_string(v));
  if (v == 1) return 0;
  const mpz_class value(static_cast<long>(v));
  if (eps.get_den() == 1) {
    // Integer base: exact repeated multiplication.
    const mpz_class base = eps.get_num() + 1;
    mpz_class power = base;
    int64_t k = 0;
    while (power <= value) {
      power *= base;
      ++k;
    }
    return k;
  }
  // With a non-integer rational base (1+eps)^k is never an integer for
  // k >= 1, so log_{1+eps} v is never an integer and the enclosure tightens.
  for (mpfr_prec_t prec = 64; prec <= (1 << 20); prec *= 2) {
    auto [lo, hi] = FloorBounds(value, eps, prec);
    if (lo == hi) return lo.get_si();
  }
  throw InvariantViolation("cost class undetermined for value " + std::to_string(v));
}

int64_t CostClass(int64_t v, const Rational& eps) {
  RequirePositive(eps);
  return v == 0 ? 0 : FloorLog(v, eps) + 1;
}

int IntervalPartition::IntervalOf(Time t) const {
  if (t < 1 || t > horizon) throw DomainError("time " + std::to_string(t) + " outside [1, T]");
  auto it = std::upper_bound(endpoints.begin(), endpoints.end(), t);
  return static_cast<int>(it - endpoints.begin()) - 1;
}

IntervalPartition BuildPartition(const Instance& instance, const Rational& eps) {
  RequirePositive(eps);
  IntervalPartition partition;
  partition.epsilon = eps;
  partition.horizon = instance.horizon();
  partition.endpoints.push_back(1);
  for (const Job& job : instance.jobs()) {
    int64_t current = 0;
    for (const Breakpoint& bp : job.cost.breakpoints()) {
      const int64_t cls =
          bp.value.is_infeasible() ? kInfeasibleClass : CostClass(bp.value.value(), eps);
      if (cls != current) {
        partition.endpoints.push_back(bp.time);
        current = cls;
      }
    }
  }
  std::sort(partition.endpoints.begin(), partition.endpoints.end());
  partition.endpoints.erase(
      std::unique(partition.endpoints.begin(), partition.endpoints.end()),
      partition.endpoints.end());
  return partition;
}

int64_t PartitionSizeBound(const Instance& instance, const Rational& eps) {
  int64_t bound = 1;
  for (const Job& job : instance.jobs()) {
    bound += 2 + FloorLog(std::max<int64_t>(1, job.cost.MaxFiniteValue()), eps);
    if (job.cost.ReachesInfeasible()) ++bound;
  }
  return bound;
}

std::vector<std::vector<Cost>> ModifiedCosts(const Instance& instance,
                                             const IntervalPartition& partition) {
  std::vector<std::vector<Cost>> table(instance.num_jobs());
  for (JobId j = 0; j < instance.num_jobs(); ++j) {
    for (int i = 0; i < partition.num_intervals(); ++i) {
      table[j].push_back(instance.job(j).cost.At(partition.Right(i)));
    }
  }
  return table;
}

CoveringModel RoundedModel(const Instance& instance,
                           const IntervalPartition& partition) {
  const auto table = ModifiedCosts(instance, partition);
  std::vector<CostFunction> slot_costs;
  for (const auto& row : table) {
    std::vector<Breakpoint> bps;
    Cost previous(0);
    for (size_t i = 0; i < row.size(); ++i) {
      if (row[i] != previous) bps.push_back({static_cast<Time>(i) + 1, row[i]});
      previous = row[i];
    }
    slot_costs.emplace_back(std::move(bps));
  }
  return CoveringModel::Compressed(instance, partition.endpoints, std::move(slot_costs));
}

DueDateAssignment SnapToSlots(const DueDateAssignment& sigma,
                              const IntervalPartition& partition) {
  DueDateAssignment slots(sigma.size(), 0);
  for (JobId j = 0; j < sigma.size(); ++j) slots[j] = partition.IntervalOf(sigma[j]) + 1;
  return slots;
}

DueDateAssignment SlotsToDueDates(const DueDateAssignment& slots,
                                  const IntervalPartition& partition) {
  DueDateAssignment due(slots.size(), 0);
  for (JobId j = 0; j < slots.size(); ++j) {
    if (slots[j] < 1 || slots[j] > partition.num_intervals()) {
      throw ContractViolation("slot " + std::to_string(slots[j]) + " out of range");
    }
    due[j] = partition.Right(static_cast<int>(slots[j]) - 1);
  }
  return due;
}

Cost RoundedObjective(const DueDateAssignment& slots, const Instance& instance,
                      const IntervalPartition& partition) {
  return AssignmentCost(SlotsToDueDates(slots, partition), instance);
}

RoundedOutcome SolveRounded(const Instance& instance, const Rational& eps,
                            const SolveOptions& options) {
  if (instance.has_release_dates()) {
    throw ContractViolation("the rounded algorithm does not handle release dates");
  }
  RoundedOutcome result;
  result.partition = BuildPartition(instance, eps);
  const CoveringModel model = RoundedModel(instance, result.partition);
  GrowResult grow =
      GrowOnModel(model, {.check_dual_each_iteration = options.check_dual_each_iteration});
  result.slots = PruneOnModel(grow.state, model, options.prune_window);
  if (options.check_invariants) internal::CheckPrimalDualRun(model, grow, result.slots);

  DueDateAssignment due = SlotsToDueDates(result.slots, result.partition);
  result.rounded_objective = RoundedObjective(result.slots, instance, result.partition);
  SolveOutcome& out = result.outcome;
  out.schedule = EddSchedule(due, instance);
  out.primal_cost = out.schedule.total_cost;
  if (options.check_invariants) {
    const auto table = ModifiedCosts(instance, result.partition);
    const Rational factor = 1 + eps;
    for (JobId j = 0; j < instance.num_jobs(); ++j) {
      for (int i = 0; i < result.partition.num_intervals(); ++i) {
        const Cost f = instance.job(j).cost.At(result.partition.Left(i));
        const Cost g = table[j][i];
        const bool ok = f.is_infeasible()
                            ? g.is_infeasible()
                            : f <= g && (g.is_finite() && MakeRational(g.value()) <=
                                                              factor * MakeRational(f.value()));
        if (!ok) {
          throw InvariantViolation("modified cost out of range for job " +
                                   std::to_string(j + 1) + " at t=" +
                                   std::to_string(result.partition.Left(i)));
        }
      }
    }
    if (result.partition.num_intervals() > PartitionSizeBound(instance, eps)) {
      throw InvariantViolation("partition larger than its bound");
    }
    if (!FeasibleAssignment(due, instance)) {
      throw InvariantViolation("mapped-back due dates infeasible");
    }
    if (AssignmentCost(due, instance) != result.rounded_objective ||
        out.primal_cost > result.rounded_objective) {
      throw InvariantViolation("mapped-back cost differs from the rounded objective");
    }
  }
  out.due_dates = std::move(due);
  out.dual_value = grow.dual.Value();
  if (out.dual_value > 0) out.ratio = MakeRational(out.primal_cost.value()) / out.dual_value;
  out.trace = std::move(grow.trace);
  out.dual = std::move(grow.dual);
  return result;
}

}  // namespace kcsched
