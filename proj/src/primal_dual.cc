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

#include "kcsched/primal_dual.h"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "kcsched/errors.h"

namespace kcsched {

Rational DualSolution::Value() const {
  Rational total = 0;
  for (const DualEntry& e : entries) total += MakeRational(e.residual_demand) * e.y;
  return total;
}

GrowResult GrowOnModel(const CoveringModel& model, const GrowOptions& options) {
  const int n = model.num_jobs();
  const Time slots = model.num_slots();
  GrowResult result;
  GrowState& state = result.state;
  state.frontier.assign(n, 0);
  for (JobId j = 0; j < n; ++j) state.slack.emplace_back(model.cost(j), slots);

  std::vector<Time> weight(n);
  for (int k = 1;; ++k) {
    const auto [t, demand] = model.MaxResidual(state.frontier);
    if (demand == 0) break;

    JobSet committed(n);
    for (JobId j = 0; j < n; ++j) {
      if (state.Covers(j, t)) committed.Insert(j, model.p(j));
      weight[j] = committed.Contains(j) ? 0 : std::min(model.p(j), demand);
    }
    auto tight = FindTightPair(state.slack, weight, t);
    if (!tight) {
      throw InfeasibleInstance(
          "instance infeasible under cost functions: no dual constraint can "
          "become tight for t=" + std::to_string(model.SlotTime(t)));
    }
    for (JobId j = 0; j < n; ++j) {
      if (weight[j] > 0) state.slack[j].Subtract(t, tight->alpha * MakeRational(weight[j]));
    }
    result.trace.push_back({k, t, committed.Ids(), demand, tight->alpha,
                            tight->job, tight->time});
    result.dual.entries.push_back({t, std::move(committed), demand, tight->alpha});
    state.pairs.push_back({tight->job, tight->time, k});
    state.frontier[tight->job] = tight->time;

    if (options.check_dual_each_iteration) {
      DualCheckReport report = CheckDualFeasibleOnModel(result.dual, model);
      if (!report.feasible) {
        throw InvariantViolation("dual infeasible after iteration " +
                                 std::to_string(k));
      }
    }
  }
  return result;
}

GrowResult Grow(const Instance& instance, const GrowOptions& options) {
  if (instance.has_release_dates()) {
    throw ContractViolation("the primal-dual algorithm does not handle release dates");
  }
  return GrowOnModel(CoveringModel::FromInstance(instance), options);
}

DueDateAssignment PruneOnModel(const GrowState& state, const CoveringModel& model,
                               PruneWindow window) {
  const int n = model.num_jobs();
  // Previous committed time of the same job, per pair.
  std::vector<Time> previous(state.pairs.size(), 0);
  {
    std::vector<Time> last(n, 0);
    for (size_t i = 0; i < state.pairs.size(); ++i) {
      previous[i] = last[state.pairs[i].job];
      last[state.pairs[i].job] = state.pairs[i].t;
    }
  }
  std::vector<Time> current = state.frontier;
  for (size_t i = state.pairs.size(); i-- > 0;) {
    const auto [j, t, iteration] = state.pairs[i];
    if (current[j] > t) continue;  // j in A_{t+1}: x_jt is redundant
    if (current[j] != t) {
      throw InvariantViolation("pruning met an already removed pair");
    }
    const Time s0 = previous[i];
    const Time lo = window == PruneWindow::kExclusive ? s0 + 1 : std::max<Time>(s0, 1);
    // Coverage without j is constant between frontiers of other jobs while
    // demand decreases, so only piece left ends need checking.
    auto holds_at = [&](Time s) {
      return model.CoveredSize(current, s) - model.p(j) >= model.DemandAt(s);
    };
    bool removable = holds_at(lo);
    for (JobId other = 0; other < n && removable; ++other) {
      const Time s = current[other] + 1;
      if (other != j && s > lo && s <= t) removable = holds_at(s);
    }
    if (removable) current[j] = s0;
  }
  for (JobId j = 0; j < n; ++j) {
    if (current[j] < 1) {
      throw InvariantViolation("job " + std::to_string(j + 1) +
                               " lost every committed pair during pruning");
    }
  }
  return DueDateAssignment(std::move(current));
}

DueDateAssignment Prune(const GrowState& state, const Instance& instance,
                        PruneWindow window) {
  return PruneOnModel(state, CoveringModel::FromInstance(instance), window);
}

DualCheckReport CheckDualFeasibleOnModel(const DualSolution& dual,
                                         const CoveringModel& model) {
  DualCheckReport report;
  for (JobId j = 0; j < model.num_jobs(); ++j) {
    std::vector<Time> times{1};
    for (const DualEntry& e : dual.entries) times.push_back(e.t);
    for (const Breakpoint& bp : model.cost(j).breakpoints()) {
      if (bp.time <= model.num_slots()) times.push_back(bp.time);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    for (Time s : times) {
      const Cost rhs = model.cost(j).At(s);
      if (rhs.is_infeasible()) break;
      Rational lhs = 0;
      for (const DualEntry& e : dual.entries) {
        if (e.t > s || e.set.Contains(j)) continue;
        const Time residual =
            std::max<Time>(model.DemandAt(e.t) - e.set.total_size(), 0);
        lhs += MakeRational(std::min(model.p(j), residual)) * e.y;
      }
      if (lhs > MakeRational(rhs.value())) {
        report.feasible = false;
        report.violation = DualViolation{j, s, lhs, rhs};
        return report;
      }
    }
  }
  return report;
}

DualCheckReport CheckDualFeasible(const DualSolution& dual,
                                  const Instance& instance) {
  return CheckDualFeasibleOnModel(dual, CoveringModel::FromInstance(instance));
}

namespace {

// Left-hand side of the knapsack-cover inequality for (t, A) under sigma.
Time KnapsackCoverLhs(const DueDateAssignment& sigma, const Instance& instance,
                      Time t, const JobSet& set, Time residual) {
  Time lhs = 0;
  for (JobId j = 0; j < instance.num_jobs(); ++j) {
    if (!set.Contains(j) && sigma[j] >= t) lhs += std::min(instance.job(j).p, residual);
  }
  return lhs;
}

}  // namespace

PrimalCheckReport CheckPrimalFeasible(const DueDateAssignment& sigma,
                                      const Instance& instance,
                                      const DualSolution* support,
                                      const PrimalCheckOptions& options) {
  const int n = instance.num_jobs();
  if (sigma.size() != n) throw ContractViolation("due-date vector size mismatch");
  for (JobId j = 0; j < n; ++j) {
    if (sigma[j] < 1 || sigma[j] > instance.horizon()) {
      throw ContractViolation("job " + std::to_string(j + 1) +
                              " has no due date in [1, T]");
    }
  }
  PrimalCheckReport report;
  auto check = [&](Time t, const JobSet& set) {
    ++report.inequalities_checked;
    const Time residual = ResidualDemand(t, set, instance);
    const Time lhs = KnapsackCoverLhs(sigma, instance, t, set, residual);
    if (lhs < residual) {
      report.feasible = false;
      report.violation = PrimalViolation{t, set.Ids(), lhs, residual};
      return false;
    }
    return true;
  };

  // Base demands: coverage is constant between due dates, demand decreasing.
  std::vector<Time> candidates{1};
  for (Time due : sigma.due) {
    if (due + 1 <= instance.horizon()) candidates.push_back(due + 1);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  const JobSet empty(n);
  for (Time t : candidates) {
    if (!check(t, empty)) return report;
  }
  if (support != nullptr) {
    for (const DualEntry& e : support->entries) {
      if (e.t < 1 || e.t > instance.horizon()) continue;
      if (!check(e.t, e.set)) return report;
    }
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Time> pick_time(1, instance.horizon());
  std::bernoulli_distribution pick_member(0.5);
  for (int sample = 0; sample < options.random_samples; ++sample) {
    const Time t = pick_time(rng);
    JobSet set(n);
    for (JobId j = 0; j < n; ++j) {
      if (pick_member(rng)) set.Insert(j, instance.job(j).p);
    }
    if (!check(t, set)) return report;
  }
  return report;
}

std::optional<ChargingViolation> CheckChargingBound(const DualSolution& dual,
                                                    const DueDateAssignment& sigma,
                                                    const CoveringModel& model) {
  for (size_t i = 0; i < dual.entries.size(); ++i) {
    const DualEntry& e = dual.entries[i];
    const Time residual = std::max<Time>(model.DemandAt(e.t) - e.set.total_size(), 0);
    Time charged = 0;
    for (JobId j = 0; j < model.num_jobs(); ++j) {
      if (!e.set.Contains(j) && sigma[j] >= e.t) {
        charged += std::min(model.p(j), residual);
      }
    }
    const bool ok = e.y > 0 ? charged < 4 * residual : charged <= 4 * residual;
    if (!ok) return ChargingViolation{static_cast<int>(i), charged, residual};
  }
  return std::nullopt;
}

namespace internal {

// Shared by the pseudo-polynomial and the interval-indexed runs. sigma is in
// slots of the model.
void CheckPrimalDualRun(const CoveringModel& model, const GrowResult& grow,
                        const DueDateAssignment& sigma) {
  auto fail = [](const std::string& what) { throw InvariantViolation(what); };
  const int n = model.num_jobs();
  std::vector<Time> last(n, 0);
  for (const CommittedPair& pair : grow.state.pairs) {
    if (pair.t < last[pair.job]) fail("committed times of a job decreased");
    last[pair.job] = pair.t;
  }
  for (const GrowIteration& it : grow.trace) {
    if (it.residual_demand <= 0) fail("iteration recorded without demand");
    if (it.alpha < 0) fail("negative dual increase");
  }
  if (model.MaxResidual(grow.state.frontier).residual != 0) {
    fail("growing phase left residual demand");
  }
  if (!CheckDualFeasibleOnModel(grow.dual, model).feasible) fail("dual infeasible");
  if (model.MaxResidual(sigma.due).residual != 0) fail("pruned solution infeasible");
  for (JobId j = 0; j < n; ++j) {
    auto slack = grow.state.slack[j].At(sigma[j]);
    if (!slack || *slack != 0) {
      fail("kept pair of job " + std::to_string(j + 1) + " is not tight");
    }
  }
  if (auto v = CheckChargingBound(grow.dual, sigma, model)) {
    fail("charging bound violated at dual entry " + std::to_string(v->entry + 1));
  }
  Cost primal(0);
  for (JobId j = 0; j < n; ++j) primal += model.cost(j).At(sigma[j]);
  const Rational dual_value = grow.dual.Value();
  if (primal.is_infeasible() || MakeRational(primal.value()) > 4 * dual_value) {
    fail("primal cost exceeds four times the dual value");
  }
  if (dual_value > 0 && MakeRational(primal.value()) >= 4 * dual_value) {
    fail("primal cost not strictly below four times a positive dual value");
  }
}

}  // namespace internal

SolveOutcome SolvePrimalDual(const Instance& instance, const SolveOptions& options) {
  if (instance.has_release_dates()) {
    throw ContractViolation("the primal-dual algorithm does not handle release dates");
  }
  const CoveringModel model = CoveringModel::FromInstance(instance);
  GrowResult grow =
      GrowOnModel(model, {.check_dual_each_iteration = options.check_dual_each_iteration});
  DueDateAssignment due = PruneOnModel(grow.state, model, options.prune_window);
  if (options.check_invariants) internal::CheckPrimalDualRun(model, grow, due);

  SolveOutcome outcome;
  outcome.schedule = EddSchedule(due, instance);
  outcome.primal_cost = outcome.schedule.total_cost;
  if (options.check_invariants && outcome.primal_cost > AssignmentCost(due, instance)) {
    throw InvariantViolation("EDD schedule costs more than its due dates");
  }
  outcome.due_dates = std::move(due);
  outcome.dual_value = grow.dual.Value();
  if (outcome.dual_value > 0) {
    outcome.ratio = MakeRational(outcome.primal_cost.value()) / outcome.dual_value;
  }
  outcome.trace = std::move(grow.trace);
  outcome.dual = std::move(grow.dual);
  return outcome;
}

}  // namespace kcsched
