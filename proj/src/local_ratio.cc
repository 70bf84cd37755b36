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

#include "kcsched/local_ratio.h"

#include <algorithm>
#include <string>
#include <utility>

#include "kcsched/errors.h"

namespace kcsched {

CostVector::CostVector(const Instance& instance) {
  for (const Job& job : instance.jobs()) g_.emplace_back(job.cost, instance.horizon());
}

void CostVector::Subtract(Time t_star, const Rational& alpha,
                          std::span<const Time> model_size) {
  for (JobId i = 0; i < num_jobs(); ++i) {
    if (model_size[i] > 0) g_[i].Subtract(t_star, alpha * MakeRational(model_size[i]));
  }
}

Decomposition Decompose(const CostVector& g, const DueDateAssignment& sigma,
                        const Instance& instance) {
  if (CoversAllDemands(sigma.due, instance)) {
    throw ContractViolation("decomposition requested for a feasible assignment");
  }
  const Time horizon = instance.horizon();
  auto residual = [&](Time t) {
    Time covered = 0;
    for (JobId j = 0; j < instance.num_jobs(); ++j) {
      if (sigma[j] >= t) covered += instance.job(j).p;
    }
    return std::max<Time>(horizon - t + 1 - covered, 0);
  };
  Time t_star = 1;
  Time demand = residual(1);
  for (Time due : sigma.due) {
    const Time t = due + 1;
    if (t < 1 || t > horizon) continue;
    const Time d = residual(t);
    if (d > demand || (d == demand && t > t_star)) {
      t_star = t;
      demand = d;
    }
  }
  Decomposition result{t_star, std::nullopt, demand, 0, {}, 0, 0};
  result.model_size.assign(instance.num_jobs(), 0);
  for (JobId i = 0; i < instance.num_jobs(); ++i) {
    if (sigma[i] < t_star) result.model_size[i] = std::min(instance.job(i).p, demand);
  }
  auto tight = FindTightPair(g.functions(), result.model_size, t_star);
  if (!tight) {
    throw InfeasibleInstance("instance infeasible under cost functions: demand at t=" +
                             std::to_string(t_star) + " cannot be covered");
  }
  result.alpha = std::move(tight->alpha);
  result.job = tight->job;
  result.s = tight->time;
  return result;
}

namespace internal {
namespace {

void Require(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

void CheckResidualCosts(const CostVector& g, const DueDateAssignment& sigma) {
  for (JobId j = 0; j < g.num_jobs(); ++j) {
    if (sigma[j] >= 1) {
      auto at_due = g[j].At(sigma[j]);
      Require(at_due && *at_due == 0,
              "residual cost of job " + std::to_string(j + 1) + " nonzero at its due date");
    }
    auto minimum = g[j].MinimumFrom(1);
    Require(!minimum || minimum->value >= 0,
            "residual cost of job " + std::to_string(j + 1) + " negative");
  }
}

}  // namespace

LocalRatioResult RunLocalRatio(const Instance& instance,
                               const LocalRatioProblem& problem,
                               const LocalRatioOptions& options) {
  const int n = instance.num_jobs();
  const bool check = options.check_invariants;
  const size_t max_depth = static_cast<size_t>(n) * static_cast<size_t>(instance.horizon());

  CostVector g(instance);
  DueDateAssignment sigma = problem.initial;
  LocalRatioResult result;
  result.lower_bound = 0;
  std::vector<std::vector<Time>> model_sizes;
  if (check) CheckResidualCosts(g, sigma);

  while (!problem.feasible(sigma.due)) {
    Decomposition d = problem.decompose(g, sigma);
    if (check) {
      Require(d.s >= d.t_star && d.s > sigma[d.job], "due date did not increase");
      Require(d.model_size[d.job] > 0, "chosen job is not active in the model cost");
    }
    g.Subtract(d.t_star, d.alpha, d.model_size);
    result.lower_bound += d.alpha * MakeRational(d.residual_demand);
    result.trace.push_back({static_cast<int>(result.trace.size()) + 1, d.t_star,
                            d.r_star, d.residual_demand, d.alpha, d.job, d.s,
                            sigma[d.job], false});
    model_sizes.push_back(std::move(d.model_size));
    sigma[d.job] = d.s;
    if (check) CheckResidualCosts(g, sigma);
    Require(result.trace.size() <= max_depth, "recursion deeper than n * T");
  }

  DueDateAssignment rho = sigma;
  for (size_t k = result.trace.size(); k-- > 0;) {
    LocalRatioFrame& frame = result.trace[k];
    sigma[frame.job] = frame.previous_due;  // input of call k
    DueDateAssignment candidate = rho;
    candidate[frame.job] = frame.previous_due;
    if (problem.feasible(candidate.due)) {
      rho = std::move(candidate);
      frame.undo_kept = true;
    }
    if (check) {
      Time charged = 0;
      for (JobId i = 0; i < n; ++i) {
        Require(sigma[i] <= rho[i], "returned due date below the call's input");
        if (model_sizes[k][i] > 0 && rho[i] >= frame.t_star) charged += model_sizes[k][i];
      }
      Require(charged <= problem.charge_factor * frame.residual_demand,
              "charging bound violated at depth " + std::to_string(frame.depth));
    }
  }
  if (check) {
    Require(problem.feasible(rho.due), "returned assignment infeasible");
    const Cost cost = AssignmentCost(rho, instance);
    Require(cost.is_finite() && MakeRational(cost.value()) <=
                                    problem.charge_factor * result.lower_bound,
            "cost exceeds the local-ratio lower bound times the factor");
  }
  result.due_dates = std::move(rho);
  return result;
}

}  // namespace internal

LocalRatioResult SolveLocalRatio(const Instance& instance,
                                 const LocalRatioOptions& options) {
  if (instance.has_release_dates()) {
    throw ContractViolation("local ratio without releases got release dates");
  }
  internal::LocalRatioProblem problem;
  problem.initial = DueDateAssignment(instance.num_jobs(), 0);
  problem.feasible = [&instance](std::span<const Time> sigma) {
    return CoversAllDemands(sigma, instance);
  };
  problem.decompose = [&instance](const CostVector& g, const DueDateAssignment& sigma) {
    return Decompose(g, sigma, instance);
  };
  problem.charge_factor = 4;
  LocalRatioResult result = internal::RunLocalRatio(instance, problem, options);
  result.schedule = EddSchedule(result.due_dates, instance);
  result.cost = result.schedule.total_cost;
  if (options.check_invariants && result.cost > AssignmentCost(result.due_dates, instance)) {
    throw InvariantViolation("EDD schedule costs more than its due dates");
  }
  return result;
}

}  // namespace kcsched
