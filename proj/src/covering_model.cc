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

#include "kcsched/covering_model.h"

#include <algorithm>
#include <utility>

#include "kcsched/errors.h"

namespace kcsched {

CoveringModel CoveringModel::FromInstance(const Instance& instance) {
  CoveringModel model;
  model.horizon_ = instance.horizon();
  model.num_slots_ = instance.horizon();
  for (const Job& job : instance.jobs()) {
    model.p_.push_back(job.p);
    model.cost_.push_back(job.cost);
  }
  return model;
}

CoveringModel CoveringModel::Compressed(const Instance& instance,
                                        std::vector<Time> slot_times,
                                        std::vector<CostFunction> slot_costs) {
  if (slot_times.empty() || slot_times.front() != 1) {
    throw ContractViolation("compressed slots must start at time 1");
  }
  for (size_t k = 1; k < slot_times.size(); ++k) {
    if (slot_times[k] <= slot_times[k - 1] || slot_times[k] > instance.horizon()) {
      throw ContractViolation("slot times must increase within [1, T]");
    }
  }
  if (static_cast<int>(slot_costs.size()) != instance.num_jobs()) {
    throw ContractViolation("one slot cost function per job required");
  }
  CoveringModel model;
  model.horizon_ = instance.horizon();
  model.num_slots_ = static_cast<Time>(slot_times.size());
  model.slot_times_ = std::move(slot_times);
  for (const Job& job : instance.jobs()) model.p_.push_back(job.p);
  model.cost_ = std::move(slot_costs);
  return model;
}

Time CoveringModel::CoveredSize(std::span<const Time> frontier, Time slot) const {
  Time covered = 0;
  for (JobId j = 0; j < num_jobs(); ++j) {
    if (frontier[j] >= slot) covered += p_[j];
  }
  return covered;
}

Time CoveringModel::ResidualAt(std::span<const Time> frontier, Time slot) const {
  return std::max<Time>(DemandAt(slot) - CoveredSize(frontier, slot), 0);
}

CoveringModel::SlotDemand CoveringModel::MaxResidual(
    std::span<const Time> frontier) const {
  SlotDemand best{1, ResidualAt(frontier, 1)};
  for (Time f : frontier) {
    const Time slot = f + 1;
    if (slot < 1 || slot > num_slots_) continue;
    const Time residual = ResidualAt(frontier, slot);
    if (residual > best.residual || (residual == best.residual && slot > best.slot)) {
      best = {slot, residual};
    }
  }
  return best;
}

}  // namespace kcsched
