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

// Covering view shared by the pseudo-polynomial algorithm and its
// interval-indexed variant: slots 1..K, each carrying an original time t_k
// with demand D(t_k) = T - t_k + 1, and per-job step costs indexed by slot.
// For a plain instance slot k is time k.

#ifndef KCSCHED_COVERING_MODEL_H_
#define KCSCHED_COVERING_MODEL_H_

#include <span>
#include <vector>

#include "kcsched/instance.h"

namespace kcsched {

class CoveringModel {
 public:
  // Slot k is time k, costs are the instance's cost functions.
  static CoveringModel FromInstance(const Instance& instance);
  // Slot k is slot_times[k-1] (strictly increasing, starting at 1).
  static CoveringModel Compressed(const Instance& instance,
                                  std::vector<Time> slot_times,
                                  std::vector<CostFunction> slot_costs);

  int num_jobs() const { return static_cast<int>(p_.size()); }
  Time num_slots() const { return num_slots_; }
  Time horizon() const { return horizon_; }
  Time p(JobId j) const { return p_[j]; }
  const CostFunction& cost(JobId j) const { return cost_[j]; }
  Time SlotTime(Time slot) const {
    return slot_times_.empty() ? slot : slot_times_[slot - 1];
  }
  Time DemandAt(Time slot) const { return horizon_ - SlotTime(slot) + 1; }

  // p(A_slot) where A_slot = {j : frontier_j >= slot}.
  Time CoveredSize(std::span<const Time> frontier, Time slot) const;
  // max(D(slot) - p(A_slot), 0).
  Time ResidualAt(std::span<const Time> frontier, Time slot) const;

  struct SlotDemand {
    Time slot;
    Time residual;
  };
  // argmax over slots of the residual demand, ties to the largest slot.
  // Residual demand only jumps up right after a frontier, so the candidates
  // are slot 1 and frontier_j + 1.
  SlotDemand MaxResidual(std::span<const Time> frontier) const;

 private:
  Time horizon_ = 0;
  Time num_slots_ = 0;
  std::vector<Time> slot_times_;  // empty for the identity model
  std::vector<Time> p_;
  std::vector<CostFunction> cost_;
};

}  // namespace kcsched

#endif  // KCSCHED_COVERING_MODEL_H_
