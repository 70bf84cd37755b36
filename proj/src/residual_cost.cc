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

#include "kcsched/residual_cost.h"

#include <algorithm>
#include <utility>

#include "kcsched/errors.h"

namespace kcsched {

ResidualCost::ResidualCost(CostFunction base, Time last)
    : base_(std::move(base)), last_(last) {}

std::optional<Rational> ResidualCost::At(Time t) const {
  const Cost base = base_.At(t);
  if (base.is_infeasible()) return std::nullopt;
  Rational value = MakeRational(base.value());
  for (auto it = decrements_.begin(); it != decrements_.end() && it->first <= t;
       ++it) {
    value -= it->second;
  }
  return value;
}

void ResidualCost::Subtract(Time threshold, const Rational& amount) {
  if (amount < 0) throw ContractViolation("negative decrement");
  if (amount == 0 || threshold > last_) return;
  decrements_[threshold] += amount;
}

std::vector<Time> ResidualCost::PieceStarts() const {
  std::vector<Time> starts{1};
  for (const Breakpoint& bp : base_.breakpoints()) {
    if (bp.time <= last_) starts.push_back(bp.time);
  }
  for (const auto& [threshold, amount] : decrements_) starts.push_back(threshold);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  return starts;
}

std::optional<ResidualCost::Minimum> ResidualCost::MinimumFrom(Time from) const {
  from = std::max<Time>(from, 1);
  if (from > last_) return std::nullopt;
  std::vector<Time> starts{from};
  for (const Breakpoint& bp : base_.breakpoints()) {
    if (bp.time > from && bp.time <= last_) starts.push_back(bp.time);
  }
  for (const auto& [threshold, amount] : decrements_) {
    if (threshold > from) starts.push_back(threshold);
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  std::optional<Minimum> best;
  Rational removed = 0;
  auto dec = decrements_.begin();
  for (size_t i = 0; i < starts.size(); ++i) {
    const Time start = starts[i];
    const Cost base = base_.At(start);
    if (base.is_infeasible()) break;  // stays infeasible from here on
    for (; dec != decrements_.end() && dec->first <= start; ++dec) {
      removed += dec->second;
    }
    Rational value = MakeRational(base.value()) - removed;
    const Time end = i + 1 < starts.size() ? starts[i + 1] - 1 : last_;
    if (!best || value <= best->value) best = Minimum{std::move(value), end};
  }
  return best;
}

std::optional<TightPair> FindTightPair(std::span<const ResidualCost> residual,
                                       std::span<const Time> weight, Time from) {
  std::optional<TightPair> best;
  for (JobId j = 0; j < static_cast<JobId>(residual.size()); ++j) {
    if (weight[j] <= 0) continue;
    auto minimum = residual[j].MinimumFrom(from);
    if (!minimum) continue;
    Rational ratio = minimum->value / MakeRational(weight[j]);
    // Jobs are scanned in increasing id, so a strict win on time is needed to
    // replace an equal ratio.
    if (!best || ratio < best->alpha ||
        (ratio == best->alpha && minimum->time > best->time)) {
      best = TightPair{std::move(ratio), j, minimum->time};
    }
  }
  return best;
}

}  // namespace kcsched
