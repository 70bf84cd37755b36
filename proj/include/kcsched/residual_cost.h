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

// Residual cost functions g(t) = f(t) - sum of step decrements.
//
// Raising a dual variable y(t, A) by alpha lowers the remaining slack of every
// dual constraint (j, s) with j not in A and s >= t by alpha * p_j(t, A); the
// local-ratio view subtracts alpha * g_hat_j with g_hat_j a single step at t*.
// Both are a step decrement with one threshold, so residual costs stay
// piecewise constant and are never materialized over the horizon.

#ifndef KCSCHED_RESIDUAL_COST_H_
#define KCSCHED_RESIDUAL_COST_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "kcsched/instance.h"
#include "kcsched/rational.h"

namespace kcsched {

class ResidualCost {
 public:
  ResidualCost() = default;
  // Domain is {1, ..., last}.
  ResidualCost(CostFunction base, Time last);

  // nullopt where the base cost is INFEASIBLE.
  std::optional<Rational> At(Time t) const;
  // g(t) -= amount for every t >= threshold. amount must be >= 0.
  void Subtract(Time threshold, const Rational& amount);

  struct Minimum {
    Rational value;
    Time time;  // largest t attaining the minimum
  };
  // Minimum of the finite values over [from, last]; nullopt if none.
  std::optional<Minimum> MinimumFrom(Time from) const;
  // Left ends of the constant pieces of g over [1, last].
  std::vector<Time> PieceStarts() const;

  const CostFunction& base() const { return base_; }
  Time last() const { return last_; }

 private:
  CostFunction base_;
  Time last_ = 0;
  std::map<Time, Rational> decrements_;  // threshold -> total amount
};

// The pair (j, s) that stops a uniform increase: minimizes g_j(s) / w_j over
// jobs with w_j > 0 and s >= from. Ties go to the largest s, then the
// smallest job id.
struct TightPair {
  Rational alpha;
  JobId job;
  Time time;
};
std::optional<TightPair> FindTightPair(std::span<const ResidualCost> residual,
                                       std::span<const Time> weight, Time from);

}  // namespace kcsched

#endif  // KCSCHED_RESIDUAL_COST_H_
