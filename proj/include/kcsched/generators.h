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

#ifndef KCSCHED_GENERATORS_H_
#define KCSCHED_GENERATORS_H_

#include <cstdint>

#include "kcsched/instance.h"
#include "kcsched/rational.h"

namespace kcsched {

// Four jobs of length p >= 4 on which the primal-dual algorithm ends with
// primal cost 4p against dual value p + 2:
//   f_1 = f_2 = 0 on [1, p-1], p on [p, 3p-1], INFEASIBLE afterwards;
//   f_3 = f_4 = 0 on [1, 3p-2], p afterwards.
// Throws DomainError if p < 4.
Instance GenTight(Time p);

// The tight family shifted right by T0 = 4p behind a dummy job (id 5) of
// length T0 that is free until T0 and INFEASIBLE afterwards. Each original
// job pays delta * p up front: f'_j(t) = delta*p + f_j(t - T0), with
// f_j(.) = 0 for arguments <= 0. Requires delta > 0 and delta * p integral;
// throws DomainError otherwise.
Instance GenTightShifted(Time p, const Rational& delta);

struct RandomSpec {
  uint64_t seed = 1;
  int n = 6;
  Time p_max = 6;
  int max_breakpoints = 4;
  int64_t v_max = 20;
  // Number of distinct release dates; 1 means all jobs are released at 0.
  int kappa = 1;
  // When > 0, release dates are drawn so that the horizon stays <= this.
  Time max_horizon = 0;
};

// Deterministic in the spec. Costs are finite, nondecreasing and zero up to
// each job's release date.
Instance GenRandom(const RandomSpec& spec);

}  // namespace kcsched

#endif  // KCSCHED_GENERATORS_H_
