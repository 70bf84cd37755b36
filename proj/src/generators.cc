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

#include "kcsched/generators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kcsched/errors.h"

namespace kcsched {

Instance GenTight(Time p) {
  if (p < 4) throw DomainError("tight family needs p >= 4, got " + std::to_string(p));
  const CostFunction early{{p, Cost(p)}, {3 * p, Cost::Infeasible()}};
  const CostFunction late{{3 * p - 1, Cost(p)}};
  return Instance({Job{p, early}, Job{p, early}, Job{p, late}, Job{p, late}});
}

Instance GenTightShifted(Time p, const Rational& delta) {
  if (delta <= 0) throw DomainError("delta must be positive");
  const Instance base = GenTight(p);
  const Time shift = base.horizon();
  std::vector<Job> jobs;
  for (const Job& job : base.jobs()) {
    const Rational fee_q = delta * MakeRational(job.p);
    if (fee_q.get_den() != 1) {
      throw DomainError("delta * p_j must be an integer");
    }
    const int64_t fee = fee_q.get_num().get_si();
    std::vector<Breakpoint> shifted{{1, Cost(fee)}};
    for (const Breakpoint& bp : job.cost.breakpoints()) {
      shifted.push_back({bp.time + shift, Cost(fee) + bp.value});
    }
    jobs.push_back(Job{job.p, CostFunction(std::move(shifted))});
  }
  jobs.push_back(Job{shift, CostFunction{{shift + 1, Cost::Infeasible()}}});
  return Instance(std::move(jobs));
}

Instance GenRandom(const RandomSpec& spec) {
  if (spec.n < 1 || spec.p_max < 1 || spec.max_breakpoints < 0 ||
      spec.v_max < 0 || spec.kappa < 1) {
    throw DomainError("random instance parameters must be positive");
  }
  std::mt19937_64 rng(spec.seed);
  auto uniform = [&rng](int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
  };

  std::vector<Job> jobs(spec.n);
  Time total = 0;
  for (Job& job : jobs) {
    job.p = uniform(1, spec.p_max);
    total += job.p;
  }

  if (spec.kappa > 1) {
    Time release_max = total;
    if (spec.max_horizon > 0) release_max = std::max<Time>(spec.max_horizon - total, 0);
    const int kappa =
        static_cast<int>(std::min<Time>(spec.kappa, std::min<Time>(spec.n, release_max + 1)));
    std::set<Time> chosen{0};
    while (static_cast<int>(chosen.size()) < kappa) chosen.insert(uniform(1, release_max));
    std::vector<Time> releases(chosen.begin(), chosen.end());
    std::vector<int> order(spec.n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    // Every chosen release date gets at least one job.
    for (int i = 0; i < spec.n; ++i) {
      jobs[order[i]].release =
          i < kappa ? releases[i] : releases[uniform(0, kappa - 1)];
    }
  }
  Time max_release = 0;
  for (const Job& job : jobs) max_release = std::max(max_release, job.release);
  const Time horizon = max_release + total;

  for (Job& job : jobs) {
    const Time first = job.release + 1;
    const int available = static_cast<int>(horizon - first + 1);
    const int count =
        std::min<int>(static_cast<int>(uniform(0, spec.max_breakpoints)), available);
    std::set<Time> times;
    while (static_cast<int>(times.size()) < count) times.insert(uniform(first, horizon));
    std::vector<int64_t> values(count);
    for (int64_t& v : values) v = uniform(0, spec.v_max);
    std::sort(values.begin(), values.end());
    std::vector<Breakpoint> breakpoints;
    int i = 0;
    for (Time t : times) breakpoints.push_back({t, Cost(values[i++])});
    job.cost = CostFunction(std::move(breakpoints));
  }
  return Instance(std::move(jobs));
}

}  // namespace kcsched
