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

// Acceptance checks: one PASS/FAIL line per criterion.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "kcsched/edd.h"
#include "kcsched/errors.h"
#include "kcsched/generators.h"
#include "kcsched/instance.h"
#include "kcsched/local_ratio.h"
#include "kcsched/oracle.h"
#include "kcsched/primal_dual.h"
#include "kcsched/release.h"
#include "kcsched/report.h"
#include "kcsched/rounding.h"

namespace kcsched {
namespace {

constexpr int kSuiteSize = 500;
constexpr int kReleaseSuiteSize = 200;
constexpr int kSigmaPerInstance = 1000;

RandomSpec SuiteSpec(uint64_t seed) {
  RandomSpec spec;
  spec.seed = seed;
  spec.n = 1 + static_cast<int>(seed % 8);
  spec.p_max = 6;
  spec.max_breakpoints = 4;
  spec.v_max = 20;
  return spec;
}

RandomSpec ReleaseSuiteSpec(uint64_t seed) {
  RandomSpec spec;
  spec.seed = seed;
  spec.n = 2 + static_cast<int>(seed % 3);
  spec.p_max = 3;
  spec.max_breakpoints = 3;
  spec.v_max = 20;
  spec.kappa = 1 + static_cast<int>((seed / 3) % 3);
  spec.max_horizon = 14;
  return spec;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool Report(int id, const std::string& name, const Outcome& o) {
  std::printf("criterion %d [%s]: %s - %s\n", id, name.c_str(), o.pass ? "PASS" : "FAIL",
              o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

Rational R(Cost c) { return MakeRational(c.value()); }

Outcome TightGap() {
  Outcome o;
  std::ostringstream detail;
  for (Time p : {4, 50, 1000}) {
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome out = SolvePrimalDual(GenTight(p), {.check_invariants = true});
    const double secs = Seconds(start);
    if (out.primal_cost != Cost(4 * p)) o.Fail("primal != 4p at p=" + std::to_string(p));
    if (out.dual_value != p + 2) o.Fail("dual != p+2 at p=" + std::to_string(p));
    if (!out.ratio || *out.ratio != MakeRational(4 * p, p + 2)) o.Fail("ratio at p=" + std::to_string(p));
    if (p == 1000 && secs >= 5.0) o.Fail("p=1000 took " + std::to_string(secs) + " s");
    detail << "p=" << p << " primal " << out.primal_cost.ToString() << " dual "
           << RationalToString(out.dual_value) << " ratio " << RationalToString(*out.ratio)
           << " (" << secs << " s); ";
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome GoldenTrace(std::string* literal_note) {
  Outcome o;
  const Time p = 4;
  const GrowResult grow = Grow(GenTight(p), {.check_dual_each_iteration = true});
  const std::vector<Time> t = {1, 1, 1, 3 * p - 1, p, 1, 3 * p};
  const std::vector<Time> d = {4 * p, 3 * p, 2 * p, p + 2, p + 1, p, 1};
  const std::vector<Time> time = {3 * p - 2, 3 * p - 2, p - 1, 4 * p, 3 * p - 1, 3 * p - 1, 4 * p};
  const std::vector<int> paper_job = {3, 4, 2, 4, 2, 1, 3};
  // Jobs 1,2 and 3,4 have identical data.
  auto cls = [](int job1) { return job1 <= 2 ? 0 : 1; };
  if (grow.trace.size() != 7) {
    o.Fail("trace has " + std::to_string(grow.trace.size()) + " iterations");
    return o;
  }
  std::string ours;
  bool literal = true;
  for (int k = 0; k < 7; ++k) {
    const GrowIteration& it = grow.trace[k];
    const std::string row = "k=" + std::to_string(k + 1);
    if (it.t != t[k]) o.Fail(row + " t");
    if (it.residual_demand != d[k]) o.Fail(row + " D");
    if (it.alpha != (k == 3 ? 1 : 0)) o.Fail(row + " y");
    if (it.tight_time != time[k]) o.Fail(row + " time");
    if (cls(it.tight_job + 1) != cls(paper_job[k])) o.Fail(row + " job class");
    if (it.tight_job + 1 != paper_job[k]) literal = false;
    ours += (k ? "," : "") + std::to_string(it.tight_job + 1);
  }
  if (grow.dual.Value() != p + 2) o.Fail("dual value");
  if (o.pass) {
    o.detail = "t^k, D, y(11,{})=1, tightened times exact; job column matches up to "
               "identical-job relabeling";
  }
  *literal_note = literal ? "literal job ids match"
                          : "literal job ids differ: ours (" + ours +
                                ") vs table (3,4,2,4,2,1,3); no fixed id priority yields the "
                                "table's column, deviation recorded in the decisions ledger";
  return o;
}

struct SuiteRun {
  Cost opt;
  SolveOutcome pd;
  LocalRatioResult lr;
};

Outcome ApproximationSuite(std::vector<SuiteRun>* runs) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  Rational worst_pd = 0, worst_lr = 0;
  for (uint64_t seed = 1; seed <= kSuiteSize; ++seed) {
    const Instance inst = GenRandom(SuiteSpec(seed));
    SuiteRun run;
    run.opt = ExactOpt(inst).opt_cost;
    run.pd = SolvePrimalDual(inst);
    run.lr = SolveLocalRatio(inst);
    const std::string s = "seed " + std::to_string(seed);
    const Rational opt = R(run.opt);
    const Rational pd = R(run.pd.primal_cost);
    const Rational lr = R(run.lr.cost);
    if (!(run.pd.dual_value <= opt)) o.Fail(s + ": dual > OPT");
    if (!(opt <= pd)) o.Fail(s + ": OPT > pd");
    if (!(pd <= 4 * run.pd.dual_value)) o.Fail(s + ": pd > 4 dual");
    if (!(pd <= 4 * opt)) o.Fail(s + ": pd > 4 OPT");
    if (!(lr <= 4 * opt)) o.Fail(s + ": lr > 4 OPT");
    if (opt > 0) {
      worst_pd = std::max<Rational>(worst_pd, pd / opt);
      worst_lr = std::max<Rational>(worst_lr, lr / opt);
    }
    runs->push_back(std::move(run));
  }
  const double secs = Seconds(start);
  if (secs >= 60) o.Fail("suite took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << kSuiteSize << " instances in " << secs << " s; max pd/OPT "
      << RationalToString(worst_pd) << " (" << worst_pd.get_d() << "), max lr/OPT "
      << RationalToString(worst_lr) << " (" << worst_lr.get_d() << ")";
    o.detail = d.str();
  }
  return o;
}

Outcome Charging(const std::vector<SuiteRun>& runs) {
  Outcome o;
  int64_t entries = 0, calls = 0;
  for (size_t i = 0; i < runs.size(); ++i) {
    const Instance inst = GenRandom(SuiteSpec(i + 1));
    const std::string s = "seed " + std::to_string(i + 1);
    const SuiteRun& run = runs[i];
    const CoveringModel model = CoveringModel::FromInstance(inst);
    // Primal-dual: every entry with y > 0 charges < 4 D.
    if (auto v = CheckChargingBound(run.pd.dual, run.pd.due_dates, model)) {
      o.Fail(s + ": pd entry " + std::to_string(v->entry) + " charged " +
             std::to_string(v->charged));
    }
    entries += static_cast<int64_t>(run.pd.dual.entries.size());
    // Local ratio: replay sigma forwards and rho backwards from the trace.
    const auto& trace = run.lr.trace;
    const int n = inst.num_jobs();
    std::vector<std::vector<Time>> sigma_in(trace.size());
    std::vector<Time> sigma(n, 0);
    for (size_t k = 0; k < trace.size(); ++k) {
      sigma_in[k] = sigma;
      sigma[trace[k].job] = trace[k].s;
    }
    std::vector<Time> rho = sigma;
    for (size_t k = trace.size(); k-- > 0;) {
      if (trace[k].undo_kept) rho[trace[k].job] = trace[k].previous_due;
      Time charged = 0;
      for (JobId j = 0; j < n; ++j) {
        if (sigma_in[k][j] < trace[k].t_star && trace[k].t_star <= rho[j]) {
          charged += std::min(inst.job(j).p, trace[k].residual_demand);
        }
      }
      if (charged > 4 * trace[k].residual_demand) o.Fail(s + ": lr call charged too much");
      ++calls;
    }
    if (rho != run.lr.due_dates.due) o.Fail(s + ": lr replay mismatch");
  }
  if (o.pass) {
    o.detail = std::to_string(entries) + " primal-dual entries and " + std::to_string(calls) +
               " local-ratio calls within bound";
  }
  return o;
}

Outcome Feasibility() {
  Outcome o;
  int64_t iterations = 0;
  for (uint64_t seed = 1; seed <= kSuiteSize; ++seed) {
    const Instance inst = GenRandom(SuiteSpec(seed));
    const std::string s = "seed " + std::to_string(seed);
    GrowResult grow;
    try {
      grow = Grow(inst, {.check_dual_each_iteration = true});
    } catch (const InvariantViolation& e) {
      o.Fail(s + ": " + e.what());
      continue;
    }
    iterations += static_cast<int64_t>(grow.trace.size());
    const DueDateAssignment sigma = Prune(grow.state, inst);
    if (sigma.size() != inst.num_jobs()) o.Fail(s + ": wrong number of due dates");
    for (JobId j = 0; j < sigma.size(); ++j) {
      bool committed = false;
      for (const CommittedPair& pair : grow.state.pairs) {
        if (pair.job == j && pair.t == sigma[j]) committed = true;
      }
      if (sigma[j] < 1 || sigma[j] > inst.horizon() || !committed) {
        o.Fail(s + ": job " + std::to_string(j + 1) + " lacks a single committed due date");
      }
    }
    if (!CheckPrimalFeasible(sigma, inst, &grow.dual, {.random_samples = 64, .seed = seed})
             .feasible) {
      o.Fail(s + ": pruned assignment infeasible");
    }
    if (!CheckDualFeasible(grow.dual, inst).feasible) o.Fail(s + ": final dual infeasible");
  }
  if (o.pass) {
    o.detail = "dual feasible after each of " + std::to_string(iterations) +
               " iterations; all pruned assignments feasible with one due date per job";
  }
  return o;
}

Outcome Rounding(const std::vector<SuiteRun>& runs) {
  Outcome o;
  Rational worst_01 = 0, worst_1 = 0;
  int64_t max_tau = 0;
  for (const char* e : {"1/10", "1"}) {
    const Rational eps = ParseRational(e);
    for (uint64_t seed = 1; seed <= kSuiteSize; ++seed) {
      const Instance inst = GenRandom(SuiteSpec(seed));
      const std::string s = std::string("eps ") + e + " seed " + std::to_string(seed);
      const RoundedOutcome r = SolveRounded(inst, eps);
      const Rational opt = R(runs[seed - 1].opt);
      const Rational cost = R(r.outcome.primal_cost);
      if (cost > 4 * (1 + eps) * opt) o.Fail(s + ": cost > 4(1+eps) OPT");
      if (opt > 0) {
        Rational& worst = eps == 1 ? worst_1 : worst_01;
        worst = std::max<Rational>(worst, cost / opt);
      }
      const auto table = ModifiedCosts(inst, r.partition);
      for (JobId j = 0; j < inst.num_jobs(); ++j) {
        for (int i = 0; i < r.partition.num_intervals(); ++i) {
          const Cost f = inst.job(j).cost.At(r.partition.Left(i));
          const Cost g = table[j][i];
          if (!(f <= g) || R(g) > (1 + eps) * R(f)) o.Fail(s + ": f' out of range");
        }
      }
      const int64_t tau = r.partition.num_intervals();
      max_tau = std::max(max_tau, tau);
      if (tau > PartitionSizeBound(inst, eps)) o.Fail(s + ": partition too large");
    }
  }
  if (o.pass) {
    std::ostringstream d;
    d << "max cost/OPT " << worst_01.get_d() << " (eps=0.1, limit 4.4), " << worst_1.get_d()
      << " (eps=1, limit 8); largest partition " << max_tau;
    o.detail = d.str();
  }
  return o;
}

Outcome ReleaseDates() {
  Outcome o;
  int64_t mismatches = 0, checked = 0, feasible_seen = 0;
  Rational worst = 0;
  for (uint64_t seed = 1; seed <= kReleaseSuiteSize; ++seed) {
    const Instance inst = GenRandom(ReleaseSuiteSpec(seed));
    const std::string s = "seed " + std::to_string(seed);
    if (inst.num_jobs() > 4 || inst.horizon() > 14 || inst.kappa() > 3) {
      o.Fail(s + ": instance outside the suite limits");
    }
    const LocalRatioResult r = SolveRelease(inst, {.check_invariants = true});
    const Cost opt = ExactOptRelease(inst).opt_cost;
    if (R(r.cost) > 4 * inst.kappa() * R(opt)) o.Fail(s + ": cost > 4 kappa OPT");
    if (R(opt) > 0) worst = std::max<Rational>(worst, R(r.cost) / (inst.kappa() * R(opt)));
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < kSigmaPerInstance; ++trial) {
      std::vector<Time> sigma;
      for (const Job& job : inst.jobs()) {
        // Mostly at or after the release date, sometimes anywhere.
        const Time lo = trial % 4 == 0 ? 1 : std::max<Time>(1, job.release);
        sigma.push_back(std::uniform_int_distribution<Time>(lo, inst.horizon())(rng));
      }
      const bool by_demand = CoversAllDemands(sigma, inst);
      const bool by_edd = PreemptiveEdd(DueDateAssignment(sigma), inst).feasible;
      ++checked;
      if (by_demand) ++feasible_seen;
      if (by_demand != by_edd) ++mismatches;
    }
  }
  if (mismatches > 0) o.Fail(std::to_string(mismatches) + " equivalence mismatches");
  if (o.pass) {
    std::ostringstream d;
    d << kReleaseSuiteSize << " instances within 4 kappa OPT (max cost/(kappa OPT) "
      << worst.get_d() << "); " << checked << " sigma vectors (" << feasible_seen
      << " feasible), 0 mismatches";
    o.detail = d.str();
  }
  return o;
}

// Everything written for one instance: reports and traces of every algorithm.
std::string Artifacts(const Instance& inst) {
  std::string out;
  auto add = [&](const std::string& algo, Cost cost, const DueDateAssignment& due,
                 const Schedule& schedule, const std::string& trace) {
    RunReport r;
    r.instance_digest = InstanceDigest(inst);
    r.algorithm = algo;
    r.primal_cost = cost;
    r.due_dates = due;
    r.schedule = schedule;
    out += RunReportToJson(r).dump() + "\n" + trace;
  };
  if (inst.has_release_dates()) {
    const LocalRatioResult r = SolveRelease(inst);
    add("release", r.cost, r.due_dates, r.schedule, LocalRatioTraceJsonl(r.trace));
    return out;
  }
  const SolveOutcome pd = SolvePrimalDual(inst);
  add("pd", pd.primal_cost, pd.due_dates, pd.schedule, GrowTraceJsonl(pd.trace));
  out += DualToJson(pd.dual).dump() + "\n";
  const LocalRatioResult lr = SolveLocalRatio(inst);
  add("lr", lr.cost, lr.due_dates, lr.schedule, LocalRatioTraceJsonl(lr.trace));
  const RoundedOutcome rd = SolveRounded(inst, MakeRational(1, 10));
  add("rounded", rd.outcome.primal_cost, rd.outcome.due_dates, rd.outcome.schedule,
      GrowTraceJsonl(rd.outcome.trace));
  out += PartitionToJson(rd.partition, inst).dump() + "\n";
  return out;
}

Outcome Determinism() {
  Outcome o;
  std::vector<Instance> suite;
  for (uint64_t seed = 1; seed <= kSuiteSize; ++seed) suite.push_back(GenRandom(SuiteSpec(seed)));
  for (uint64_t seed = 1; seed <= kReleaseSuiteSize; ++seed) {
    suite.push_back(GenRandom(ReleaseSuiteSpec(seed)));
  }
  // First run sequential, second run on re-parsed bytes across threads.
  std::vector<std::string> first, second(suite.size());
  for (const Instance& inst : suite) first.push_back(Artifacts(inst));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < suite.size(); i = next++) {
      second[i] = Artifacts(ParseInstance(SerializeInstance(suite[i])));
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  size_t bytes = 0;
  for (size_t i = 0; i < suite.size(); ++i) {
    bytes += first[i].size();
    if (first[i] != second[i]) o.Fail("instance " + std::to_string(i) + " differs");
  }
  if (o.pass) {
    o.detail = std::to_string(suite.size()) + " instances, " + std::to_string(bytes) +
               " bytes of reports and traces identical across two runs";
  }
  return o;
}

int Main() {
  bool all = true;
  std::string literal_note;
  std::vector<SuiteRun> runs;
  auto guarded = [&](int id, const std::string& name, const std::function<Outcome()>& body) {
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    all &= Report(id, name, o);
  };
  guarded(1, "tight gap", TightGap);
  guarded(2, "golden trace", [&] { return GoldenTrace(&literal_note); });
  std::printf("note [golden trace]: %s\n", literal_note.c_str());
  guarded(3, "4-approximation vs oracle", [&] { return ApproximationSuite(&runs); });
  guarded(4, "charging bounds", [&] { return Charging(runs); });
  guarded(5, "dual and primal feasibility", Feasibility);
  guarded(6, "rounding", [&] { return Rounding(runs); });
  guarded(7, "release dates", ReleaseDates);
  guarded(8, "determinism", Determinism);
  std::printf("acceptance: %s\n", all ? "ALL PASS" : "FAILURES");
  return all ? 0 : 1;
}

}  // namespace
}  // namespace kcsched

int main() { return kcsched::Main(); }
