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

// kcsched: solve, compare, generate and verify 1||sum f_j instances.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kcsched/edd.h"
#include "kcsched/errors.h"
#include "kcsched/generators.h"
#include "kcsched/instance.h"
#include "kcsched/local_ratio.h"
#include "kcsched/oracle.h"
#include "kcsched/primal_dual.h"
#include "kcsched/rational.h"
#include "kcsched/release.h"
#include "kcsched/report.h"
#include "kcsched/rounding.h"

namespace kcsched {
namespace {

constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitRejected = 5;

struct Flags {
  std::string input = "-";
  std::string algo = "pd";
  std::string epsilon = "1/10";
  bool check = false;
  std::string trace;
  bool with_opt = false;
  uint64_t seed = 1;
  std::string out;
  bool tsv = false;
  bool timing = false;
  // compare --batch
  int batch = 0;
  int threads = 0;
  RandomSpec random;
  // gen
  Time p = 4;
  std::string delta = "1/4";
  // verify
  std::string sigma;
};

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

std::optional<Cost> Optimum(const Instance& instance) {
  if (instance.has_release_dates()) return ExactOptRelease(instance).opt_cost;
  return ExactOpt(instance).opt_cost;
}

struct AlgoRun {
  RunReport report;
  std::string trace;
  std::optional<Json> partition;
};

AlgoRun RunAlgorithm(const Instance& instance, const std::string& algo,
                     const Rational& eps, bool check) {
  AlgoRun run;
  RunReport& r = run.report;
  r.instance_digest = InstanceDigest(instance);
  r.algorithm = algo;
  if (algo == "pd" || algo == "rounded") {
    SolveOptions options{.check_invariants = check, .check_dual_each_iteration = check};
    SolveOutcome outcome;
    if (algo == "pd") {
      outcome = SolvePrimalDual(instance, options);
    } else {
      RoundedOutcome rounded = SolveRounded(instance, eps, options);
      run.partition = PartitionToJson(rounded.partition, instance);
      r.epsilon = eps;
      outcome = std::move(rounded.outcome);
    }
    if (check) {
      if (!CheckPrimalFeasible(outcome.due_dates, instance).feasible) {
        throw InvariantViolation("returned due dates fail the primal check");
      }
      if (algo == "pd" && !CheckDualFeasible(outcome.dual, instance).feasible) {
        throw InvariantViolation("dual solution infeasible");
      }
    }
    r.primal_cost = outcome.primal_cost;
    r.dual_value = outcome.dual_value;
    r.ratio = outcome.ratio;
    r.due_dates = outcome.due_dates;
    r.schedule = outcome.schedule;
    run.trace = GrowTraceJsonl(outcome.trace);
  } else if (algo == "lr" || algo == "release") {
    LocalRatioOptions options{.check_invariants = check};
    LocalRatioResult result =
        algo == "lr" ? SolveLocalRatio(instance, options) : SolveRelease(instance, options);
    if (check && !FeasibleAssignment(result.due_dates, instance)) {
      throw InvariantViolation("returned due dates infeasible");
    }
    r.primal_cost = result.cost;
    r.lower_bound = result.lower_bound;
    if (result.lower_bound > 0) {
      r.ratio = MakeRational(result.cost.value()) / result.lower_bound;
    }
    r.due_dates = result.due_dates;
    r.schedule = result.schedule;
    run.trace = LocalRatioTraceJsonl(result.trace);
  } else {
    throw ParseError("unknown algorithm '" + algo + "'");
  }
  return run;
}

int CmdSolve(const Flags& f) {
  const Instance instance = ParseInstance(ReadAll(f.input));
  const Rational eps = ParseRational(f.epsilon);
  const auto start = std::chrono::steady_clock::now();
  AlgoRun run = RunAlgorithm(instance, f.algo, eps, f.check);
  const auto stop = std::chrono::steady_clock::now();
  if (f.with_opt) run.report.opt = Optimum(instance);
  if (f.timing) run.report.wall_seconds = std::chrono::duration<double>(stop - start).count();
  if (!f.trace.empty()) {
    WriteText(f.trace, run.trace);
    run.report.trace_path = f.trace;
  }
  Json json = RunReportToJson(run.report);
  if (run.partition) json["partition"] = *run.partition;
  WriteText(f.out, json.dump() + "\n");
  return 0;
}

std::string FormatTable(const std::vector<std::vector<std::string>>& rows, bool tsv) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (tsv) {
        out += row[i] + (i + 1 < row.size() ? "\t" : "");
      } else {
        out += row[i];
        if (i + 1 < row.size()) out += std::string(width[i] - row[i].size() + 2, ' ');
      }
    }
    out += "\n";
  }
  return out;
}

std::vector<std::string> AlgorithmsFor(const Instance& instance) {
  if (instance.has_release_dates()) return {"release"};
  return {"pd", "lr", "rounded"};
}

std::string RatioString(Cost cost, const std::optional<Cost>& opt) {
  if (!opt || opt->value() == 0) return "-";
  return RationalToString(MakeRational(cost.value()) / MakeRational(opt->value()));
}

int CmdCompareOne(const Flags& f) {
  const Instance instance = ParseInstance(ReadAll(f.input));
  const Rational eps = ParseRational(f.epsilon);
  std::optional<Cost> opt;
  if (f.with_opt) opt = Optimum(instance);
  std::vector<std::vector<std::string>> rows = {
      {"algo", "cost", "bound", "ratio_vs_bound", "ratio_vs_opt"}};
  Rational max_ratio = 0;
  for (const std::string& algo : AlgorithmsFor(instance)) {
    AlgoRun run = RunAlgorithm(instance, algo, eps, f.check);
    const RunReport& r = run.report;
    const Rational bound = r.dual_value ? *r.dual_value : *r.lower_bound;
    rows.push_back({algo, r.primal_cost.ToString(), RationalToString(bound),
                    r.ratio ? RationalToString(*r.ratio) : "-",
                    RatioString(r.primal_cost, opt)});
    if (opt && opt->value() > 0) {
      max_ratio = std::max<Rational>(max_ratio, MakeRational(r.primal_cost.value()) /
                                          MakeRational(opt->value()));
    }
  }
  if (opt) rows.push_back({"opt", opt->ToString(), "-", "-", "1"});
  std::string out = FormatTable(rows, f.tsv);
  if (opt) out += "max_ratio_vs_opt" + std::string(f.tsv ? "\t" : "  ") +
                  RationalToString(max_ratio) + "\n";
  WriteText(f.out, out);
  return 0;
}

struct BatchRow {
  std::vector<Cost> cost;  // per algorithm
  std::vector<Rational> bound;
  std::optional<Cost> opt;
  std::string error;
};

int CmdCompareBatch(const Flags& f) {
  const Rational eps = ParseRational(f.epsilon);
  const std::vector<std::string> algos =
      f.random.kappa > 1 ? std::vector<std::string>{"release"}
                         : std::vector<std::string>{"pd", "lr", "rounded"};
  std::vector<BatchRow> rows(f.batch);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < f.batch; i = next++) {
      BatchRow& row = rows[i];
      try {
        RandomSpec spec = f.random;
        spec.seed = f.seed + static_cast<uint64_t>(i);
        const Instance instance = GenRandom(spec);
        for (const std::string& algo : algos) {
          AlgoRun run = RunAlgorithm(instance, algo, eps, f.check);
          row.cost.push_back(run.report.primal_cost);
          row.bound.push_back(run.report.dual_value ? *run.report.dual_value
                                                    : *run.report.lower_bound);
        }
        if (f.with_opt) row.opt = Optimum(instance);
      } catch (const Error& e) {
        row.error = e.what();
      }
    }
  };
  const int threads = f.threads > 0
                          ? f.threads
                          : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  // Single reducer, in seed order.
  std::vector<std::vector<std::string>> table = {
      {"algo", "instances", "max_ratio_vs_bound", "max_ratio_vs_opt"}};
  bool violated = false;
  for (const BatchRow& row : rows) {
    if (!row.error.empty()) {
      std::cerr << "error: " << row.error << "\n";
      return kExitInvariant;
    }
  }
  for (size_t a = 0; a < algos.size(); ++a) {
    Rational vs_bound = 0, vs_opt = 0;
    for (const BatchRow& row : rows) {
      const Rational cost = MakeRational(row.cost[a].value());
      if (row.bound[a] > 0) vs_bound = std::max<Rational>(vs_bound, cost / row.bound[a]);
      if (row.opt && row.opt->value() > 0) {
        vs_opt = std::max<Rational>(vs_opt, cost / MakeRational(row.opt->value()));
      }
    }
    Rational limit = 4 * f.random.kappa;
    if (algos[a] == "rounded") limit *= 1 + eps;
    if (f.with_opt && vs_opt > limit) violated = true;
    table.push_back({algos[a], std::to_string(f.batch), RationalToString(vs_bound),
                     f.with_opt ? RationalToString(vs_opt) : "-"});
  }
  WriteText(f.out, FormatTable(table, f.tsv));
  return violated ? kExitInvariant : 0;
}

std::vector<Time> ParseSigma(const std::string& text) {
  std::vector<Time> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("bad due date '" + item + "'");
    }
  }
  return values;
}

int CmdVerify(const Flags& f) {
  const Instance instance = ParseInstance(ReadAll(f.input));
  DueDateAssignment sigma(ParseSigma(f.sigma));
  if (sigma.size() != instance.num_jobs()) {
    throw ParseError("expected " + std::to_string(instance.num_jobs()) + " due dates");
  }
  Json out{{"instance_digest", InstanceDigest(instance)}};
  bool feasible = false;
  if (instance.has_release_dates()) {
    const PreemptiveEddResult edd = PreemptiveEdd(sigma, instance);
    feasible = FeasibleAssignment(sigma, instance) && edd.feasible;
    out["feasible"] = feasible;
    if (edd.first_miss) {
      out["first_miss"] = {{"job", edd.first_miss->job + 1}, {"due", edd.first_miss->due}};
    }
    out["schedule"] = ScheduleToJson(edd.schedule);
  } else {
    const PrimalCheckReport report = CheckPrimalFeasible(sigma, instance);
    feasible = report.feasible;
    out["feasible"] = feasible;
    if (report.violation) {
      out["violation"] = {{"t", report.violation->t},
                          {"covered", report.violation->covered},
                          {"required", report.violation->required}};
    } else {
      out["schedule"] = ScheduleToJson(EddSchedule(sigma, instance));
    }
  }
  out["assignment_cost"] = CostToJson(AssignmentCost(sigma, instance));
  WriteText(f.out, out.dump() + "\n");
  return feasible ? 0 : kExitRejected;
}

int CmdGen(const std::string& kind, const Flags& f) {
  Instance instance = kind == "tight"           ? GenTight(f.p)
                      : kind == "tight-shifted" ? GenTightShifted(f.p, ParseRational(f.delta))
                                                : GenRandom([&] {
                                                    RandomSpec spec = f.random;
                                                    spec.seed = f.seed;
                                                    return spec;
                                                  }());
  WriteText(f.out, SerializeInstance(instance));
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Min-sum single-machine scheduling approximations"};
  app.require_subcommand(1);
  Flags f;
  auto add_shared = [&f](CLI::App* cmd) {
    cmd->add_option("--algo", f.algo, "pd, lr, release or rounded")
        ->check(CLI::IsMember({"pd", "lr", "release", "rounded"}));
    cmd->add_option("--epsilon", f.epsilon, "rounding precision (rational)");
    cmd->add_flag("--check", f.check, "verify invariants and certificates");
    cmd->add_option("--trace", f.trace, "write the trace (JSON lines) here");
    cmd->add_flag("--with-opt", f.with_opt, "also compute the exact optimum");
    cmd->add_option("--seed", f.seed);
    cmd->add_option("--out", f.out, "output path (default stdout)");
    cmd->add_flag("--tsv", f.tsv, "tab-separated tables");
  };
  auto add_random = [&f](CLI::App* cmd) {
    cmd->add_option("--n", f.random.n);
    cmd->add_option("--p-max", f.random.p_max);
    cmd->add_option("--max-breakpoints", f.random.max_breakpoints);
    cmd->add_option("--v-max", f.random.v_max);
    cmd->add_option("--kappa", f.random.kappa);
    cmd->add_option("--max-horizon", f.random.max_horizon);
  };

  CLI::App* solve = app.add_subcommand("solve", "run one algorithm, print a JSON report");
  add_shared(solve);
  solve->add_flag("--timing", f.timing, "include wall time in the report");
  solve->add_option("instance", f.input, "instance file, - for stdin");

  CLI::App* compare = app.add_subcommand("compare", "run all algorithms side by side");
  add_shared(compare);
  add_random(compare);
  compare->add_option("instance", f.input, "instance file, - for stdin");
  compare->add_option("--batch", f.batch, "random instances from --seed on");
  compare->add_option("--threads", f.threads);

  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  std::string kind;
  CLI::App* tight = gen->add_subcommand("tight");
  tight->add_option("--p", f.p);
  tight->add_option("--out", f.out);
  CLI::App* shifted = gen->add_subcommand("tight-shifted");
  shifted->add_option("--p", f.p);
  shifted->add_option("--delta", f.delta);
  shifted->add_option("--out", f.out);
  CLI::App* random = gen->add_subcommand("random");
  random->add_option("--seed", f.seed);
  random->add_option("--out", f.out);
  add_random(random);

  CLI::App* verify = app.add_subcommand("verify", "check a due-date vector");
  verify->add_option("instance", f.input)->required();
  verify->add_option("--sigma", f.sigma, "comma-separated due dates")->required();
  verify->add_option("--out", f.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*solve) return CmdSolve(f);
    if (*compare) return f.batch > 0 ? CmdCompareBatch(f) : CmdCompareOne(f);
    if (*verify) return CmdVerify(f);
    for (CLI::App* sub : {tight, shifted, random}) {
      if (*sub) return CmdGen(sub->get_name(), f);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ContractViolation& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return kExitParse;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitParse;
  } catch (const InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 1;
}

}  // namespace
}  // namespace kcsched

int main(int argc, char** argv) { return kcsched::Main(argc, argv); }
