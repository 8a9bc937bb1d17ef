// Copyright 2026 The csg authors
//
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

#include "csg/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "csg/bench.hpp"
#include "csg/types.hpp"

namespace csg {

namespace {

struct SolverFlagOptions {
  CLI::Option* time_limit = nullptr;
  CLI::Option* sa_temp = nullptr;
  CLI::Option* max_stages = nullptr;
};

SolverFlagOptions add_solver_flags(CLI::App* cmd, SolveSpec& spec, std::string& alpha,
                                   std::string& pivot, std::string& exec, std::string& operators,
                                   std::string& neighbor, double& time_limit_ms, double& sa_temp,
                                   int& max_stages) {
  SolverFlagOptions handles;
  cmd->add_option("--seed", spec.seed, "RNG seed (64-bit)");
  handles.time_limit =
      cmd->add_option("--time-limit-ms", time_limit_ms, "wall-clock budget in milliseconds");
  cmd->add_option("--maxiter", spec.grasp.maxiter, "construction/search iterations")
      ->capture_default_str();
  cmd->add_option("--alpha", alpha, "greediness in [0,1], or 'random' per iteration")
      ->capture_default_str();
  cmd->add_option("--pivot", pivot, "local search pivot: best | first")->capture_default_str();
  cmd->add_option("--exec", exec, "kernel execution: serial | parallel")->capture_default_str();
  cmd->add_option("--dp-guard", spec.dp_guard, "largest n solved by dp")->capture_default_str();
  cmd->add_option("--brute-guard", spec.brute_guard, "largest n scanned exhaustively")
      ->capture_default_str();
  handles.sa_temp =
      cmd->add_option("--sa-temp", sa_temp, "initial temperature (default: value range)");
  cmd->add_option("--sa-cooling", spec.sa.cooling_alpha, "cooling factor in (0,1)")
      ->capture_default_str();
  cmd->add_option("--sa-steps", spec.sa.steps, "annealing steps")->capture_default_str();
  cmd->add_option("--sa-operators", operators, "operator subset, e.g. split+merge")
      ->capture_default_str();
  cmd->add_option("--sa-neighbor", neighbor, "neighbor draw: kind | flat")->capture_default_str();
  cmd->add_option("--sa-trace-every", spec.sa.trace_every, "trace record cadence")
      ->capture_default_str();
  handles.max_stages = cmd->add_option("--sandholm-max-stages", max_stages,
                                       "stop after this many completed level-scan stages");
  return handles;
}

void finish_solver_flags(SolveSpec& spec, const SolverFlagOptions& handles,
                         const std::string& alpha, const std::string& pivot,
                         const std::string& exec, const std::string& operators,
                         const std::string& neighbor, double time_limit_ms, double sa_temp,
                         int max_stages) {
  if (alpha == "random") {
    spec.grasp.fixed_alpha.reset();
  } else {
    spec.grasp.fixed_alpha = std::stod(alpha);
  }
  if (pivot == "best")
    spec.grasp.pivot = PivotRule::BestImprovement;
  else if (pivot == "first")
    spec.grasp.pivot = PivotRule::FirstImprovement;
  else
    throw Error("pivot must be 'best' or 'first'");
  if (exec == "serial")
    spec.exec = Exec::Serial;
  else if (exec == "parallel")
    spec.exec = Exec::Parallel;
  else
    throw Error("exec must be 'serial' or 'parallel'");
  if (handles.time_limit->count() > 0) {
    if (time_limit_ms <= 0.0) throw Error("time limit must be positive (0 is not a budget)");
    spec.time_limit_seconds = time_limit_ms / 1000.0;
  }
  if (handles.sa_temp->count() > 0) spec.sa.initial_temp = sa_temp;
  if (!operators.empty()) {
    spec.sa.operators.clear();
    std::string token;
    for (char c : operators + "+") {
      if (c == '+') {
        if (!token.empty()) spec.sa.operators.push_back(operator_from_name(token));
        token.clear();
      } else {
        token += c;
      }
    }
  }
  if (neighbor == "kind")
    spec.sa.neighbor_mode = NeighborMode::KindFirstUniform;
  else if (neighbor == "flat")
    spec.sa.neighbor_mode = NeighborMode::FlatUniform;
  else
    throw Error("sa-neighbor must be 'kind' or 'flat'");
  if (handles.max_stages->count() > 0) {
    if (max_stages < 1) throw Error("sandholm-max-stages must be >= 1");
    spec.sandholm_max_stages = max_stages;
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"coalition structure formation toolkit"};
  app.require_subcommand(1);

  // gen
  GenOptions gen;
  auto* cgen = app.add_subcommand("gen", "generate random instances");
  cgen->add_option("--n", gen.n, "agent count")->required();
  cgen->add_option("--dist", gen.distribution, "uniform | normal")->required();
  cgen->add_option("--count", gen.count, "number of instances")->capture_default_str();
  cgen->add_option("--seed", gen.seed, "base seed; instance i uses seed+i")
      ->capture_default_str();
  cgen->add_option("--out-dir", gen.out_dir, "output directory")->required();
  cgen->add_option("--mu", gen.mu, "normal mean")->capture_default_str();
  cgen->add_option("--sigma", gen.sigma, "normal standard deviation")->capture_default_str();
  cgen->add_option("--cap", gen.cap, "largest permitted n")->capture_default_str();

  // solve
  SolveOptions solve;
  std::string alpha = "random", pivot = "best", exec = "serial", operators, neighbor = "kind";
  double time_limit_ms = 0.0, sa_temp = 0.0;
  int max_stages = 0;
  auto* csolve = app.add_subcommand("solve", "run one solver on one instance");
  csolve->add_option("--instance", solve.instance_path, "instance file")->required();
  csolve->add_option("--algorithm", solve.spec.algorithm, "grasp | dp | sandholm | sa | brute")
      ->required();
  csolve->add_option("--out", solve.csv_out, "CSV destination ('-' = stdout)");
  csolve->add_option("--trace", solve.trace_out, "write the anytime trace CSV here");
  const SolverFlagOptions handles = add_solver_flags(csolve, solve.spec, alpha, pivot, exec,
                                                     operators, neighbor, time_limit_ms, sa_temp,
                                                     max_stages);

  // bench
  BenchOptions bench;
  auto* cbench = app.add_subcommand("bench", "run a config-driven experiment matrix");
  cbench->add_option("--config", bench.config_path, "bench config file")->required();
  cbench->add_option("--out", bench.out_override, "override the CSV destination");

  try {
    app.parse(argc, argv);
    if (cgen->parsed()) {
      const auto paths = cmd_gen(gen);
      for (const auto& p : paths) std::cout << p << "\n";
      return 0;
    }
    if (csolve->parsed()) {
      finish_solver_flags(solve.spec, handles, alpha, pivot, exec, operators, neighbor,
                          time_limit_ms, sa_temp, max_stages);
      cmd_solve(solve);
      return 0;
    }
    if (cbench->parsed()) {
      const auto out = cmd_bench(bench);
      return out.errors.empty() ? 0 : 2;
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace csg
