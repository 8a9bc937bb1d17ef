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

#ifndef CSG_BENCH_HPP
#define CSG_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csg/baselines.hpp"
#include "csg/core.hpp"
#include "csg/exact.hpp"
#include "csg/search.hpp"
#include "csg/types.hpp"

namespace csg {

/// One result row. Unset fields render as empty CSV cells. When an oracle
/// optimum is present, relative_quality = best/optimum and relative_error
/// = 1 - relative_quality.
struct RunRecord {
  std::string instance_id;
  std::string algorithm;
  std::optional<int> n;
  std::string distribution;
  std::optional<std::uint64_t> seed;
  std::optional<double> wall_time_seconds;
  std::optional<std::int64_t> iterations;
  std::optional<double> best_value;
  std::optional<double> optimum_value;
  std::optional<double> relative_quality;
  std::optional<double> relative_error;
  std::optional<double> bound_k;
  std::string metadata;  // informational; not part of the CSV schema
};

/// Fixed column order shared by every emitted table.
std::string csv_header();
std::string csv_row(const RunRecord& r);

/// Everything needed to run one solver on one loaded instance.
struct SolveSpec {
  std::string algorithm;  // grasp | dp | sandholm | sa | brute
  std::uint64_t seed = 0;
  std::optional<double> time_limit_seconds;
  GraspParams grasp;
  SaParams sa;
  std::optional<int> sandholm_max_stages;
  Exec exec = Exec::Serial;
  int dp_guard = kDefaultDpGuard;
  int brute_guard = kDefaultBruteForceGuard;
};

struct SolveOutcome {
  RunRecord record;  // instance_id and distribution left for the caller
  CoalitionStructure best;
  AnytimeTrace trace;
};

/// Runs the requested solver; wall time covers the solver call only.
SolveOutcome run_solver(const CharacteristicFunction& cf, const SolveSpec& spec,
                        std::optional<double> optimum);

/// DP optimum when n fits the guard, otherwise unset.
std::optional<double> oracle_optimum(const CharacteristicFunction& cf, const SolveSpec& spec);

// --- gen command -----------------------------------------------------------

struct GenOptions {
  int n = 0;
  std::string distribution;  // uniform | normal
  int count = 1;
  std::uint64_t seed = 0;
  std::string out_dir;
  double mu = 1.0;
  double sigma = 0.1;
  int cap = kMaxAgents;
};

/// Writes `count` instances (seeds seed, seed+1, ...) plus .meta sidecars;
/// returns the instance paths.
std::vector<std::string> cmd_gen(const GenOptions& opt);

// --- solve command ----------------------------------------------------------

struct SolveOptions {
  std::string instance_path;
  SolveSpec spec;
  std::string csv_out;    // empty or "-" writes to stdout
  std::string trace_out;  // when set, per-iteration trace CSV
};

RunRecord cmd_solve(const SolveOptions& opt);

// --- bench command ----------------------------------------------------------

/// One `run=<id>` block from a bench config.
struct BenchRun {
  std::string id;
  std::string instance_path;
  SolveSpec spec;
  std::string group;          // aggregation label, defaults to the algorithm
  bool per_iteration = false;  // group emits per-iteration aggregate rows
};

/// Line-oriented key=value config: global keys first, then repeated
/// `run=<id>` blocks whose keys apply until the next `run=`.
struct BenchConfig {
  std::string out;        // CSV destination; empty writes to stdout
  bool parallel = false;  // execute rows concurrently (rows stay independent)
  std::string instance_dir;
  std::vector<BenchRun> runs;
};

BenchConfig parse_bench_config(const std::string& path);

struct BenchOutput {
  std::string csv;                  // rows in config order, then aggregates
  std::vector<std::string> errors;  // one entry per failed run
};

/// Executes the run matrix; a failing run yields an empty-metric row and an
/// error entry instead of aborting the matrix.
BenchOutput run_bench(const BenchConfig& config);

struct BenchOptions {
  std::string config_path;
  std::string out_override;
};

BenchOutput cmd_bench(const BenchOptions& opt);

/// Structure rendering used in trace files: labels joined by '.'.
std::string labels_string(const CoalitionStructure& cs);

void write_trace(const AnytimeTrace& trace, const std::string& path);

}  // namespace csg

#endif  // CSG_BENCH_HPP
