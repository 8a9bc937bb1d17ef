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

#include "csg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <unordered_map>

#include "csg/instances.hpp"

namespace csg {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::string opt_cell(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

std::string instance_stem(const std::string& path) { return fs::path(path).stem().string(); }

}  // namespace

std::string csv_header() {
  return "instance_id,algorithm,n,distribution,seed,wall_time_seconds,iterations,"
         "best_value,optimum_value,relative_quality,relative_error,bound_k";
}

std::string csv_row(const RunRecord& r) {
  std::string row = r.instance_id;
  row += ',';
  row += r.algorithm;
  row += ',';
  if (r.n) row += std::to_string(*r.n);
  row += ',';
  row += r.distribution;
  row += ',';
  if (r.seed) row += std::to_string(*r.seed);
  row += ',';
  row += opt_cell(r.wall_time_seconds);
  row += ',';
  if (r.iterations) row += std::to_string(*r.iterations);
  row += ',';
  row += opt_cell(r.best_value);
  row += ',';
  row += opt_cell(r.optimum_value);
  row += ',';
  row += opt_cell(r.relative_quality);
  row += ',';
  row += opt_cell(r.relative_error);
  row += ',';
  row += opt_cell(r.bound_k);
  return row;
}

std::optional<double> oracle_optimum(const CharacteristicFunction& cf, const SolveSpec& spec) {
  if (cf.agents() > spec.dp_guard) return std::nullopt;
  return dp_solve(cf, spec.exec, spec.dp_guard).value;
}

SolveOutcome run_solver(const CharacteristicFunction& cf, const SolveSpec& spec,
                        std::optional<double> optimum) {
  SolveOutcome out;
  RunRecord& rec = out.record;
  rec.algorithm = spec.algorithm;
  rec.n = cf.agents();
  rec.seed = spec.seed;

  const auto t0 = Clock::now();
  if (spec.algorithm == "grasp") {
    GraspParams p = spec.grasp;
    p.seed = spec.seed;
    p.time_limit_seconds = spec.time_limit_seconds;
    auto res = grasp_csf(cf, p);
    rec.best_value = res.value;
    rec.iterations = static_cast<std::int64_t>(res.trace.size());
    rec.metadata = grasp_metadata(p);
    out.best = std::move(res.best);
    out.trace = std::move(res.trace);
  } else if (spec.algorithm == "dp") {
    auto res = dp_solve(cf, spec.exec, spec.dp_guard);
    rec.best_value = res.value;
    rec.metadata = spec.exec == Exec::Parallel ? "exec=parallel" : "exec=serial";
    out.best = std::move(res.best);
  } else if (spec.algorithm == "brute") {
    auto [best, value] = brute_force_optimum(cf, spec.exec, spec.brute_guard);
    rec.best_value = value;
    rec.metadata = spec.exec == Exec::Parallel ? "exec=parallel" : "exec=serial";
    out.best = std::move(best);
  } else if (spec.algorithm == "sandholm") {
    auto res = sandholm_anytime(cf, spec.time_limit_seconds, spec.sandholm_max_stages);
    rec.best_value = res.result.value;
    rec.bound_k = res.result.bound_k;
    rec.iterations = static_cast<std::int64_t>(res.result.nodes_searched);
    rec.metadata = sandholm_bound_model();
    out.best = std::move(res.result.best);
    out.trace = std::move(res.trace);
  } else if (spec.algorithm == "sa") {
    SaParams p = spec.sa;
    p.seed = spec.seed;
    p.time_limit_seconds = spec.time_limit_seconds;
    auto res = simulated_annealing(cf, p);
    rec.best_value = res.value;
    rec.iterations = res.trace.empty() ? 0 : res.trace.back().iteration;
    rec.metadata = sa_metadata(p, res.initial_temp);
    out.best = std::move(res.best);
    out.trace = std::move(res.trace);
  } else {
    throw Error("unknown algorithm '" + spec.algorithm + "'");
  }
  rec.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  if (optimum) {
    rec.optimum_value = optimum;
    if (*optimum > 0.0 && rec.best_value) {
      rec.relative_quality = *rec.best_value / *optimum;
      rec.relative_error = 1.0 - *rec.relative_quality;
    }
  }
  return out;
}

std::vector<std::string> cmd_gen(const GenOptions& opt) {
  if (opt.count < 0) throw Error("count must be >= 0");
  if (opt.distribution != "uniform" && opt.distribution != "normal")
    throw Error("distribution must be 'uniform' or 'normal'");
  if (!opt.out_dir.empty()) fs::create_directories(opt.out_dir);
  std::vector<std::string> paths;
  for (int i = 0; i < opt.count; ++i) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
    GeneratedInstance gi = opt.distribution == "uniform"
                               ? gen_uniform(opt.n, seed, opt.cap)
                               : gen_normal(opt.n, seed, opt.mu, opt.sigma, opt.cap);
    const std::string name =
        opt.distribution + "_n" + std::to_string(opt.n) + "_s" + std::to_string(seed) + ".csg";
    const std::string path = (fs::path(opt.out_dir) / name).string();
    write_instance(gi.cf, path);
    write_meta(gi.meta, path + ".meta");
    paths.push_back(path);
  }
  return paths;
}

std::string labels_string(const CoalitionStructure& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.labels.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(cs.labels[i]);
  }
  return s;
}

void write_trace(const AnytimeTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << "iteration,elapsed_seconds,best_value,structure\n";
  for (const auto& r : trace)
    out << r.iteration << ',' << format_double(r.elapsed_seconds) << ','
        << format_double(r.best_value) << ',' << labels_string(r.best) << '\n';
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

RunRecord cmd_solve(const SolveOptions& opt) {
  CharacteristicFunction cf = read_instance(opt.instance_path);
  const std::optional<double> optimum = oracle_optimum(cf, opt.spec);
  SolveOutcome outcome = run_solver(cf, opt.spec, optimum);
  outcome.record.instance_id = instance_stem(opt.instance_path);
  GenMeta meta;
  if (read_meta(opt.instance_path + ".meta", meta)) outcome.record.distribution = meta.distribution;

  const std::string table = csv_header() + "\n" + csv_row(outcome.record) + "\n";
  if (opt.csv_out.empty() || opt.csv_out == "-") {
    std::cout << table;
  } else {
    std::ofstream f(opt.csv_out);
    if (!f) throw Error("cannot open '" + opt.csv_out + "' for writing");
    f << table;
  }
  if (!opt.trace_out.empty()) write_trace(outcome.trace, opt.trace_out);
  if (!outcome.record.metadata.empty())
    std::cerr << "# metadata[" << outcome.record.instance_id << "]: " << outcome.record.metadata
              << "\n";
  return outcome.record;
}

namespace {

std::uint64_t parse_u64(const std::string& v, long line) {
  try {
    std::size_t pos = 0;
    const std::uint64_t x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ParseError("expected unsigned integer, got '" + v + "'", line);
  }
}

double parse_f64(const std::string& v, long line) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ParseError("expected number, got '" + v + "'", line);
  }
}

void apply_run_key(BenchRun& run, const std::string& key, const std::string& val, long line) {
  if (key == "instance") {
    run.instance_path = val;
  } else if (key == "algorithm") {
    run.spec.algorithm = val;
  } else if (key == "seed") {
    run.spec.seed = parse_u64(val, line);
  } else if (key == "group") {
    run.group = val;
  } else if (key == "agg") {
    if (val == "per_iteration")
      run.per_iteration = true;
    else if (val == "summary")
      run.per_iteration = false;
    else
      throw ParseError("agg must be 'summary' or 'per_iteration'", line);
  } else if (key == "time_limit_ms") {
    const double ms = parse_f64(val, line);
    if (ms <= 0.0) throw ParseError("time limit must be positive", line);
    run.spec.time_limit_seconds = ms / 1000.0;
  } else if (key == "maxiter") {
    run.spec.grasp.maxiter = static_cast<int>(parse_u64(val, line));
  } else if (key == "alpha") {
    if (val == "random")
      run.spec.grasp.fixed_alpha.reset();
    else
      run.spec.grasp.fixed_alpha = parse_f64(val, line);
  } else if (key == "pivot") {
    if (val == "best")
      run.spec.grasp.pivot = PivotRule::BestImprovement;
    else if (val == "first")
      run.spec.grasp.pivot = PivotRule::FirstImprovement;
    else
      throw ParseError("pivot must be 'best' or 'first'", line);
  } else if (key == "exec") {
    if (val == "serial")
      run.spec.exec = Exec::Serial;
    else if (val == "parallel")
      run.spec.exec = Exec::Parallel;
    else
      throw ParseError("exec must be 'serial' or 'parallel'", line);
  } else if (key == "sa_temp") {
    run.spec.sa.initial_temp = parse_f64(val, line);
  } else if (key == "sa_cooling") {
    run.spec.sa.cooling_alpha = parse_f64(val, line);
  } else if (key == "sa_steps") {
    run.spec.sa.steps = parse_u64(val, line);
  } else if (key == "sa_trace_every") {
    run.spec.sa.trace_every = parse_u64(val, line);
  } else if (key == "sa_neighbor") {
    if (val == "kind")
      run.spec.sa.neighbor_mode = NeighborMode::KindFirstUniform;
    else if (val == "flat")
      run.spec.sa.neighbor_mode = NeighborMode::FlatUniform;
    else
      throw ParseError("sa_neighbor must be 'kind' or 'flat'", line);
  } else if (key == "sa_operators") {
    run.spec.sa.operators.clear();
    std::string token;
    for (char c : val + "+") {
      if (c == '+') {
        if (!token.empty()) run.spec.sa.operators.push_back(operator_from_name(token));
        token.clear();
      } else {
        token += c;
      }
    }
    if (run.spec.sa.operators.empty()) throw ParseError("empty operator list", line);
  } else if (key == "sandholm_max_stages") {
    run.spec.sandholm_max_stages = static_cast<int>(parse_u64(val, line));
  } else if (key == "dp_guard") {
    run.spec.dp_guard = static_cast<int>(parse_u64(val, line));
  } else if (key == "brute_guard") {
    run.spec.brute_guard = static_cast<int>(parse_u64(val, line));
  } else {
    throw ParseError("unknown run key '" + key + "'", line);
  }
}

}  // namespace

BenchConfig parse_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  BenchConfig cfg;
  std::string line;
  long lineno = 0;
  BenchRun* current = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", lineno);
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "run") {
      if (val.empty()) throw ParseError("run label must be nonempty", lineno);
      for (const auto& r : cfg.runs)
        if (r.id == val) throw ParseError("duplicate run label '" + val + "'", lineno);
      cfg.runs.push_back({});
      cfg.runs.back().id = val;
      current = &cfg.runs.back();
    } else if (current != nullptr) {
      apply_run_key(*current, key, val, lineno);
    } else if (key == "out") {
      cfg.out = val;
    } else if (key == "parallel") {
      if (val == "true")
        cfg.parallel = true;
      else if (val == "false")
        cfg.parallel = false;
      else
        throw ParseError("parallel must be 'true' or 'false'", lineno);
    } else if (key == "instance_dir") {
      cfg.instance_dir = val;
    } else {
      throw ParseError("unknown global key '" + key + "'", lineno);
    }
  }
  for (const auto& r : cfg.runs) {
    if (r.instance_path.empty()) throw Error("run '" + r.id + "' missing instance=");
    if (r.spec.algorithm.empty()) throw Error("run '" + r.id + "' missing algorithm=");
  }
  return cfg;
}

namespace {

struct RowResult {
  RunRecord record;
  AnytimeTrace trace;
  std::optional<double> optimum;
  std::string error;
};

struct LoadedInstance {
  std::shared_ptr<CharacteristicFunction> cf;
  std::string distribution;
};

}  // namespace

BenchOutput run_bench(const BenchConfig& config) {
  BenchOutput out;
  const auto nruns = config.runs.size();
  std::vector<RowResult> rows(nruns);

  // Instances and oracle optima resolve once per distinct path, up front,
  // so concurrent rows only share read-only state.
  std::unordered_map<std::string, LoadedInstance> instances;
  std::unordered_map<std::string, std::optional<double>> optima;
  for (std::size_t i = 0; i < nruns; ++i) {
    const auto& run = config.runs[i];
    std::string path = run.instance_path;
    if (!config.instance_dir.empty() && fs::path(path).is_relative())
      path = (fs::path(config.instance_dir) / path).string();
    rows[i].record.instance_id = instance_stem(path);
    rows[i].record.algorithm = run.spec.algorithm;
    rows[i].record.seed = run.spec.seed;
    if (!instances.contains(path)) {
      try {
        LoadedInstance li;
        li.cf = std::make_shared<CharacteristicFunction>(read_instance(path));
        GenMeta meta;
        if (read_meta(path + ".meta", meta)) li.distribution = meta.distribution;
        instances.emplace(path, std::move(li));
      } catch (const Error& e) {
        instances.emplace(path, LoadedInstance{});
        rows[i].error = e.what();
      }
    }
    const auto& li = instances.at(path);
    if (!li.cf) {
      if (rows[i].error.empty()) rows[i].error = "instance failed to load";
      continue;
    }
    rows[i].record.n = li.cf->agents();
    rows[i].record.distribution = li.distribution;
    const std::string okey = path + "#" + std::to_string(run.spec.dp_guard);
    if (!optima.contains(okey)) {
      try {
        optima.emplace(okey, oracle_optimum(*li.cf, run.spec));
      } catch (const Error&) {
        optima.emplace(okey, std::nullopt);
      }
    }
    rows[i].optimum = optima.at(okey);
  }

  auto execute = [&](std::size_t i) {
    const auto& run = config.runs[i];
    if (!rows[i].error.empty()) return;
    std::string path = run.instance_path;
    if (!config.instance_dir.empty() && fs::path(path).is_relative())
      path = (fs::path(config.instance_dir) / path).string();
    const auto& li = instances.at(path);
    try {
      SolveOutcome outcome = run_solver(*li.cf, run.spec, rows[i].optimum);
      outcome.record.instance_id = rows[i].record.instance_id;
      outcome.record.distribution = rows[i].record.distribution;
      rows[i].record = std::move(outcome.record);
      rows[i].trace = std::move(outcome.trace);
    } catch (const Error& e) {
      rows[i].error = e.what();
    }
  };

  if (config.parallel) {
    const auto total = static_cast<std::int64_t>(nruns);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i) execute(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < nruns; ++i) execute(i);
  }

  std::string csv = csv_header() + "\n";
  for (std::size_t i = 0; i < nruns; ++i) {
    csv += csv_row(rows[i].record) + "\n";
    if (!rows[i].error.empty())
      out.errors.push_back("run=" + config.runs[i].id + ": " + rows[i].error);
  }

  // Aggregate rows, one group per first appearance. Groups marked
  // per_iteration aggregate trace prefixes (mean best-so-far quality and
  // mean elapsed per iteration index); others emit a single summary row.
  std::vector<std::string> group_order;
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < nruns; ++i) {
    const std::string g = config.runs[i].group.empty() ? config.runs[i].spec.algorithm
                                                       : config.runs[i].group;
    if (!groups.contains(g)) group_order.push_back(g);
    groups[g].push_back(i);
  }
  for (const auto& g : group_order) {
    const auto& idx = groups.at(g);
    const bool per_iteration =
        std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return config.runs[i].per_iteration; });
    std::string algo = config.runs[idx.front()].spec.algorithm;
    for (std::size_t i : idx)
      if (config.runs[i].spec.algorithm != algo) algo = "mixed";

    if (per_iteration) {
      std::size_t minlen = std::string::npos;
      for (std::size_t i : idx) {
        if (!rows[i].error.empty() || !rows[i].optimum || *rows[i].optimum <= 0.0) {
          minlen = 0;
          break;
        }
        minlen = std::min(minlen, rows[i].trace.size());
      }
      for (std::size_t it = 1; minlen != std::string::npos && it <= minlen; ++it) {
        double q = 0.0, wall = 0.0;
        for (std::size_t i : idx) {
          const auto& rec = rows[i].trace[it - 1];
          q += rec.best_value / *rows[i].optimum;
          wall += rec.elapsed_seconds;
        }
        q /= static_cast<double>(idx.size());
        wall /= static_cast<double>(idx.size());
        RunRecord agg;
        agg.instance_id = "aggregate:" + g + ":iter=" + std::to_string(it);
        agg.algorithm = algo;
        agg.wall_time_seconds = wall;
        agg.iterations = static_cast<std::int64_t>(it);
        agg.relative_quality = q;
        agg.relative_error = 1.0 - q;
        csv += csv_row(agg) + "\n";
      }
    } else {
      double wall = 0.0, q = 0.0;
      std::size_t nwall = 0, nq = 0;
      for (std::size_t i : idx) {
        if (rows[i].record.wall_time_seconds) {
          wall += *rows[i].record.wall_time_seconds;
          ++nwall;
        }
        if (rows[i].record.relative_quality) {
          q += *rows[i].record.relative_quality;
          ++nq;
        }
      }
      RunRecord agg;
      agg.instance_id = "aggregate:" + g;
      agg.algorithm = algo;
      if (nwall) agg.wall_time_seconds = wall / static_cast<double>(nwall);
      if (nq) {
        agg.relative_quality = q / static_cast<double>(nq);
        agg.relative_error = 1.0 - *agg.relative_quality;
      }
      csv += csv_row(agg) + "\n";
    }
  }
  out.csv = std::move(csv);
  return out;
}

BenchOutput cmd_bench(const BenchOptions& opt) {
  BenchConfig cfg = parse_bench_config(opt.config_path);
  if (!opt.out_override.empty()) cfg.out = opt.out_override;
  BenchOutput out = run_bench(cfg);
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << out.csv;
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw Error("cannot open '" + cfg.out + "' for writing");
    f << out.csv;
  }
  for (const auto& e : out.errors) std::cerr << "error[" << e << "]\n";
  return out;
}

}  // namespace csg
