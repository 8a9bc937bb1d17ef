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

#include "csg/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <string>

#include "csg/core.hpp"

namespace csg {

namespace {

using Clock = std::chrono::steady_clock;

// Best first-block choice for mask m. Candidates are the submasks of m
// containing m's highest bit (the lowest-index agent), so each partition
// of m is considered exactly once, first block first; t2[m] then equals
// v(S1) + (v(S2) + (... + 0)), the same fold cs_value computes.
inline void dp_fill_mask(Mask m, const double* v, double* t2, Mask* t1) {
  const Mask top = std::bit_floor(m);
  const Mask rest = m ^ top;
  double best = v[m];  // S = m keeps the coalition whole (v[m] + t2[0], t2[0] = 0)
  Mask arg = m;
  if (rest) {
    for (Mask r = (rest - 1) & rest;; r = (r - 1) & rest) {
      const Mask s = top | r;
      const double cand = v[s] + t2[m ^ s];
      if (cand > best) {
        best = cand;
        arg = s;
      }
      if (r == 0) break;
    }
  }
  t2[m] = best;
  t1[m] = arg;
}

}  // namespace

DpResult dp_solve(const CharacteristicFunction& cf, Exec exec, int guard) {
  const int n = cf.agents();
  if (guard < 1 || guard > kMaxAgents) throw Error("dp guard outside 1..26");
  if (n > guard)
    throw Error("dp limited to n <= " + std::to_string(guard) + ", got n=" + std::to_string(n));

  const Mask grand = cf.grand();
  DpTables tables;
  tables.t2.assign(cf.table_size(), 0.0);
  tables.t1.assign(cf.table_size(), 0);
  const double* v = cf.values().data();
  double* t2 = tables.t2.data();
  Mask* t1 = tables.t1.data();

  if (exec == Exec::Parallel) {
    // Masks of equal popcount are independent: every proper submask has
    // strictly fewer bits, so level-by-level fills see ready inputs.
    for (int pc = 1; pc <= n; ++pc) {
      const auto end = static_cast<std::int64_t>(grand);
#pragma omp parallel for schedule(dynamic, 4096)
      for (std::int64_t mi = 1; mi <= end; ++mi) {
        const Mask m = static_cast<Mask>(mi);
        if (std::popcount(m) == pc) dp_fill_mask(m, v, t2, t1);
      }
    }
  } else {
    // Increasing mask order: every proper submask of m is smaller than m.
    for (Mask m = 1; m <= grand; ++m) dp_fill_mask(m, v, t2, t1);
  }

  std::vector<Mask> blocks;
  for (Mask m = grand; m;) {
    const Mask s = t1[m];
    blocks.push_back(s);
    m ^= s;
  }
  DpResult out;
  out.best = canonical_from_blocks(blocks, n);
  out.value = t2[grand];
  out.tables = std::move(tables);
  return out;
}

namespace {

struct LevelScan {
  const CharacteristicFunction& cf;
  int n;
  std::vector<int> labels;
  std::vector<Mask> blocks;
  // Incumbent and accounting shared across stages.
  double best = -1.0;
  std::vector<int> best_labels;
  std::uint64_t nodes = 0;
  Clock::time_point t0 = Clock::now();
  std::optional<Clock::time_point> deadline;
  bool out_of_time = false;

  explicit LevelScan(const CharacteristicFunction& table)
      : cf(table), n(table.agents()), labels(static_cast<std::size_t>(table.agents()), 0) {}

  void consider_current() {
    ++nodes;
    const double value = structure_value(blocks, cf);
    if (value > best) {
      best = value;
      best_labels = labels;
    }
  }

  bool expired() {
    if (!deadline) return false;
    if (Clock::now() >= *deadline) out_of_time = true;
    return out_of_time;
  }

  // All structures with exactly `level` blocks, restricted-growth order.
  // When the remaining positions are just enough to open the missing
  // blocks, the next label is forced to be new; labels never exceed
  // `level`. Every visited leaf therefore has exactly `level` blocks.
  bool scan_level(int level, int pos, int maxlab) {
    if (pos == n) {
      consider_current();
      return !expired();
    }
    const int need_new = level - maxlab;
    const int remaining = n - pos;
    if (need_new > remaining) return true;  // cannot open enough blocks
    const Mask bit = mask_bit(pos + 1, n);
    const int first = (need_new == remaining) ? maxlab + 1 : 1;
    const int open = std::min(maxlab + 1, level);
    for (int lab = first; lab <= open; ++lab) {
      labels[static_cast<std::size_t>(pos)] = lab;
      const bool fresh = lab > maxlab;
      if (fresh)
        blocks.push_back(bit);
      else
        blocks[static_cast<std::size_t>(lab) - 1] |= bit;
      const bool go_on = scan_level(level, pos + 1, std::max(maxlab, lab));
      if (fresh)
        blocks.pop_back();
      else
        blocks[static_cast<std::size_t>(lab) - 1] ^= bit;
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

SandholmResult sandholm_anytime(const CharacteristicFunction& cf,
                                std::optional<double> time_limit_seconds,
                                std::optional<int> max_stages) {
  if (time_limit_seconds && *time_limit_seconds <= 0.0)
    throw Error("time limit must be positive");
  const int n = cf.agents();
  const Mask grand = cf.grand();

  LevelScan scan(cf);
  if (time_limit_seconds)
    scan.deadline = scan.t0 + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(*time_limit_seconds));

  SandholmResult out;
  double bound = std::numeric_limits<double>::infinity();
  int stages_done = 0;

  auto record_stage = [&] {
    ++stages_done;
    const double elapsed = std::chrono::duration<double>(Clock::now() - scan.t0).count();
    out.trace.push_back({stages_done, elapsed, scan.best, canonicalize(scan.best_labels)});
  };
  auto stage_budget_left = [&] { return !max_stages || stages_done < *max_stages; };

  // Stage 1: grand coalition plus every 2-block structure. The block not
  // holding agent a_1 ranges over masks 1 .. 2^(n-1)-1, so each unordered
  // pair appears once and the stage visits exactly 2^(n-1) structures.
  scan.labels.assign(static_cast<std::size_t>(n), 1);
  scan.blocks.assign(1, grand);
  scan.consider_current();
  if (n >= 2) {
    const Mask half = Mask{1} << (n - 1);
    for (Mask t = 1; t < half && !scan.expired(); ++t) {
      scan.blocks.assign(2, 0);
      scan.blocks[0] = grand ^ t;
      scan.blocks[1] = t;
      for (int id = 1; id <= n; ++id)
        scan.labels[static_cast<std::size_t>(id) - 1] = (t & mask_bit(id, n)) ? 2 : 1;
      scan.consider_current();
    }
  }
  if (!scan.out_of_time) {
    bound = static_cast<double>(n);
    record_stage();
  }

  // Stage 2 onwards: breadth-first from the top of the graph (level n down
  // to level 3), while time and the stage budget allow.
  bool complete = !scan.out_of_time;
  if (!scan.out_of_time) {
    for (int level = n; level >= 3; --level) {
      if (!stage_budget_left()) {
        complete = false;
        break;
      }
      scan.labels.assign(static_cast<std::size_t>(n), 0);
      scan.blocks.clear();
      if (!scan.scan_level(level, 0, 0)) {
        complete = false;
        break;
      }
      record_stage();
    }
  }
  if (complete) bound = 1.0;

  // Final snapshot, whether or not the last stage completed.
  const double elapsed = std::chrono::duration<double>(Clock::now() - scan.t0).count();
  if (scan.best_labels.empty()) {
    // Deadline expired inside stage 1; the grand coalition was still seen.
    scan.best_labels.assign(static_cast<std::size_t>(n), 1);
  }
  CoalitionStructure best = canonicalize(scan.best_labels);
  if (out.trace.empty() || out.trace.back().best_value != scan.best ||
      out.trace.back().iteration != stages_done)
    out.trace.push_back({stages_done, elapsed, scan.best, best});

  out.result.best = std::move(best);
  out.result.value = scan.best;
  out.result.bound_k = bound;
  out.result.nodes_searched = scan.nodes;
  return out;
}

const char* sandholm_bound_model() {
  return "bound=inf-until-bottom-two-levels,n-until-complete,1-at-complete";
}

}  // namespace csg
