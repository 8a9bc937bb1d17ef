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

#include "csg/baselines.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>

#include "csg/core.hpp"

namespace csg {

namespace {

using Clock = std::chrono::steady_clock;

// Subset of `rest` selected by the bits of `j`, lowest bit first.
Mask expand_subset(Mask rest, std::uint64_t j) {
  Mask out = 0;
  while (rest) {
    const Mask bit = rest & (0 - rest);
    rest ^= bit;
    if (j & 1) out |= bit;
    j >>= 1;
  }
  return out;
}

// Number of distinct single applications of `kind`. Identity moves (a swap
// between two singletons) are not counted, so every decoded move changes
// the partition.
std::uint64_t move_count(std::span<const Mask> blocks, OperatorKind kind) {
  const int k = static_cast<int>(blocks.size());
  std::uint64_t total = 0;
  switch (kind) {
    case OperatorKind::Split:
      for (const Mask b : blocks) {
        const int s = std::popcount(b);
        if (s >= 2) total += (std::uint64_t{1} << (s - 1)) - 1;
      }
      return total;
    case OperatorKind::Merge:
      return static_cast<std::uint64_t>(k) * (k - 1) / 2;
    case OperatorKind::Shift:
      for (const Mask b : blocks) {
        const int s = std::popcount(b);
        if (s >= 2) total += static_cast<std::uint64_t>(s) * (k - 1);
      }
      return total;
    case OperatorKind::Exchange:
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          const int si = std::popcount(blocks[i]);
          const int sj = std::popcount(blocks[j]);
          if (si == 1 && sj == 1) continue;
          total += static_cast<std::uint64_t>(si) * sj;
        }
      return total;
    case OperatorKind::Extract:
      for (const Mask b : blocks) {
        const int s = std::popcount(b);
        if (s >= 2) total += static_cast<std::uint64_t>(s);
      }
      return total;
  }
  return 0;
}

Mask nth_bit(Mask m, std::uint64_t idx) {
  while (idx--) m &= m - 1;
  return m & (0 - m);
}

// Blocks of the `idx`-th move of `kind`; idx < move_count(blocks, kind).
std::vector<Mask> decode_move(std::span<const Mask> blocks, OperatorKind kind,
                              std::uint64_t idx) {
  std::vector<Mask> child(blocks.begin(), blocks.end());
  const int k = static_cast<int>(blocks.size());
  switch (kind) {
    case OperatorKind::Split:
      for (int bi = 0; bi < k; ++bi) {
        const int s = std::popcount(blocks[bi]);
        if (s < 2) continue;
        const std::uint64_t here = (std::uint64_t{1} << (s - 1)) - 1;
        if (idx >= here) {
          idx -= here;
          continue;
        }
        const Mask low = blocks[bi] & (0 - blocks[bi]);
        const Mask part1 = low | expand_subset(blocks[bi] ^ low, idx);
        child[static_cast<std::size_t>(bi)] = part1;
        child.push_back(blocks[bi] ^ part1);
        return child;
      }
      break;
    case OperatorKind::Merge:
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          if (idx--) continue;
          child[static_cast<std::size_t>(i)] |= child[static_cast<std::size_t>(j)];
          child.erase(child.begin() + j);
          return child;
        }
      break;
    case OperatorKind::Shift:
      for (int bi = 0; bi < k; ++bi) {
        const int s = std::popcount(blocks[bi]);
        if (s < 2) continue;
        const std::uint64_t here = static_cast<std::uint64_t>(s) * (k - 1);
        if (idx >= here) {
          idx -= here;
          continue;
        }
        const Mask bit = nth_bit(blocks[bi], idx / (k - 1));
        auto target = static_cast<int>(idx % (k - 1));
        if (target >= bi) ++target;
        child[static_cast<std::size_t>(bi)] ^= bit;
        child[static_cast<std::size_t>(target)] |= bit;
        return child;
      }
      break;
    case OperatorKind::Exchange:
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          const int si = std::popcount(blocks[i]);
          const int sj = std::popcount(blocks[j]);
          if (si == 1 && sj == 1) continue;
          const auto here = static_cast<std::uint64_t>(si) * sj;
          if (idx >= here) {
            idx -= here;
            continue;
          }
          const Mask abit = nth_bit(blocks[i], idx / sj);
          const Mask bbit = nth_bit(blocks[j], idx % sj);
          child[static_cast<std::size_t>(i)] ^= abit | bbit;
          child[static_cast<std::size_t>(j)] ^= abit | bbit;
          return child;
        }
      break;
    case OperatorKind::Extract:
      for (int bi = 0; bi < k; ++bi) {
        const int s = std::popcount(blocks[bi]);
        if (s < 2) continue;
        if (idx >= static_cast<std::uint64_t>(s)) {
          idx -= static_cast<std::uint64_t>(s);
          continue;
        }
        const Mask bit = nth_bit(blocks[bi], idx);
        child[static_cast<std::size_t>(bi)] ^= bit;
        child.push_back(bit);
        return child;
      }
      break;
  }
  throw Error("move index out of range");
}

void validate(const SaParams& p) {
  if (p.initial_temp && *p.initial_temp <= 0.0) throw Error("initial temperature must be positive");
  if (p.cooling_alpha <= 0.0 || p.cooling_alpha >= 1.0)
    throw Error("cooling factor must lie in (0,1)");
  if (p.steps < 1) throw Error("steps must be >= 1");
  if (p.operators.empty()) throw Error("operator set must be nonempty");
  if (p.time_limit_seconds && *p.time_limit_seconds <= 0.0)
    throw Error("time limit must be positive");
  if (p.trace_every < 1) throw Error("trace interval must be >= 1");
}

double default_temperature(const CharacteristicFunction& cf) {
  double lo = cf[1], hi = cf[1];
  for (Mask m = 2; m <= cf.grand(); ++m) {
    lo = std::min(lo, cf[m]);
    hi = std::max(hi, cf[m]);
  }
  const double range = hi - lo;
  return range > 0.0 ? range : 1.0;
}

}  // namespace

bool metropolis_accept(double delta, double temp, Rng& rng) {
  if (delta > 0.0) return true;
  const double prob = (delta == 0.0) ? 1.0 : std::exp(delta / temp);
  return rng.uniform01() < prob;
}

CoalitionStructure random_structure(int n, Rng& rng) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  labels[0] = 1;
  int maxlab = 1;
  for (int i = 1; i < n; ++i) {
    const int d = 1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(maxlab) + 1));
    labels[static_cast<std::size_t>(i)] = d;
    maxlab = std::max(maxlab, d);
  }
  return {std::move(labels), maxlab};
}

SaResult simulated_annealing(const CharacteristicFunction& cf, const SaParams& params) {
  validate(params);
  const int n = cf.agents();
  Rng rng(params.seed);
  const auto t0 = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (params.time_limit_seconds)
    deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(*params.time_limit_seconds));

  CoalitionStructure cur = random_structure(n, rng);
  double cur_value = cs_value(cur, cf);

  SaResult out;
  out.best = cur;
  out.value = cur_value;
  out.trace.push_back({0, 0.0, out.value, out.best});

  double temp = params.initial_temp ? *params.initial_temp : default_temperature(cf);
  out.initial_temp = temp;
  std::vector<std::uint64_t> counts(params.operators.size());
  std::uint64_t step = 0;
  std::int64_t last_recorded = 0;

  auto record = [&] {
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    out.trace.push_back({static_cast<std::int64_t>(step), elapsed, out.value, out.best});
    last_recorded = static_cast<std::int64_t>(step);
  };

  for (step = 1; step <= params.steps; ++step) {
    if (deadline && Clock::now() >= *deadline) {
      --step;
      break;
    }
    const auto blocks = cur.block_masks();
    std::uint64_t total = 0;
    std::size_t nonempty = 0;
    for (std::size_t i = 0; i < params.operators.size(); ++i) {
      counts[i] = move_count(blocks, params.operators[i]);
      total += counts[i];
      if (counts[i] > 0) ++nonempty;
    }
    if (total > 0) {
      std::size_t kind_at = 0;
      std::uint64_t move_idx = 0;
      if (params.neighbor_mode == NeighborMode::KindFirstUniform) {
        auto pick = rng.uniform_index(nonempty);
        for (;; ++kind_at) {
          if (counts[kind_at] == 0) continue;
          if (pick == 0) break;
          --pick;
        }
        move_idx = rng.uniform_index(counts[kind_at]);
      } else {
        std::uint64_t r = rng.uniform_index(total);
        while (r >= counts[kind_at]) {
          r -= counts[kind_at];
          ++kind_at;
        }
        move_idx = r;
      }
      const auto child = decode_move(blocks, params.operators[kind_at], move_idx);
      CoalitionStructure proposal = canonical_from_blocks(child, n);
      const double v = cs_value(proposal, cf);
      if (metropolis_accept(v - cur_value, temp, rng)) {
        cur = std::move(proposal);
        cur_value = v;
      }
    }
    bool improved = false;
    if (cur_value > out.value) {
      out.best = cur;
      out.value = cur_value;
      improved = true;
    }
    temp *= params.cooling_alpha;
    if (improved || step % params.trace_every == 0) record();
  }
  if (step > params.steps) step = params.steps;
  if (last_recorded != static_cast<std::int64_t>(step)) record();
  return out;
}

std::string sa_metadata(const SaParams& params, double resolved_temp) {
  std::string ops;
  for (OperatorKind k : params.operators) {
    if (!ops.empty()) ops += "+";
    ops += operator_name(k);
  }
  std::string meta = std::string("rng=") + Rng::family();
  meta += ";t0=" + std::to_string(resolved_temp);
  meta += ";cooling=" + std::to_string(params.cooling_alpha);
  meta += ";neighbor=" +
          std::string(params.neighbor_mode == NeighborMode::KindFirstUniform ? "kind-first"
                                                                             : "flat");
  meta += ";operators=" + ops;
  return meta;
}

}  // namespace csg
