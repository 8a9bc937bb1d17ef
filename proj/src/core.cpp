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

#include "csg/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace csg {

Coalition::Coalition(Mask m, int agents) : mask(m), n(agents) {
  if (agents < 1 || agents > kMaxAgents)
    throw Error("agent count " + std::to_string(agents) + " outside 1.." +
                std::to_string(kMaxAgents));
  if (m == 0) throw Error("coalition must be nonempty");
  if (m > grand_mask(agents))
    throw Error("coalition mask " + std::to_string(m) + " out of range for n=" +
                std::to_string(agents));
}

CharacteristicFunction::CharacteristicFunction(int n, std::vector<double> values, int cap)
    : n_(n), values_(std::move(values)) {
  if (cap < 1 || cap > kMaxAgents) throw Error("cap outside 1..26");
  if (n < 1 || n > cap)
    throw Error("agent count " + std::to_string(n) + " outside 1.." + std::to_string(cap));
  const std::size_t expect = std::size_t{1} << n;
  if (values_.size() != expect)
    throw Error("value table has " + std::to_string(values_.size()) + " entries, expected " +
                std::to_string(expect));
  values_[0] = 0.0;
  for (std::size_t m = 1; m < values_.size(); ++m) {
    if (!std::isfinite(values_[m]) || values_[m] < 0.0)
      throw Error("coalition value at mask " + std::to_string(m) +
                  " is negative or not finite");
  }
}

std::vector<Mask> CoalitionStructure::block_masks() const {
  std::vector<Mask> blocks(static_cast<std::size_t>(k), 0);
  const int agents = n();
  for (int i = 0; i < agents; ++i) blocks[static_cast<std::size_t>(labels[i]) - 1] |= mask_bit(i + 1, agents);
  return blocks;
}

CoalitionStructure CoalitionStructure::grand(int n) {
  return {std::vector<int>(static_cast<std::size_t>(n), 1), 1};
}

CoalitionStructure CoalitionStructure::singletons(int n) {
  std::vector<int> lab(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) lab[static_cast<std::size_t>(i)] = i + 1;
  return {std::move(lab), n};
}

bool is_canonical(std::span<const int> labels) {
  int maxseen = 0;
  for (int d : labels) {
    if (d < 1 || d > maxseen + 1) return false;
    maxseen = std::max(maxseen, d);
  }
  return !labels.empty();
}

Mask coalition_index(std::span<const int> members, int n) {
  if (n < 1 || n > kMaxAgents) throw Error("agent count outside 1..26");
  if (members.empty()) throw Error("coalition must be nonempty");
  Mask m = 0;
  for (int id : members) {
    if (id < 1 || id > n)
      throw Error("agent id " + std::to_string(id) + " outside 1.." + std::to_string(n));
    const Mask bit = mask_bit(id, n);
    if (m & bit) throw Error("duplicate agent id " + std::to_string(id));
    m |= bit;
  }
  return m;
}

Mask coalition_index(std::initializer_list<int> members, int n) {
  return coalition_index(std::span<const int>(members.begin(), members.size()), n);
}

std::vector<int> members_of(Mask mask, int n) {
  std::vector<int> ids;
  for (int id = 1; id <= n; ++id)
    if (mask & mask_bit(id, n)) ids.push_back(id);
  return ids;
}

double structure_value(std::span<const Mask> blocks, const CharacteristicFunction& cf) {
  double acc = 0.0;
  for (std::size_t i = blocks.size(); i-- > 0;) acc = cf[blocks[i]] + acc;
  return acc;
}

double cs_value(const CoalitionStructure& cs, const CharacteristicFunction& cf) {
  if (cs.n() != cf.agents())
    throw Error("structure over " + std::to_string(cs.n()) + " agents, table over " +
                std::to_string(cf.agents()));
  const auto blocks = cs.block_masks();
  return structure_value(blocks, cf);
}

CoalitionStructure canonicalize(std::span<const int> labels) {
  if (labels.empty()) throw Error("empty labeling");
  std::vector<int> remap;  // remap[old-1] = new label, 0 = unseen
  std::vector<int> out(labels.size());
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int d = labels[i];
    if (d < 1) throw Error("block labels must be positive");
    if (static_cast<std::size_t>(d) > remap.size()) remap.resize(static_cast<std::size_t>(d), 0);
    int& slot = remap[static_cast<std::size_t>(d) - 1];
    if (slot == 0) slot = ++next;
    out[i] = slot;
  }
  return {std::move(out), next};
}

CoalitionStructure canonicalize(std::initializer_list<int> labels) {
  return canonicalize(std::span<const int>(labels.begin(), labels.size()));
}

CoalitionStructure canonical_from_blocks(std::span<const Mask> blocks, int n) {
  std::vector<int> raw(static_cast<std::size_t>(n), 0);
  Mask seen = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Mask blk = blocks[b];
    if (blk == 0) throw Error("empty block");
    if (blk & seen) throw Error("blocks overlap");
    seen |= blk;
    for (int id = 1; id <= n; ++id)
      if (blk & mask_bit(id, n)) raw[static_cast<std::size_t>(id) - 1] = static_cast<int>(b) + 1;
  }
  if (seen != grand_mask(n)) throw Error("blocks do not cover all agents");
  return canonicalize(raw);
}

CoalitionStructure checked_structure(std::vector<int> labels) {
  if (!is_canonical(labels)) throw Error("labels are not in canonical first-occurrence form");
  const int k = *std::max_element(labels.begin(), labels.end());
  return {std::move(labels), k};
}

std::uint64_t stirling(int n, int i) {
  if (n < 1) throw Error("n must be positive");
  if (i < 1 || i > n)
    throw Error("block count " + std::to_string(i) + " outside 1.." + std::to_string(n));
  // Row-by-row evaluation of the recurrence; row[j] = Z(row_index, j).
  std::vector<std::uint64_t> row(static_cast<std::size_t>(i) + 1, 0);
  row[1] = 1;  // Z(1,1)
  for (int m = 2; m <= n; ++m) {
    for (int j = std::min(m, i); j >= 1; --j) {
      std::uint64_t t = 0;
      if (__builtin_mul_overflow(static_cast<std::uint64_t>(j), row[static_cast<std::size_t>(j)], &t) ||
          __builtin_add_overflow(t, row[static_cast<std::size_t>(j) - 1], &t))
        throw OverflowError("Z(" + std::to_string(n) + "," + std::to_string(i) +
                            ") exceeds 64 bits");
      row[static_cast<std::size_t>(j)] = t;
    }
  }
  return row[static_cast<std::size_t>(i)];
}

std::uint64_t count_structures(int n) {
  std::uint64_t total = 0;
  for (int i = 1; i <= n; ++i) {
    if (__builtin_add_overflow(total, stirling(n, i), &total))
      throw OverflowError("partition count for n=" + std::to_string(n) + " exceeds 64 bits");
  }
  return total;
}

StructureEnumerator::StructureEnumerator(int n, int cap) : n_(n) {
  if (cap < 1 || cap > kMaxAgents) throw Error("cap outside 1..26");
  if (n < 1 || n > cap)
    throw Error("agent count " + std::to_string(n) + " outside 1.." + std::to_string(cap));
  labels_.assign(static_cast<std::size_t>(n), 1);
  maxes_.assign(static_cast<std::size_t>(n), 1);
}

bool StructureEnumerator::next(CoalitionStructure& out) {
  if (done_) return false;
  if (fresh_) {
    fresh_ = false;
  } else {
    int i = n_ - 1;
    for (; i >= 1; --i) {
      if (labels_[static_cast<std::size_t>(i)] <= maxes_[static_cast<std::size_t>(i) - 1]) break;
    }
    if (i < 1) {
      done_ = true;
      return false;
    }
    ++labels_[static_cast<std::size_t>(i)];
    maxes_[static_cast<std::size_t>(i)] =
        std::max(maxes_[static_cast<std::size_t>(i) - 1], labels_[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n_; ++j) {
      labels_[static_cast<std::size_t>(j)] = 1;
      maxes_[static_cast<std::size_t>(j)] = maxes_[static_cast<std::size_t>(j) - 1];
    }
  }
  out.labels = labels_;
  out.k = maxes_[static_cast<std::size_t>(n_) - 1];
  return true;
}

namespace {

// Depth-first scan over restricted-growth labelings from position `pos`,
// carrying block masks. Children ordered by ascending label, which matches
// StructureEnumerator order, so "first maximizer" agrees between the two.
struct BruteScan {
  const CharacteristicFunction& cf;
  int n;
  std::vector<int> labels;
  std::vector<Mask> blocks;
  double best = -1.0;
  std::vector<int> best_labels;

  explicit BruteScan(const CharacteristicFunction& table)
      : cf(table), n(table.agents()), labels(static_cast<std::size_t>(table.agents()), 0) {
    blocks.reserve(static_cast<std::size_t>(n));
  }

  void run(int pos) {
    if (pos == n) {
      const double v = structure_value(blocks, cf);
      if (v > best) {
        best = v;
        best_labels = labels;
      }
      return;
    }
    const Mask bit = mask_bit(pos + 1, n);
    const int used = static_cast<int>(blocks.size());
    for (int lab = 1; lab <= used; ++lab) {
      labels[static_cast<std::size_t>(pos)] = lab;
      blocks[static_cast<std::size_t>(lab) - 1] |= bit;
      run(pos + 1);
      blocks[static_cast<std::size_t>(lab) - 1] ^= bit;
    }
    labels[static_cast<std::size_t>(pos)] = used + 1;
    blocks.push_back(bit);
    run(pos + 1);
    blocks.pop_back();
  }
};

std::pair<CoalitionStructure, double> brute_force_serial(const CharacteristicFunction& cf) {
  BruteScan scan(cf);
  scan.run(0);
  return {canonicalize(scan.best_labels), scan.best};
}

std::pair<CoalitionStructure, double> brute_force_parallel(const CharacteristicFunction& cf) {
  const int n = cf.agents();
  // Keep thousands of leaves per task so per-task setup stays negligible.
  const int depth = std::clamp(n - 5, 4, 9);
  // Materialize every restricted-growth prefix of length `depth` in
  // enumeration order; completions of prefix p are contiguous and precede
  // completions of prefix p+1, so a (value, prefix-index) reduction keeps
  // the global first maximizer.
  std::vector<std::vector<int>> prefixes;
  {
    std::vector<int> lab(static_cast<std::size_t>(depth), 1);
    std::vector<int> mx(static_cast<std::size_t>(depth), 1);
    for (;;) {
      prefixes.push_back(lab);
      int i = depth - 1;
      for (; i >= 1; --i)
        if (lab[static_cast<std::size_t>(i)] <= mx[static_cast<std::size_t>(i) - 1]) break;
      if (i < 1) break;
      ++lab[static_cast<std::size_t>(i)];
      mx[static_cast<std::size_t>(i)] =
          std::max(mx[static_cast<std::size_t>(i) - 1], lab[static_cast<std::size_t>(i)]);
      for (int j = i + 1; j < depth; ++j) {
        lab[static_cast<std::size_t>(j)] = 1;
        mx[static_cast<std::size_t>(j)] = mx[static_cast<std::size_t>(j) - 1];
      }
    }
  }

  const auto tasks = static_cast<std::int64_t>(prefixes.size());
  std::vector<double> task_best(prefixes.size(), -1.0);
  std::vector<std::vector<int>> task_labels(prefixes.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t t = 0; t < tasks; ++t) {
    BruteScan scan(cf);
    const auto& pre = prefixes[static_cast<std::size_t>(t)];
    for (int i = 0; i < depth; ++i) {
      const int lab = pre[static_cast<std::size_t>(i)];
      scan.labels[static_cast<std::size_t>(i)] = lab;
      if (lab > static_cast<int>(scan.blocks.size())) scan.blocks.push_back(0);
      scan.blocks[static_cast<std::size_t>(lab) - 1] |= mask_bit(i + 1, n);
    }
    scan.run(depth);
    task_best[static_cast<std::size_t>(t)] = scan.best;
    task_labels[static_cast<std::size_t>(t)] = std::move(scan.best_labels);
  }

  std::size_t winner = 0;
  for (std::size_t t = 1; t < prefixes.size(); ++t)
    if (task_best[t] > task_best[winner]) winner = t;
  return {canonicalize(task_labels[winner]), task_best[winner]};
}

}  // namespace

std::pair<CoalitionStructure, double> brute_force_optimum(const CharacteristicFunction& cf,
                                                          Exec exec, int guard) {
  const int n = cf.agents();
  if (n > guard)
    throw Error("brute force limited to n <= " + std::to_string(guard) + ", got n=" +
                std::to_string(n));
  if (exec == Exec::Parallel && n > 10) return brute_force_parallel(cf);
  return brute_force_serial(cf);
}

}  // namespace csg
