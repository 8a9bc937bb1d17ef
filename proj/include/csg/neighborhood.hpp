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

#ifndef CSG_NEIGHBORHOOD_HPP
#define CSG_NEIGHBORHOOD_HPP

#include <array>
#include <bit>
#include <span>
#include <string>
#include <vector>

#include "csg/core.hpp"
#include "csg/types.hpp"

namespace csg {

/// The five structure-transformation operators.
enum class OperatorKind { Split, Merge, Shift, Exchange, Extract };

inline constexpr std::array<OperatorKind, 5> kAllOperators = {
    OperatorKind::Split, OperatorKind::Merge, OperatorKind::Shift,
    OperatorKind::Exchange, OperatorKind::Extract};

const char* operator_name(OperatorKind k);
OperatorKind operator_from_name(const std::string& name);

namespace detail {

/// Streams the canonical result of every single application of `kind` to
/// the structure given as block masks. Yields may repeat a structure (the
/// set-returning wrappers deduplicate); the input itself is never yielded.
/// fn(CoalitionStructure&&) returns false to stop; the function then
/// returns false.
template <class Fn>
bool visit_operator_moves(std::span<const Mask> blocks, int n, OperatorKind kind, Fn&& fn) {
  const auto k = static_cast<int>(blocks.size());
  std::vector<Mask> child;
  child.reserve(blocks.size() + 1);

  auto emit = [&](const std::vector<Mask>& b) { return fn(canonical_from_blocks(b, n)); };

  switch (kind) {
    case OperatorKind::Split:
      // Every unordered 2-way split of a block with >= 2 members: the part
      // keeping the block's lowest bit enumerates 2^(s-1)-1 choices.
      for (int bi = 0; bi < k; ++bi) {
        const Mask blk = blocks[bi];
        if (std::popcount(blk) < 2) continue;
        const Mask low = blk & (0 - blk);
        const Mask rest = blk ^ low;
        for (Mask r = (rest - 1) & rest;; r = (r - 1) & rest) {
          child.assign(blocks.begin(), blocks.end());
          child[static_cast<std::size_t>(bi)] = low | r;
          child.push_back(blk ^ (low | r));
          if (!emit(child)) return false;
          if (r == 0) break;
        }
      }
      return true;

    case OperatorKind::Merge:
      for (int bi = 0; bi < k; ++bi) {
        for (int bj = bi + 1; bj < k; ++bj) {
          child.assign(blocks.begin(), blocks.end());
          child[static_cast<std::size_t>(bi)] |= child[static_cast<std::size_t>(bj)];
          child.erase(child.begin() + bj);
          if (!emit(child)) return false;
        }
      }
      return true;

    case OperatorKind::Shift:
      // Move one agent from a block of size >= 2 into another existing
      // block. Donor blocks never empty out.
      for (int bi = 0; bi < k; ++bi) {
        if (std::popcount(blocks[bi]) < 2) continue;
        for (Mask rem = blocks[bi]; rem;) {
          const Mask bit = rem & (0 - rem);
          rem ^= bit;
          for (int bj = 0; bj < k; ++bj) {
            if (bj == bi) continue;
            child.assign(blocks.begin(), blocks.end());
            child[static_cast<std::size_t>(bi)] ^= bit;
            child[static_cast<std::size_t>(bj)] |= bit;
            if (!emit(child)) return false;
          }
        }
      }
      return true;

    case OperatorKind::Exchange:
      // Swap one agent each way between two blocks. A swap between two
      // singletons reproduces the input partition and is skipped.
      for (int bi = 0; bi < k; ++bi) {
        for (int bj = bi + 1; bj < k; ++bj) {
          if (std::popcount(blocks[bi]) == 1 && std::popcount(blocks[bj]) == 1) continue;
          for (Mask ra = blocks[bi]; ra;) {
            const Mask abit = ra & (0 - ra);
            ra ^= abit;
            for (Mask rb = blocks[bj]; rb;) {
              const Mask bbit = rb & (0 - rb);
              rb ^= bbit;
              child.assign(blocks.begin(), blocks.end());
              child[static_cast<std::size_t>(bi)] ^= abit | bbit;
              child[static_cast<std::size_t>(bj)] ^= abit | bbit;
              if (!emit(child)) return false;
            }
          }
        }
      }
      return true;

    case OperatorKind::Extract:
      // Pull one agent out of a block of size >= 2 into a new singleton.
      for (int bi = 0; bi < k; ++bi) {
        if (std::popcount(blocks[bi]) < 2) continue;
        for (Mask rem = blocks[bi]; rem;) {
          const Mask bit = rem & (0 - rem);
          rem ^= bit;
          child.assign(blocks.begin(), blocks.end());
          child[static_cast<std::size_t>(bi)] ^= bit;
          child.push_back(bit);
          if (!emit(child)) return false;
        }
      }
      return true;
  }
  return true;
}

}  // namespace detail

/// Streams the canonical results of applying `kinds` in the given order.
/// May yield the same structure more than once (within or across kinds);
/// never yields the input. fn returns false to stop early.
template <class Fn>
bool visit_neighbors(const CoalitionStructure& cs, std::span<const OperatorKind> kinds, Fn&& fn) {
  const auto blocks = cs.block_masks();
  for (OperatorKind k : kinds)
    if (!detail::visit_operator_moves(std::span<const Mask>(blocks), cs.n(), k, fn)) return false;
  return true;
}

template <class Fn>
bool visit_neighbors(const CoalitionStructure& cs, Fn&& fn) {
  return visit_neighbors(cs, std::span<const OperatorKind>(kAllOperators), fn);
}

/// All distinct structures one application of `kind` away from `cs`,
/// canonical, deduplicated, input excluded, in first-seen order.
std::vector<CoalitionStructure> apply_operator(const CoalitionStructure& cs, OperatorKind kind);

/// Union of apply_operator over all five kinds, deduplicated across kinds.
std::vector<CoalitionStructure> neighborhood(const CoalitionStructure& cs);

/// Every one-agent refinement of a partial structure: each unassigned
/// agent placed into each existing block or opened as a new singleton.
/// Yields u * (b + 1) results for u unassigned agents and b blocks.
/// Throws when `p` is already complete.
std::vector<PartialStructure> refinements(const PartialStructure& p);

}  // namespace csg

#endif  // CSG_NEIGHBORHOOD_HPP
