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

#ifndef CSG_CORE_HPP
#define CSG_CORE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "csg/types.hpp"

namespace csg {

/// Mask index of the coalition holding the given 1-based agent ids.
/// Throws on an empty set, a duplicate id, or an id outside 1..n.
Mask coalition_index(std::span<const int> members, int n);
Mask coalition_index(std::initializer_list<int> members, int n);

/// Agent ids (ascending) contained in `mask`. Inverse of coalition_index.
std::vector<int> members_of(Mask mask, int n);

/// Sum of coalition values over `blocks`, accumulated back to front:
/// v(b_1) + (v(b_2) + (... + (v(b_m) + 0))). Every structure evaluation in
/// this library goes through this fold so that equal structures always
/// yield the identical double.
double structure_value(std::span<const Mask> blocks, const CharacteristicFunction& cf);

/// Value of a complete structure (Eq. V(C) = sum of v over blocks).
double cs_value(const CoalitionStructure& cs, const CharacteristicFunction& cf);

/// Relabels an arbitrary block labeling into canonical first-occurrence
/// form. Two labelings of the same partition map to the same result.
CoalitionStructure canonicalize(std::span<const int> labels);
CoalitionStructure canonicalize(std::initializer_list<int> labels);

/// Canonical structure from pairwise-disjoint blocks covering all n agents.
CoalitionStructure canonical_from_blocks(std::span<const Mask> blocks, int n);

/// Validates canonical form; throws Error otherwise.
CoalitionStructure checked_structure(std::vector<int> labels);

/// Stirling number of the second kind, Z(n,i) = i*Z(n-1,i) + Z(n-1,i-1)
/// with Z(n,n) = Z(n,1) = 1. Throws OverflowError when the value (or an
/// intermediate term) exceeds 64 bits, and Error when i is outside 1..n.
std::uint64_t stirling(int n, int i);

/// Number of partitions of n agents: sum over i of Z(n,i).
std::uint64_t count_structures(int n);

/// Streams every partition of {a_1..a_n} exactly once, in canonical
/// restricted-growth order (grand coalition first, singletons last).
class StructureEnumerator {
 public:
  explicit StructureEnumerator(int n, int cap = kMaxAgents);

  /// Copies the next structure into `out`; false when exhausted.
  bool next(CoalitionStructure& out);

 private:
  int n_;
  bool fresh_ = true;
  bool done_ = false;
  std::vector<int> labels_;
  std::vector<int> maxes_;
};

/// Calls fn(const CoalitionStructure&) for every partition in enumeration
/// order; fn returns false to stop early.
template <class Fn>
void for_each_structure(int n, Fn&& fn) {
  StructureEnumerator en(n);
  CoalitionStructure cs;
  while (en.next(cs)) {
    if (!fn(static_cast<const CoalitionStructure&>(cs))) return;
  }
}

inline constexpr int kDefaultBruteForceGuard = 14;

/// Exhaustive optimum by scanning every partition. Ties resolve to the
/// first maximizer in enumeration order. The parallel kernel partitions the
/// scan by restricted-growth prefix and reduces to the identical result.
std::pair<CoalitionStructure, double> brute_force_optimum(
    const CharacteristicFunction& cf, Exec exec = Exec::Serial,
    int guard = kDefaultBruteForceGuard);

}  // namespace csg

#endif  // CSG_CORE_HPP
