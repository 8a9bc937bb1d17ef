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

#ifndef CSG_EXACT_HPP
#define CSG_EXACT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "csg/types.hpp"

namespace csg {

/// Optimal-partition tables over all coalition masks. t2[m] is the best
/// achievable value by partitioning mask m; t1[m] is the first block of
/// that partition (the block holding m's lowest-index agent), with
/// t1[m] == m meaning "keep m whole". Every t2 entry equals the canonical
/// block-order fold of its partition, bit-exactly, so the reconstructed
/// optimum satisfies cs_value(structure) == t2[grand] with zero tolerance.
struct DpTables {
  std::vector<double> t2;
  std::vector<Mask> t1;
};

struct DpResult {
  CoalitionStructure best;
  double value = 0.0;
  DpTables tables;
};

inline constexpr int kDefaultDpGuard = 22;

/// Exact optimum by dynamic programming over coalition masks, O(3^n) time
/// and two 2^n tables. The parallel kernel fills masks of equal popcount
/// concurrently (all dependencies have fewer bits) and produces tables
/// bit-identical to the serial reference.
DpResult dp_solve(const CharacteristicFunction& cf, Exec exec = Exec::Serial,
                  int guard = kDefaultDpGuard);

/// Anytime search outcome with its worst-case guarantee: optimum/value is
/// at most bound_k (infinity until the bottom two graph levels are done,
/// n afterwards, 1 on full completion).
struct BoundedResult {
  CoalitionStructure best;
  double value = 0.0;
  double bound_k = 0.0;
  std::uint64_t nodes_searched = 0;
};

struct SandholmResult {
  BoundedResult result;
  AnytimeTrace trace;  // one record per completed stage, plus a final one
};

/// Level search over the coalition structure graph: stage 1 scans the
/// bottom two levels (grand coalition plus every 2-block structure,
/// 2^(n-1) nodes); later stages scan levels n, n-1, ..., 3 from the top,
/// stopping at the deadline or after max_stages completed stages. Trace
/// iteration numbers count completed stages.
SandholmResult sandholm_anytime(const CharacteristicFunction& cf,
                                std::optional<double> time_limit_seconds = {},
                                std::optional<int> max_stages = {});

/// Metadata note attached to sandholm run records: how the reported bound
/// evolves (frozen at n between the bottom-two-level scan and completion).
const char* sandholm_bound_model();

}  // namespace csg

#endif  // CSG_EXACT_HPP
