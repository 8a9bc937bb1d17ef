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

#ifndef CSG_SEARCH_HPP
#define CSG_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "csg/rng.hpp"
#include "csg/types.hpp"

namespace csg {

enum class PivotRule { BestImprovement, FirstImprovement };

struct GraspParams {
  int maxiter = 20;
  /// Fixed greediness in [0,1]; unset draws a fresh U(0,1) per iteration.
  std::optional<double> fixed_alpha;
  PivotRule pivot = PivotRule::BestImprovement;
  std::uint64_t seed = 0;
  /// Wall-clock budget; checked at iteration boundaries and between local
  /// search steps. Iteration 1 always completes.
  std::optional<double> time_limit_seconds;
};

/// Snapshot of one construction step, for instrumentation: candidate value
/// range, the greediness used, and the value of the selected candidate.
/// The selection satisfies chosen_value >= min(s_min + alpha*(s_max -
/// s_min), s_max); the threshold is clamped to s_max because at alpha = 1
/// the raw expression can round one ulp above the attainable maximum.
struct ConstructionStep {
  double s_min = 0.0;
  double s_max = 0.0;
  double alpha = 0.0;
  double chosen_value = 0.0;
};

using ConstructionObserver = std::function<void(const ConstructionStep&)>;

/// Inclusive restricted-candidate-list threshold for one step.
double rcl_threshold(double s_min, double s_max, double alpha);

/// Randomized greedy construction: n placement steps; each step scores all
/// one-agent refinements by the value of their placed blocks, keeps those
/// at or above the threshold, and picks one uniformly at random.
CoalitionStructure construct(const CharacteristicFunction& cf, double alpha, Rng& rng,
                             const ConstructionObserver& observe = {});

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Hill climb over the five-operator neighborhood until no strictly
/// improving neighbor exists. BestImprovement scans the full neighborhood
/// and breaks value ties uniformly at random; FirstImprovement takes the
/// first improving neighbor in stream order and consumes no randomness.
CoalitionStructure local_search(CoalitionStructure start, const CharacteristicFunction& cf,
                                PivotRule pivot, Rng& rng, Deadline deadline = {});

struct GraspResult {
  CoalitionStructure best;
  double value = 0.0;
  AnytimeTrace trace;  // one record per completed iteration
};

/// Iterated construction + local search, keeping the incumbent only on
/// strict improvement. Deterministic given (cf, params): all randomness
/// comes from one mt19937_64 stream seeded with params.seed, consumed in
/// order (alpha draw, candidate picks, tie breaks) each iteration.
GraspResult grasp_csf(const CharacteristicFunction& cf, const GraspParams& params,
                      const ConstructionObserver& observe = {});

std::string grasp_metadata(const GraspParams& params);

}  // namespace csg

#endif  // CSG_SEARCH_HPP
