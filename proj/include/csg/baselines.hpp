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

#ifndef CSG_BASELINES_HPP
#define CSG_BASELINES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csg/neighborhood.hpp"
#include "csg/rng.hpp"
#include "csg/types.hpp"

namespace csg {

/// How a random neighbor is drawn each step.
enum class NeighborMode {
  /// Pick an operator uniformly among those with at least one move, then a
  /// move uniformly within it. Keeps high-fanout operators from dominating.
  KindFirstUniform,
  /// Pick uniformly over the union of all moves.
  FlatUniform,
};

struct SaParams {
  /// Unset: max - min of the value table (1.0 when that range is zero).
  std::optional<double> initial_temp;
  double cooling_alpha = 0.95;  // schedule t <- alpha * t, applied each step
  std::uint64_t steps = 10000;
  std::vector<OperatorKind> operators{kAllOperators.begin(), kAllOperators.end()};
  NeighborMode neighbor_mode = NeighborMode::KindFirstUniform;
  std::uint64_t seed = 0;
  std::optional<double> time_limit_seconds;
  std::uint64_t trace_every = 1000;  // record cadence; improvements always recorded
};

/// Metropolis rule: strict improvements pass without a draw; otherwise
/// accept with probability e^(delta/temp) (1 when delta is zero).
bool metropolis_accept(double delta, double temp, Rng& rng);

/// Random structure from uniform restricted-growth digit choices: digit i
/// is uniform over 1 .. (running max + 1).
CoalitionStructure random_structure(int n, Rng& rng);

struct SaResult {
  CoalitionStructure best;
  double value = 0.0;
  double initial_temp = 0.0;  // resolved value actually used
  AnytimeTrace trace;
};

/// Single random-neighbor annealing walk returning the best structure ever
/// visited. Deterministic given (cf, params).
SaResult simulated_annealing(const CharacteristicFunction& cf, const SaParams& params);

std::string sa_metadata(const SaParams& params, double resolved_temp);

}  // namespace csg

#endif  // CSG_BASELINES_HPP
