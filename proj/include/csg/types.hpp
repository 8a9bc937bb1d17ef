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

#ifndef CSG_TYPES_HPP
#define CSG_TYPES_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace csg {

/// Coalition bitmask. Agent a_i occupies bit position n-i, so a_1 maps to
/// the most significant of the n low bits and a_n to bit 0.
using Mask = std::uint32_t;

/// Hard limit on the agent count (2^26 doubles = 512 MiB table).
inline constexpr int kMaxAgents = 26;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a counting operation exceeds the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Thrown by instance-file readers; carries the offending line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, long line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// Bit of agent `agent` (1-based) in an n-agent mask.
constexpr Mask mask_bit(int agent, int n) {
  return Mask{1} << (n - agent);
}

/// Mask of the grand coalition over n agents.
constexpr Mask grand_mask(int n) {
  return (n >= 32) ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// A nonempty subset of the n agents.
struct Coalition {
  Mask mask = 0;
  int n = 0;

  Coalition() = default;
  Coalition(Mask m, int agents);

  bool operator==(const Coalition&) const = default;
};

/// Dense table of coalition values indexed by mask. Entry 0 belongs to the
/// empty coalition, is pinned to 0 and never read by solvers.
class CharacteristicFunction {
 public:
  /// Validates 1 <= n <= cap, table length 2^n, and nonnegative finite
  /// entries for every mask >= 1. Entry 0 is forced to 0.
  CharacteristicFunction(int n, std::vector<double> values, int cap = kMaxAgents);

  int agents() const { return n_; }
  Mask grand() const { return grand_mask(n_); }
  std::size_t table_size() const { return values_.size(); }
  double operator[](Mask m) const { return values_[m]; }
  std::span<const double> values() const { return values_; }

 private:
  int n_;
  std::vector<double> values_;
};

/// Partition of all n agents. labels[i] is the 1-based block of agent
/// a_{i+1}; canonical form lists block labels in first-occurrence order
/// (labels[0] == 1, each new label is one past the running maximum).
struct CoalitionStructure {
  std::vector<int> labels;
  int k = 0;

  CoalitionStructure() = default;
  CoalitionStructure(std::vector<int> lab, int blocks) : labels(std::move(lab)), k(blocks) {}

  int n() const { return static_cast<int>(labels.size()); }

  /// Block masks in label order (index j holds block j+1).
  std::vector<Mask> block_masks() const;

  static CoalitionStructure grand(int n);
  static CoalitionStructure singletons(int n);

  bool operator==(const CoalitionStructure&) const = default;
};

/// True if `labels` is a canonical restricted-growth labeling.
bool is_canonical(std::span<const int> labels);

/// Partition of a strict subset of agents; construction-phase state.
/// Blocks are pairwise disjoint and their union equals `assigned`.
struct PartialStructure {
  int n = 0;
  Mask assigned = 0;
  std::vector<Mask> blocks;

  explicit PartialStructure(int agents) : n(agents) {}

  bool complete() const { return assigned == grand_mask(n); }
};

/// One incumbent snapshot: iteration counter (algorithm-specific unit),
/// wall seconds since the run started, and the best-so-far structure.
struct TraceRecord {
  std::int64_t iteration = 0;
  double elapsed_seconds = 0.0;
  double best_value = 0.0;
  CoalitionStructure best;
};

/// Best-so-far records; best_value and elapsed_seconds are nondecreasing.
using AnytimeTrace = std::vector<TraceRecord>;

/// Kernel execution policy. Parallel variants produce bit-identical
/// results to the serial reference.
enum class Exec { Serial, Parallel };

}  // namespace csg

#endif  // CSG_TYPES_HPP
