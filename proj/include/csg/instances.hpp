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

#ifndef CSG_INSTANCES_HPP
#define CSG_INSTANCES_HPP

#include <cstdint>
#include <string>

#include "csg/types.hpp"

namespace csg {

/// Generation provenance, written next to each instance file as `.meta`.
struct GenMeta {
  std::string distribution;  // "uniform" or "normal"
  int n = 0;
  std::uint64_t seed = 0;
  std::string params;      // distribution parameters, e.g. "mu=1,sigma=0.1"
  std::string generator;   // RNG family and transform identifiers
  std::uint64_t clamped = 0;  // negative draws clamped to 0 (normal only)
};

struct GeneratedInstance {
  CharacteristicFunction cf;
  GenMeta meta;
};

/// Coalition values i.i.d. U(0,1). Deterministic under (n, seed).
GeneratedInstance gen_uniform(int n, std::uint64_t seed, int cap = kMaxAgents);

/// Coalition values i.i.d. N(mu, sigma^2), clamped below at 0 to keep the
/// nonnegativity invariant; the clamp count lands in the metadata.
GeneratedInstance gen_normal(int n, std::uint64_t seed, double mu = 1.0, double sigma = 0.1,
                             int cap = kMaxAgents);

/// Text format: line 1 holds n; then exactly 2^n - 1 lines "<mask> <value>"
/// with masks ascending from 1, values rendered with shortest round-trip
/// precision. A write/read round trip reproduces every double bit-exactly.
void write_instance(const CharacteristicFunction& cf, const std::string& path);
CharacteristicFunction read_instance(const std::string& path, int cap = kMaxAgents);

void write_meta(const GenMeta& meta, const std::string& path);

/// Reads a `.meta` sidecar; returns false when the file does not exist.
bool read_meta(const std::string& path, GenMeta& out);

/// Shortest decimal rendering of a double that parses back bit-exactly.
std::string format_double(double v);

}  // namespace csg

#endif  // CSG_INSTANCES_HPP
