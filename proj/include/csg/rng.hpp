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

#ifndef CSG_RNG_HPP
#define CSG_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace csg {

/// Seedable 64-bit generator with fully specified derived draws, so that a
/// (seed, draw sequence) pair reproduces bit-exactly on any platform.
/// std::distributions are avoided on purpose: their streams are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Identifier recorded in run metadata.
  static const char* family() { return "mt19937_64+lemire+u53"; }

  /// Identifier of the Gaussian transform used by normal().
  static const char* gauss_method() { return "box-muller-cos"; }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  /// Lemire multiply-shift with rejection; unbiased.
  std::uint64_t uniform_index(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// N(mu, sigma^2) via Box-Muller (cosine branch, one variate per call,
  /// two uniform draws consumed).
  double normal(double mu, double sigma) {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mu + sigma * (r * std::cos(2.0 * std::numbers::pi * u2));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace csg

#endif  // CSG_RNG_HPP
