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

#include "csg/instances.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>
#include <vector>

#include "csg/rng.hpp"

namespace csg {

namespace {

void check_n(int n, int cap) {
  if (cap < 1 || cap > kMaxAgents) throw Error("cap outside 1..26");
  if (n < 1 || n > cap)
    throw Error("agent count " + std::to_string(n) + " outside 1.." + std::to_string(cap));
}

}  // namespace

GeneratedInstance gen_uniform(int n, std::uint64_t seed, int cap) {
  check_n(n, cap);
  Rng rng(seed);
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (std::size_t m = 1; m < values.size(); ++m) values[m] = rng.uniform01();
  GenMeta meta{"uniform", n, seed, "a=0,b=1", Rng::family(), 0};
  return {CharacteristicFunction(n, std::move(values), cap), std::move(meta)};
}

GeneratedInstance gen_normal(int n, std::uint64_t seed, double mu, double sigma, int cap) {
  check_n(n, cap);
  if (!(sigma > 0.0)) throw Error("sigma must be positive");
  Rng rng(seed);
  std::uint64_t clamped = 0;
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (std::size_t m = 1; m < values.size(); ++m) {
    double v = rng.normal(mu, sigma);
    if (v < 0.0) {
      v = 0.0;
      ++clamped;
    }
    values[m] = v;
  }
  GenMeta meta{"normal", n, seed,
               "mu=" + format_double(mu) + ",sigma=" + format_double(sigma),
               std::string(Rng::family()) + ",gauss=" + Rng::gauss_method(), clamped};
  return {CharacteristicFunction(n, std::move(values), cap), std::move(meta)};
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_instance(const CharacteristicFunction& cf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << cf.agents() << '\n';
  for (Mask m = 1; m <= cf.grand(); ++m) out << m << ' ' << format_double(cf[m]) << '\n';
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

CharacteristicFunction read_instance(const std::string& path, int cap) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string line;
  long lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("missing header", 1);
  int n = 0;
  {
    const char* b = line.data();
    const char* e = b + line.size();
    const auto r = std::from_chars(b, e, n);
    if (r.ec != std::errc{} || r.ptr != e) throw ParseError("malformed agent count", lineno);
  }
  if (n < 1 || n > cap)
    throw ParseError("agent count " + std::to_string(n) + " outside 1.." + std::to_string(cap),
                     lineno);

  const std::uint64_t expect_lines = (std::uint64_t{1} << n) - 1;
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (std::uint64_t expected_mask = 1; expected_mask <= expect_lines; ++expected_mask) {
    if (!next_line())
      throw ParseError("unexpected end of file, expected mask " + std::to_string(expected_mask),
                       lineno + 1);
    const char* b = line.data();
    const char* e = b + line.size();
    std::uint64_t mask = 0;
    auto r = std::from_chars(b, e, mask);
    if (r.ec != std::errc{}) throw ParseError("malformed mask", lineno);
    if (mask != expected_mask)
      throw ParseError("expected mask " + std::to_string(expected_mask) + ", found " +
                           std::to_string(mask) + " (missing, duplicate, or out of order)",
                       lineno);
    if (r.ptr == e || *r.ptr != ' ') throw ParseError("expected ' ' after mask", lineno);
    double value = 0.0;
    const auto rv = std::from_chars(r.ptr + 1, e, value);
    if (rv.ec != std::errc{} || rv.ptr != e) throw ParseError("unparsable value", lineno);
    if (std::isnan(value) || std::isinf(value)) throw ParseError("value must be finite", lineno);
    if (value < 0.0) throw ParseError("negative value " + format_double(value), lineno);
    values[mask] = value;
  }
  while (next_line()) {
    if (!line.empty()) throw ParseError("trailing content after last mask", lineno);
  }
  return CharacteristicFunction(n, std::move(values), cap);
}

void write_meta(const GenMeta& meta, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << "distribution=" << meta.distribution << '\n';
  out << "n=" << meta.n << '\n';
  out << "seed=" << meta.seed << '\n';
  out << "params=" << meta.params << '\n';
  out << "generator=" << meta.generator << '\n';
  out << "clamped=" << meta.clamped << '\n';
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

bool read_meta(const std::string& path, GenMeta& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", lineno);
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "distribution") {
      out.distribution = val;
    } else if (key == "n") {
      out.n = std::stoi(val);
    } else if (key == "seed") {
      out.seed = std::stoull(val);
    } else if (key == "params") {
      out.params = val;
    } else if (key == "generator") {
      out.generator = val;
    } else if (key == "clamped") {
      out.clamped = std::stoull(val);
    }  // unknown keys tolerated for forward compatibility
  }
  return true;
}

}  // namespace csg
