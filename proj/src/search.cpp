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

#include "csg/search.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "csg/core.hpp"
#include "csg/neighborhood.hpp"

namespace csg {

namespace {

using Clock = std::chrono::steady_clock;

bool expired(const Deadline& deadline) {
  return deadline && Clock::now() >= *deadline;
}

void validate(const GraspParams& p) {
  if (p.maxiter < 1) throw Error("maxiter must be >= 1");
  if (p.fixed_alpha && (*p.fixed_alpha < 0.0 || *p.fixed_alpha > 1.0))
    throw Error("alpha must lie in [0,1]");
  if (p.time_limit_seconds && *p.time_limit_seconds <= 0.0)
    throw Error("time limit must be positive");
}

}  // namespace

double rcl_threshold(double s_min, double s_max, double alpha) {
  return std::min(s_min + alpha * (s_max - s_min), s_max);
}

CoalitionStructure construct(const CharacteristicFunction& cf, double alpha, Rng& rng,
                             const ConstructionObserver& observe) {
  const int n = cf.agents();
  PartialStructure cur(n);
  std::vector<std::size_t> rcl;
  for (int step = 0; step < n; ++step) {
    auto cands = refinements(cur);
    std::vector<double> vals(cands.size());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      vals[i] = structure_value(cands[i].blocks, cf);
      lo = std::min(lo, vals[i]);
      hi = std::max(hi, vals[i]);
    }
    const double thr = rcl_threshold(lo, hi, alpha);
    rcl.clear();
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (vals[i] >= thr) rcl.push_back(i);
    const std::size_t pick = rcl[rng.uniform_index(rcl.size())];
    if (observe) observe({lo, hi, alpha, vals[pick]});
    cur = std::move(cands[pick]);
  }
  return canonical_from_blocks(cur.blocks, n);
}

CoalitionStructure local_search(CoalitionStructure start, const CharacteristicFunction& cf,
                                PivotRule pivot, Rng& rng, Deadline deadline) {
  CoalitionStructure cur = std::move(start);
  double cur_value = cs_value(cur, cf);
  for (;;) {
    if (expired(deadline)) return cur;
    if (pivot == PivotRule::FirstImprovement) {
      bool moved = false;
      visit_neighbors(cur, [&](CoalitionStructure&& nb) {
        const double v = cs_value(nb, cf);
        if (v > cur_value) {
          cur = std::move(nb);
          cur_value = v;
          moved = true;
          return false;
        }
        return true;
      });
      if (!moved) return cur;
    } else {
      double best = cur_value;
      std::vector<CoalitionStructure> argmax;
      visit_neighbors(cur, [&](CoalitionStructure&& nb) {
        const double v = cs_value(nb, cf);
        if (v > best) {
          best = v;
          argmax.clear();
          argmax.push_back(std::move(nb));
        } else if (v == best && v > cur_value) {
          // The stream may repeat structures; keep the tie list distinct.
          if (std::find(argmax.begin(), argmax.end(), nb) == argmax.end())
            argmax.push_back(std::move(nb));
        }
        return true;
      });
      if (argmax.empty()) return cur;
      cur = std::move(argmax[rng.uniform_index(argmax.size())]);
      cur_value = best;
    }
  }
}

GraspResult grasp_csf(const CharacteristicFunction& cf, const GraspParams& params,
                      const ConstructionObserver& observe) {
  validate(params);
  Rng rng(params.seed);
  const auto t0 = Clock::now();
  Deadline deadline;
  if (params.time_limit_seconds)
    deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(*params.time_limit_seconds));

  GraspResult out;
  bool have_incumbent = false;
  for (int iter = 1; iter <= params.maxiter; ++iter) {
    // Iteration 1 always runs so there is always an incumbent to return.
    if (iter > 1 && expired(deadline)) break;
    const double alpha = params.fixed_alpha ? *params.fixed_alpha : rng.uniform01();
    CoalitionStructure cs = construct(cf, alpha, rng, observe);
    cs = local_search(std::move(cs), cf, params.pivot, rng, deadline);
    const double v = cs_value(cs, cf);
    if (!have_incumbent || v > out.value) {
      out.best = std::move(cs);
      out.value = v;
      have_incumbent = true;
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    out.trace.push_back({iter, elapsed, out.value, out.best});
  }
  return out;
}

std::string grasp_metadata(const GraspParams& params) {
  std::string meta = std::string("rng=") + Rng::family();
  meta += ";alpha=";
  meta += params.fixed_alpha ? std::to_string(*params.fixed_alpha) : std::string("per-iteration-uniform");
  meta += ";pivot=";
  meta += params.pivot == PivotRule::BestImprovement ? "best" : "first";
  meta += ";maxiter=" + std::to_string(params.maxiter);
  return meta;
}

}  // namespace csg
