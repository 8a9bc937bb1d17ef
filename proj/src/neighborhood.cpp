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

#include "csg/neighborhood.hpp"

#include <unordered_set>

namespace csg {

const char* operator_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::Split: return "split";
    case OperatorKind::Merge: return "merge";
    case OperatorKind::Shift: return "shift";
    case OperatorKind::Exchange: return "exchange";
    case OperatorKind::Extract: return "extract";
  }
  return "?";
}

OperatorKind operator_from_name(const std::string& name) {
  for (OperatorKind k : kAllOperators)
    if (name == operator_name(k)) return k;
  throw Error("unknown operator '" + name + "'");
}

namespace {

struct LabelsHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

using SeenSet = std::unordered_set<std::vector<int>, LabelsHash>;

}  // namespace

std::vector<CoalitionStructure> apply_operator(const CoalitionStructure& cs, OperatorKind kind) {
  std::vector<CoalitionStructure> out;
  SeenSet seen;
  const auto blocks = cs.block_masks();
  detail::visit_operator_moves(std::span<const Mask>(blocks), cs.n(), kind,
                               [&](CoalitionStructure&& nb) {
                                 if (seen.insert(nb.labels).second) out.push_back(std::move(nb));
                                 return true;
                               });
  return out;
}

std::vector<CoalitionStructure> neighborhood(const CoalitionStructure& cs) {
  std::vector<CoalitionStructure> out;
  SeenSet seen;
  visit_neighbors(cs, [&](CoalitionStructure&& nb) {
    if (seen.insert(nb.labels).second) out.push_back(std::move(nb));
    return true;
  });
  return out;
}

std::vector<PartialStructure> refinements(const PartialStructure& p) {
  if (p.n < 1 || p.n > kMaxAgents) throw Error("agent count outside 1..26");
  if (p.complete()) throw Error("partial structure already covers all agents");
  std::vector<PartialStructure> out;
  for (int id = 1; id <= p.n; ++id) {
    const Mask bit = mask_bit(id, p.n);
    if (p.assigned & bit) continue;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      PartialStructure q = p;
      q.blocks[b] |= bit;
      q.assigned |= bit;
      out.push_back(std::move(q));
    }
    PartialStructure q = p;
    q.blocks.push_back(bit);
    q.assigned |= bit;
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace csg
