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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>
#include <set>

#include "csg/core.hpp"
#include "csg/neighborhood.hpp"

using namespace csg;

namespace {

std::set<std::vector<int>> label_set(const std::vector<CoalitionStructure>& v) {
  std::set<std::vector<int>> out;
  for (const auto& cs : v) out.insert(cs.labels);
  return out;
}

std::vector<CoalitionStructure> all_structures(int n) {
  std::vector<CoalitionStructure> out;
  for_each_structure(n, [&](const CoalitionStructure& cs) {
    out.push_back(cs);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("operator results for the structure [12][3][4]") {
  const CoalitionStructure cs = canonicalize({1, 1, 2, 3});

  CHECK(label_set(apply_operator(cs, OperatorKind::Split)) ==
        std::set<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(label_set(apply_operator(cs, OperatorKind::Merge)) ==
        std::set<std::vector<int>>{{1, 1, 1, 2}, {1, 1, 2, 1}, {1, 1, 2, 2}});
  // [2][13][4], [2][3][14], [1][23][4], [1][3][24]
  CHECK(label_set(apply_operator(cs, OperatorKind::Shift)) ==
        std::set<std::vector<int>>{{1, 2, 1, 3}, {1, 2, 3, 1}, {1, 2, 2, 3}, {1, 2, 3, 2}});
  // [23][1][4], [24][3][1], [13][2][4], [14][3][2]
  CHECK(label_set(apply_operator(cs, OperatorKind::Exchange)) ==
        std::set<std::vector<int>>{{1, 2, 2, 3}, {1, 2, 3, 2}, {1, 2, 1, 3}, {1, 2, 3, 1}});
  CHECK(label_set(apply_operator(cs, OperatorKind::Extract)) ==
        std::set<std::vector<int>>{{1, 2, 3, 4}});
}

TEST_CASE("neighborhood unions the five operators without repetition") {
  const CoalitionStructure cs = canonicalize({1, 1, 2, 3});
  const auto nb = neighborhood(cs);
  CHECK(label_set(nb).size() == nb.size());  // deduplicated
  std::set<std::vector<int>> expect;
  for (OperatorKind k : kAllOperators)
    for (const auto& s : apply_operator(cs, k)) expect.insert(s.labels);
  CHECK(label_set(nb) == expect);
  // Split and Extract both reach all-singletons; it appears once.
  CHECK(expect.contains({1, 2, 3, 4}));
  CHECK(nb.size() == 8);
}

TEST_CASE("degenerate structures have empty operator sets") {
  CHECK(apply_operator(CoalitionStructure::singletons(4), OperatorKind::Split).empty());
  CHECK(apply_operator(CoalitionStructure::grand(4), OperatorKind::Merge).empty());
  CHECK(neighborhood(CoalitionStructure::grand(1)).empty());
  const auto nb2 = neighborhood(CoalitionStructure::grand(2));
  CHECK(label_set(nb2) == std::set<std::vector<int>>{{1, 2}});
}

TEST_CASE("split yields 2^(s-1)-1 results for a single block") {
  for (int s = 2; s <= 6; ++s) {
    const auto splits = apply_operator(CoalitionStructure::grand(s), OperatorKind::Split);
    CHECK(splits.size() == (std::size_t{1} << (s - 1)) - 1);
  }
}

TEST_CASE("every operator output is a valid canonical partition") {
  for (const auto& cs : all_structures(5)) {
    for (OperatorKind k : kAllOperators) {
      for (const auto& nb : apply_operator(cs, k)) {
        CHECK(is_canonical(nb.labels));
        CHECK(nb.n() == 5);
        CHECK(nb != cs);
        // Blocks cover all agents exactly once.
        Mask all = 0;
        for (Mask b : nb.block_masks()) {
          CHECK((all & b) == 0);
          all |= b;
        }
        CHECK(all == grand_mask(5));
      }
    }
  }
}

TEST_CASE("split and merge are mutually reversible at n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& cs : all_structures(n)) {
      for (const auto& child : apply_operator(cs, OperatorKind::Split)) {
        const auto back = label_set(apply_operator(child, OperatorKind::Merge));
        CHECK(back.contains(cs.labels));
      }
      for (const auto& child : apply_operator(cs, OperatorKind::Merge)) {
        const auto back = label_set(apply_operator(child, OperatorKind::Split));
        CHECK(back.contains(cs.labels));
      }
    }
  }
}

TEST_CASE("neighborhoods are nonempty for n >= 2 and never contain the input") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& cs : all_structures(n)) {
      const auto nb = neighborhood(cs);
      CHECK(!nb.empty());
      for (const auto& s : nb) CHECK(s != cs);
    }
  }
}

TEST_CASE("the neighborhood graph is connected for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    const auto all = all_structures(n);
    std::map<std::vector<int>, std::vector<std::vector<int>>> adj;
    for (const auto& cs : all) {
      auto& row = adj[cs.labels];
      for (const auto& nb : neighborhood(cs)) row.push_back(nb.labels);
    }
    for (const auto& start : all) {
      std::set<std::vector<int>> seen{start.labels};
      std::queue<std::vector<int>> q;
      q.push(start.labels);
      while (!q.empty()) {
        const auto cur = q.front();
        q.pop();
        for (const auto& nxt : adj.at(cur))
          if (seen.insert(nxt).second) q.push(nxt);
      }
      CHECK(seen.size() == all.size());
    }
  }
}

TEST_CASE("refinements place every unassigned agent everywhere") {
  {
    PartialStructure p(3);
    const auto refs = refinements(p);
    CHECK(refs.size() == 3);  // three singleton starts
    std::set<Mask> starts;
    for (const auto& r : refs) {
      CHECK(r.blocks.size() == 1);
      starts.insert(r.blocks[0]);
    }
    CHECK(starts == std::set<Mask>{4, 2, 1});
  }
  {
    PartialStructure p(3);
    p.blocks = {mask_bit(1, 3)};
    p.assigned = mask_bit(1, 3);
    const auto refs = refinements(p);
    CHECK(refs.size() == 4);  // 2 unassigned x (1 block + 1 new)
    std::set<std::pair<Mask, Mask>> shapes;
    for (const auto& r : refs) {
      Mask second = r.blocks.size() > 1 ? r.blocks[1] : 0;
      shapes.insert({r.blocks[0], second});
      CHECK(r.assigned == (r.blocks[0] | second));
    }
    // {a1,a2}, {a1}{a2}, {a1,a3}, {a1}{a3}
    CHECK(shapes == std::set<std::pair<Mask, Mask>>{{6, 0}, {4, 2}, {5, 0}, {4, 1}});
  }
}

TEST_CASE("refinement counts follow u * (b + 1)") {
  PartialStructure p(6);
  p.blocks = {coalition_index({1, 2}, 6), coalition_index({4}, 6)};
  p.assigned = p.blocks[0] | p.blocks[1];
  const auto refs = refinements(p);
  CHECK(refs.size() == 3u * (2 + 1));  // agents 3,5,6 x (2 blocks + new)
}

TEST_CASE("refining a complete structure is an error") {
  PartialStructure p(2);
  p.blocks = {grand_mask(2)};
  p.assigned = grand_mask(2);
  CHECK_THROWS_AS(refinements(p), Error);
}

TEST_CASE("operator names round-trip") {
  for (OperatorKind k : kAllOperators) CHECK(operator_from_name(operator_name(k)) == k);
  CHECK_THROWS_AS(operator_from_name("fuse"), Error);
}
