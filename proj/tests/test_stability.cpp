// Copyright 2026 The Authors.
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

#include <cstdint>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

using namespace superstable;
using test_util::all_circuits_exhaustive;
using test_util::instance_corpus;
using test_util::mask_set;
using test_util::subset_count;

namespace {

Instance one_slot(std::vector<int> ranks_d, std::vector<int> ranks_h) {
  Instance inst;
  inst.ground_size = 2;
  inst.matroid_d = std::make_shared<UniformMatroid>(2, 1);
  inst.matroid_h = std::make_shared<UniformMatroid>(2, 1);
  inst.order_d = WeakOrder(std::move(ranks_d));
  inst.order_h = WeakOrder(std::move(ranks_h));
  return inst;
}

/// One-to-one marriage instance: element (i,j) = pair of left agent i and
/// right agent j, id i*right+j, capacity 1 per agent on each side.
Instance marriage(std::size_t left, std::size_t right, const std::vector<int>& ranks_d,
                  const std::vector<int>& ranks_h) {
  const std::size_t n = left * right;
  Instance inst;
  inst.ground_size = n;
  std::vector<PartitionMatroid::Block> d_blocks, h_blocks;
  for (std::size_t i = 0; i < left; ++i) {
    ElementSet members(n);
    for (std::size_t j = 0; j < right; ++j) members.insert(static_cast<Element>(i * right + j));
    d_blocks.push_back({members, 1});
  }
  for (std::size_t j = 0; j < right; ++j) {
    ElementSet members(n);
    for (std::size_t i = 0; i < left; ++i) members.insert(static_cast<Element>(i * right + j));
    h_blocks.push_back({members, 1});
  }
  inst.matroid_d = std::make_shared<PartitionMatroid>(n, d_blocks);
  inst.matroid_h = std::make_shared<PartitionMatroid>(n, h_blocks);
  inst.order_d = WeakOrder(ranks_d);
  inst.order_h = WeakOrder(ranks_h);
  inst.validate();
  return inst;
}

/// From-definition super-stability check using exhaustively enumerated
/// circuits instead of the library's fundamental-circuit query.
bool super_stable_by_definition(const Instance& inst, const ElementSet& I) {
  if (!inst.matroid_d->is_independent(I) || !inst.matroid_h->is_independent(I)) return false;
  for (Element e : (inst.all_elements() - I).elements()) {
    bool dominated = false;
    for (Side side : {Side::D, Side::H}) {
      const Matroid& m = *inst.matroid(side);
      const WeakOrder& order = inst.order(side);
      if (m.is_independent(I.with(e))) continue;
      for (const ElementSet& c : all_circuits_exhaustive(m)) {
        if (!c.contains(e) || !c.is_subset_of(I.with(e))) continue;
        bool all_better = true;
        for (Element f : c.without(e).elements()) all_better = all_better && order.strictly_prefers(f, e);
        dominated = dominated || all_better;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("dominated_set examples") {
  Instance strict = one_slot({1, 2}, {1, 2});
  CHECK(dominated_set(strict, Side::D, ElementSet(2)).empty());
  CHECK(dominated_set(strict, Side::D, ElementSet::of(2, {0})) == ElementSet::of(2, {1}));

  Instance tied = one_slot({1, 1}, {1, 1});
  CHECK(dominated_set(tied, Side::D, ElementSet::of(2, {0})).empty());
}

TEST_CASE("blocking_set_h examples") {
  Instance tied = one_slot({1, 2}, {1, 1});
  CHECK(blocking_set_h(tied, ElementSet(2)).empty());
  CHECK(blocking_set_h(tied, ElementSet::of(2, {0})) == ElementSet::of(2, {1}));

  Instance strict = one_slot({1, 2}, {1, 2});
  CHECK(blocking_set_h(strict, ElementSet::of(2, {0})).empty());
}

TEST_CASE("blocking and dominated partition the span on side H") {
  for (const InstanceDoc& doc : instance_corpus(30, 6)) {
    Instance inst = doc.build();
    const std::size_t n = inst.ground_size;
    for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
      ElementSet I = mask_set(n, mask);
      if (!inst.matroid_h->is_independent(I)) continue;
      ElementSet block = blocking_set_h(inst, I);
      ElementSet dom = dominated_set(inst, Side::H, I);
      ElementSet spanned = span(*inst.matroid_h, I);
      CHECK((block & dom).empty());
      CHECK((block | dom) == spanned);
      CHECK_FALSE(block.intersects(I));
      CHECK_FALSE(dom.intersects(I));
      if (inst.matroid_d->is_independent(I)) {
        ElementSet dom_d = dominated_set(inst, Side::D, I);
        CHECK(dom_d.is_subset_of(span(*inst.matroid_d, I)));
        CHECK_FALSE(dom_d.intersects(I));
      }
    }
  }
}

TEST_CASE("check_super_stable basics and witnesses") {
  Instance empty;
  empty.ground_size = 0;
  empty.matroid_d = std::make_shared<UniformMatroid>(0, 0);
  empty.matroid_h = std::make_shared<UniformMatroid>(0, 0);
  CHECK(check_super_stable(empty, ElementSet(0)).stable);

  Instance strict = one_slot({1, 2}, {1, 2});
  StabilityVerdict dep = check_super_stable(strict, ElementSet::full(2));
  CHECK_FALSE(dep.stable);
  CHECK(dep.failure == StabilityVerdict::Failure::DependentInD);

  StabilityVerdict good = check_super_stable(strict, ElementSet::of(2, {0}));
  CHECK(good.stable);
  CHECK(good.describe() == "super-stable");

  StabilityVerdict bad = check_super_stable(strict, ElementSet::of(2, {1}));
  CHECK_FALSE(bad.stable);
  CHECK(bad.failure == StabilityVerdict::Failure::ElementWitness);
  CHECK(bad.witness == 0);
}

TEST_CASE("all-indifferent two-by-two marriage has no super-stable set") {
  Instance inst = marriage(2, 2, {0, 0, 1, 1}, {0, 1, 0, 1});
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    ElementSet I = mask_set(4, mask);
    StabilityVerdict v = check_super_stable(inst, I);
    CHECK_FALSE(v.stable);
    if (I.size() == 2 && inst.matroid_d->is_independent(I) && inst.matroid_h->is_independent(I))
      CHECK(v.failure == StabilityVerdict::Failure::ElementWitness);
  }
  CHECK(enumerate_super_stable(inst).empty());
}

TEST_CASE("enumeration basics") {
  Instance empty;
  empty.ground_size = 0;
  empty.matroid_d = std::make_shared<UniformMatroid>(0, 0);
  empty.matroid_h = std::make_shared<UniformMatroid>(0, 0);
  std::vector<ElementSet> all = enumerate_super_stable(empty);
  REQUIRE(all.size() == 1);
  CHECK(all[0].empty());

  Instance strict_sm = marriage(2, 2, {0, 1, 2, 3}, {0, 2, 1, 3});
  CHECK_FALSE(enumerate_super_stable(strict_sm).empty());

  Instance big = marriage(5, 5, std::vector<int>(25, 0), std::vector<int>(25, 0));
  CHECK_THROWS_AS((void)enumerate_super_stable(big, 20), std::invalid_argument);
}

TEST_CASE("enumeration output is canonically sorted") {
  Instance inst = marriage(2, 2, {0, 1, 2, 3}, {0, 2, 1, 3});
  std::vector<ElementSet> all = enumerate_super_stable(inst);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(canonical_less(all[i - 1], all[i]));
}

TEST_CASE("agrees with a from-definition re-implementation") {
  for (const InstanceDoc& doc : instance_corpus(40, 6, 2000)) {
    Instance inst = doc.build();
    const std::size_t n = inst.ground_size;
    for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
      ElementSet I = mask_set(n, mask);
      CHECK(check_super_stable(inst, I).stable == super_stable_by_definition(inst, I));
    }
  }
}

TEST_CASE("strict preferences reduce to classical stable matchings") {
  struct Case {
    std::size_t left, right;
    std::vector<int> ranks_d, ranks_h;
  };
  // Element (i,j) has id i*right+j; ranks flatten (agent, list position).
  std::vector<Case> cases = {
      {2, 2, {0, 1, 3, 2}, {0, 2, 1, 3}},
      {2, 2, {1, 0, 2, 3}, {3, 2, 1, 0}},
      {3, 3, {0, 1, 2, 5, 3, 4, 7, 8, 6}, {0, 3, 6, 4, 1, 7, 8, 5, 2}},
      {3, 3, {2, 1, 0, 3, 4, 5, 8, 6, 7}, {6, 0, 3, 1, 7, 4, 5, 2, 8}},
  };
  for (const Case& c : cases) {
    Instance inst = marriage(c.left, c.right, c.ranks_d, c.ranks_h);
    REQUIRE(inst.order_d.all_ranks_distinct());
    REQUIRE(inst.order_h.all_ranks_distinct());
    std::vector<ElementSet> super = enumerate_super_stable(inst);

    // Classical brute force: matchings with no pair where both sides would
    // weakly improve (strictly, since all ranks are distinct).
    std::vector<ElementSet> classical;
    const std::size_t n = c.left * c.right;
    for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
      ElementSet M = mask_set(n, mask);
      if (!inst.matroid_d->is_independent(M) || !inst.matroid_h->is_independent(M)) continue;
      bool blocked = false;
      for (std::size_t i = 0; i < c.left && !blocked; ++i) {
        for (std::size_t j = 0; j < c.right && !blocked; ++j) {
          const Element e = static_cast<Element>(i * c.right + j);
          if (M.contains(e)) continue;
          bool left_wants = true, right_wants = true;
          for (std::size_t jj = 0; jj < c.right; ++jj) {
            const Element f = static_cast<Element>(i * c.right + jj);
            if (M.contains(f) && inst.order_d.strictly_prefers(f, e)) left_wants = false;
          }
          for (std::size_t ii = 0; ii < c.left; ++ii) {
            const Element f = static_cast<Element>(ii * c.right + j);
            if (M.contains(f) && inst.order_h.strictly_prefers(f, e)) right_wants = false;
          }
          blocked = left_wants && right_wants;
        }
      }
      if (!blocked) classical.push_back(M);
    }
    std::sort(classical.begin(), classical.end(), canonical_less);
    CHECK(super == classical);
    CHECK_FALSE(super.empty());
  }
}
