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

#ifndef SUPERSTABLE_WEAK_ORDER_HPP
#define SUPERSTABLE_WEAK_ORDER_HPP

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superstable/element_set.hpp"

namespace superstable {

enum class Preference { StrictlyPrefers, Tied, StrictlyDispreferred };

/// Weak order (transitive complete relation, ties allowed) over a ground
/// set, stored as integer rank buckets: smaller rank = more preferred, equal
/// rank = tied. Transitivity and completeness hold by construction; bucket
/// values need not be contiguous.
class WeakOrder {
 public:
  WeakOrder() = default;

  explicit WeakOrder(std::vector<int> ranks) : ranks_(std::move(ranks)) {}

  std::size_t universe() const { return ranks_.size(); }

  int rank_of(Element e) const {
    check_id(e);
    return ranks_[static_cast<std::size_t>(e)];
  }

  const std::vector<int>& ranks() const { return ranks_; }

  Preference compare(Element e, Element f) const {
    const int re = rank_of(e), rf = rank_of(f);
    if (re < rf) return Preference::StrictlyPrefers;
    if (re > rf) return Preference::StrictlyDispreferred;
    return Preference::Tied;
  }

  bool strictly_prefers(Element e, Element f) const { return rank_of(e) < rank_of(f); }
  bool weakly_prefers(Element e, Element f) const { return rank_of(e) <= rank_of(f); }

  /// Elements of F in F's most preferred rank bucket. F must be nonempty.
  ElementSet head(const ElementSet& F) const {
    return extreme_bucket(F, /*best=*/true);
  }

  /// Elements of F in F's least preferred rank bucket. F must be nonempty.
  ElementSet tail(const ElementSet& F) const {
    return extreme_bucket(F, /*best=*/false);
  }

  bool all_ranks_distinct() const {
    std::vector<int> sorted = ranks_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;

 private:
  ElementSet extreme_bucket(const ElementSet& F, bool best) const {
    if (F.universe() != ranks_.size())
      throw std::invalid_argument("weak order: set over different ground set");
    if (F.empty()) throw std::invalid_argument("weak order: head/tail of empty set");
    int target = best ? std::numeric_limits<int>::max() : std::numeric_limits<int>::min();
    for (Element e : F.elements()) {
      const int r = ranks_[static_cast<std::size_t>(e)];
      target = best ? std::min(target, r) : std::max(target, r);
    }
    ElementSet out(ranks_.size());
    for (Element e : F.elements()) {
      if (ranks_[static_cast<std::size_t>(e)] == target) out.insert(e);
    }
    return out;
  }

  void check_id(Element e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= ranks_.size())
      throw std::out_of_range("weak order: element id out of range");
  }

  std::vector<int> ranks_;
};

}  // namespace superstable

#endif  // SUPERSTABLE_WEAK_ORDER_HPP
