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

#ifndef SUPERSTABLE_STABILITY_HPP
#define SUPERSTABLE_STABILITY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "superstable/instance.hpp"
#include "superstable/matroid.hpp"

namespace superstable {

/// Spanned elements all of whose fundamental-circuit partners are strictly
/// preferred to them on the given side.
inline ElementSet dominated_set(const Instance& inst, Side side, const ElementSet& I) {
  const Matroid& m = *inst.matroid(side);
  const WeakOrder& order = inst.order(side);
  ElementSet out(inst.ground_size);
  for (Element e : span(m, I).elements()) {
    bool all_strictly_better = true;
    for (Element f : fundamental_circuit_minus(m, e, I).elements()) {
      if (!order.strictly_prefers(f, e)) {
        all_strictly_better = false;
        break;
      }
    }
    if (all_strictly_better) out.insert(e);
  }
  return out;
}

/// Spanned elements on side H having some fundamental-circuit partner they
/// are tied with or preferred to. Complements dominated_set(H) within the
/// span.
inline ElementSet blocking_set_h(const Matroid& m, const WeakOrder& order, const ElementSet& I) {
  ElementSet out(m.universe_size());
  for (Element e : span(m, I).elements()) {
    for (Element f : fundamental_circuit_minus(m, e, I).elements()) {
      if (order.weakly_prefers(e, f)) {
        out.insert(e);
        break;
      }
    }
  }
  return out;
}

inline ElementSet blocking_set_h(const Instance& inst, const ElementSet& I) {
  return blocking_set_h(*inst.matroid_h, inst.order_h, I);
}

struct StabilityVerdict {
  enum class Failure { None, DependentInD, DependentInH, ElementWitness };

  bool stable = false;
  Failure failure = Failure::None;
  Element witness = -1;  // set when failure == ElementWitness

  std::string describe() const {
    switch (failure) {
      case Failure::None:
        return "super-stable";
      case Failure::DependentInD:
        return "dependent in matroid D";
      case Failure::DependentInH:
        return "dependent in matroid H";
      case Failure::ElementWitness:
        return "element " + std::to_string(witness) + " is outside both dominated sets";
    }
    return "";
  }
};

/// True iff I is a common independent set and every element outside I is
/// dominated on at least one side. On failure reports the violated matroid
/// or an undominated element.
inline StabilityVerdict check_super_stable(const Instance& inst, const ElementSet& I) {
  StabilityVerdict v;
  if (!inst.matroid_d->is_independent(I)) {
    v.failure = StabilityVerdict::Failure::DependentInD;
    return v;
  }
  if (!inst.matroid_h->is_independent(I)) {
    v.failure = StabilityVerdict::Failure::DependentInH;
    return v;
  }
  const ElementSet covered = dominated_set(inst, Side::D, I) | dominated_set(inst, Side::H, I);
  const ElementSet outside = inst.all_elements() - I;
  if (!outside.is_subset_of(covered)) {
    v.failure = StabilityVerdict::Failure::ElementWitness;
    v.witness = (outside - covered).first();
    return v;
  }
  v.stable = true;
  return v;
}

inline constexpr std::size_t kDefaultEnumerationLimit = 20;

/// All super-stable common independent sets, by exhaustive subset
/// enumeration (2^|E|), sorted by cardinality then lexicographically.
/// Refuses ground sets above the limit.
inline std::vector<ElementSet> enumerate_super_stable(
    const Instance& inst, std::size_t limit = kDefaultEnumerationLimit) {
  if (inst.ground_size > limit)
    throw std::invalid_argument("enumeration refused: ground set of size " +
                                std::to_string(inst.ground_size) + " exceeds limit " +
                                std::to_string(limit));
  std::vector<ElementSet> out;
  const std::uint64_t end = std::uint64_t{1} << inst.ground_size;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    ElementSet candidate = ElementSet::from_mask(inst.ground_size, mask);
    if (check_super_stable(inst, candidate).stable) out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace superstable

#endif  // SUPERSTABLE_STABILITY_HPP
