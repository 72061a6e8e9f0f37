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

#ifndef SUPERSTABLE_MATROID_HPP
#define SUPERSTABLE_MATROID_HPP

#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superstable/element_set.hpp"

namespace superstable {

/// Independence oracle over a ground set. Elements are ids in a fixed
/// universe 0..universe_size()-1; a minor of a matroid keeps the universe
/// and shrinks ground(). Implementations are immutable after construction
/// and safe to query concurrently.
class Matroid {
 public:
  virtual ~Matroid() = default;

  /// Size of the id space (the root ground set even for minors).
  virtual std::size_t universe_size() const = 0;

  /// Elements this matroid is defined on.
  virtual const ElementSet& ground() const = 0;

  bool is_independent(const ElementSet& set) const {
    if (set.universe() != universe_size())
      throw std::invalid_argument("set universe does not match matroid ground set");
    if (!set.is_subset_of(ground()))
      throw std::invalid_argument("set contains elements outside the matroid's ground set");
    return check_independent(set);
  }

  bool is_independent_singleton(Element e) const {
    ElementSet s(universe_size());
    s.insert(e);
    return is_independent(s);
  }

 protected:
  virtual bool check_independent(const ElementSet& set) const = 0;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

/// Maximal independent subset of X, built greedily in the given scan order
/// (ascending id over X when order is empty). Deterministic given the order.
inline ElementSet find_base(const Matroid& m, const ElementSet& X,
                            std::span<const Element> order = {}) {
  ElementSet base(m.universe_size());
  auto try_add = [&](Element e) {
    if (!X.contains(e)) return;
    base.insert(e);
    if (!m.is_independent(base)) base.erase(e);
  };
  if (order.empty()) {
    for (Element e : X.elements()) try_add(e);
  } else {
    for (Element e : order) try_add(e);
  }
  return base;
}

inline std::size_t rank(const Matroid& m, const ElementSet& X) {
  return find_base(m, X).size();
}

/// Elements outside I whose addition to I creates dependence.
inline ElementSet span(const Matroid& m, const ElementSet& I) {
  if (!m.is_independent(I)) throw std::invalid_argument("span: set is not independent");
  ElementSet out(m.universe_size());
  for (Element u : (m.ground() - I).elements()) {
    if (!m.is_independent(I.with(u))) out.insert(u);
  }
  return out;
}

/// The unique circuit inside I+u, for independent I and u spanned by I.
/// Computed as {f in I+u : I+u-f independent}.
inline ElementSet fundamental_circuit(const Matroid& m, Element u, const ElementSet& I) {
  if (!m.is_independent(I))
    throw std::invalid_argument("fundamental_circuit: set is not independent");
  if (I.contains(u) || m.is_independent(I.with(u)))
    throw std::invalid_argument("fundamental_circuit: element is not spanned by the set");
  const ElementSet iu = I.with(u);
  ElementSet circuit(m.universe_size());
  for (Element f : iu.elements()) {
    if (m.is_independent(iu.without(f))) circuit.insert(f);
  }
  return circuit;
}

/// fundamental_circuit minus the spanned element itself.
inline ElementSet fundamental_circuit_minus(const Matroid& m, Element u, const ElementSet& I) {
  return fundamental_circuit(m, u, I).without(u);
}

/// Minor of a matroid: a restriction, a contraction, or a stack of both.
/// Contraction stores a base B of the contracted part; independence of I in
/// the minor is answered as independence of I together with B in the inner
/// matroid. Views stack, so repeated contraction is cheap.
class MinorView final : public Matroid {
 public:
  static MatroidPtr restriction(MatroidPtr inner, const ElementSet& keep) {
    if (!keep.is_subset_of(inner->ground()))
      throw std::invalid_argument("restriction: set outside ground set");
    ElementSet empty(inner->universe_size());
    return MatroidPtr(new MinorView(std::move(inner), keep, empty));
  }

  static MatroidPtr contraction(MatroidPtr inner, const ElementSet& removed) {
    if (!removed.is_subset_of(inner->ground()))
      throw std::invalid_argument("contraction: set outside ground set");
    ElementSet base = find_base(*inner, removed);
    ElementSet keep = inner->ground() - removed;
    return MatroidPtr(new MinorView(std::move(inner), keep, std::move(base)));
  }

  std::size_t universe_size() const override { return inner_->universe_size(); }
  const ElementSet& ground() const override { return ground_; }

  const ElementSet& contracted_base() const { return contracted_base_; }

 protected:
  bool check_independent(const ElementSet& set) const override {
    return inner_->is_independent(set | contracted_base_);
  }

 private:
  MinorView(MatroidPtr inner, ElementSet keep, ElementSet base)
      : inner_(std::move(inner)), ground_(std::move(keep)), contracted_base_(std::move(base)) {}

  MatroidPtr inner_;
  ElementSet ground_;
  ElementSet contracted_base_;
};

inline MatroidPtr restrict_to(MatroidPtr m, const ElementSet& keep) {
  return MinorView::restriction(std::move(m), keep);
}

inline MatroidPtr contract(MatroidPtr m, const ElementSet& removed) {
  return MinorView::contraction(std::move(m), removed);
}

/// Base of the matroid whose intersection with every prefix of the given
/// ordered partition is a base of the restriction to that prefix. Built by
/// taking a base inside each block and contracting the block.
inline ElementSet chain_base(MatroidPtr m, std::span<const ElementSet> blocks) {
  ElementSet seen(m->universe_size());
  for (const ElementSet& block : blocks) {
    if (block.intersects(seen))
      throw std::invalid_argument("chain_base: blocks overlap");
    seen |= block;
  }
  if (seen != m->ground())
    throw std::invalid_argument("chain_base: blocks do not cover the ground set");

  ElementSet out(m->universe_size());
  MatroidPtr current = std::move(m);
  for (const ElementSet& block : blocks) {
    out |= find_base(*current, block);
    current = contract(std::move(current), block);
  }
  return out;
}

/// Pass-through oracle that counts independence queries. Used by the solver
/// to report oracle-call totals in its trace.
class CountingMatroid final : public Matroid {
 public:
  CountingMatroid(MatroidPtr inner, std::shared_ptr<std::size_t> counter)
      : inner_(std::move(inner)), counter_(std::move(counter)) {}

  std::size_t universe_size() const override { return inner_->universe_size(); }
  const ElementSet& ground() const override { return inner_->ground(); }

 protected:
  bool check_independent(const ElementSet& set) const override {
    ++*counter_;
    return inner_->is_independent(set);
  }

 private:
  MatroidPtr inner_;
  std::shared_ptr<std::size_t> counter_;
};

}  // namespace superstable

#endif  // SUPERSTABLE_MATROID_HPP
