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

#ifndef SUPERSTABLE_SOLVER_HPP
#define SUPERSTABLE_SOLVER_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superstable/instance.hpp"
#include "superstable/matroid.hpp"
#include "superstable/stability.hpp"

namespace superstable {

/// Trace of the D-side choice function: the strictly descending preference
/// bands peeled off F and, per band, which elements survived the running
/// contraction.
struct ChoiceDTrace {
  struct Level {
    ElementSet band;  // the head band removed at this level
    ElementSet kept;  // band members whose singleton stays independent
  };
  std::vector<Level> levels;
  ElementSet output;

  std::size_t level_count() const { return levels.size(); }
};

/// D-side choice function. Repeatedly peels the most-preferred band of the
/// remaining elements, keeps those whose singleton is independent in the
/// running contraction, then contracts by the whole band (not just the kept
/// part). The output may be dependent in the D matroid.
inline ChoiceDTrace choose_d(const MatroidPtr& matroid_d, const WeakOrder& order_d,
                             const ElementSet& F) {
  ChoiceDTrace trace;
  trace.output = ElementSet(F.universe());
  ElementSet remaining = F;
  MatroidPtr current = matroid_d;
  while (!remaining.empty()) {
    ElementSet band = order_d.head(remaining);
    remaining -= band;
    ElementSet kept(F.universe());
    for (Element e : band.elements()) {
      if (current->is_independent_singleton(e)) kept.insert(e);
    }
    trace.output |= kept;
    trace.levels.push_back({band, kept});
    current = contract(std::move(current), band);
  }
  return trace;
}

inline ChoiceDTrace choose_d(const Instance& inst, const ElementSet& F) {
  return choose_d(inst.matroid_d, inst.order_d, F);
}

/// Trace of the H-side choice function: elements in processing order and,
/// where an insertion closed a circuit, the removed tail band.
struct ChoiceHTrace {
  struct Step {
    Element element;
    std::optional<ElementSet> removed_tail;  // set when the element was spanned
  };
  std::vector<Step> steps;
  ElementSet output;
};

/// H-side choice function. Inserts elements of F one at a time (ascending id
/// unless an explicit order is given); when the new element is spanned, the
/// whole least-preferred band of its fundamental circuit is dropped,
/// possibly including the element itself. The output is always independent
/// in the H matroid.
inline ChoiceHTrace choose_h(const MatroidPtr& matroid_h, const WeakOrder& order_h,
                             const ElementSet& F,
                             const std::vector<Element>* processing_order = nullptr) {
  ChoiceHTrace trace;
  ElementSet current(F.universe());
  auto step = [&](Element e) {
    if (!F.contains(e)) return;
    ElementSet grown = current.with(e);
    if (matroid_h->is_independent(grown)) {
      current = std::move(grown);
      trace.steps.push_back({e, std::nullopt});
    } else {
      ElementSet circuit = fundamental_circuit(*matroid_h, e, current);
      ElementSet dropped = order_h.tail(circuit);
      current = grown - dropped;
      trace.steps.push_back({e, std::move(dropped)});
    }
  };
  if (processing_order) {
    for (Element e : *processing_order) step(e);
  } else {
    for (Element e : F.elements()) step(e);
  }
  trace.output = std::move(current);
  return trace;
}

inline ChoiceHTrace choose_h(const Instance& inst, const ElementSet& F,
                             const std::vector<Element>* processing_order = nullptr) {
  return choose_h(inst.matroid_h, inst.order_h, F, processing_order);
}

struct SolveOptions {
  /// Processing order for the H-side choice function and for picking the
  /// pivot among blocking candidates. Empty = ascending element id. Must be
  /// a permutation of the ground set when present.
  std::vector<Element> order;
  /// Run internal consistency assertions (disjointness, monotone rejection)
  /// every iteration.
  bool debug_checks = false;
};

struct SolveTrace {
  struct RefineStep {
    ElementSet selected;  // output of the D choice this step was built from
    ElementSet kept;      // after the H choice
    ElementSet rejected;  // cumulative rejections after the step
  };
  struct WithdrawStep {
    Element pivot;
    ElementSet removed_tail;
  };
  struct Round {
    std::vector<RefineStep> refine_steps;
    std::vector<WithdrawStep> withdraw_steps;
    ElementSet chosen;
    ElementSet rejected;

    std::size_t refine_count() const { return refine_steps.size(); }
    std::size_t withdraw_count() const { return withdraw_steps.size(); }
  };

  std::vector<Round> rounds;
  std::size_t oracle_calls_d = 0;
  std::size_t oracle_calls_h = 0;

  std::size_t round_count() const { return rounds.size(); }
};

struct SolveOutcome {
  enum class Verdict {
    Found,
    // The candidate set ended up dependent in the D matroid.
    NoneExistsDependentInD,
    // Some rejected element could still be added on the H side.
    NoneExistsAugmentable,
  };

  Verdict verdict = Verdict::Found;
  ElementSet chosen;       // the result set (Found), or the final candidate
  ElementSet rejected;     // final rejection set
  Element augmenting = -1; // set for NoneExistsAugmentable
  SolveTrace trace;

  bool found() const { return verdict == Verdict::Found; }
};

namespace detail {

inline void check_iteration_bound(std::size_t counter, std::size_t ground_size,
                                  const char* loop_name) {
  if (counter > ground_size + 1)
    throw std::logic_error(std::string("solver invariant failure: ") + loop_name +
                           " iteration count exceeded |E|+1");
}

}  // namespace detail

/// Finds a super-stable common independent set or certifies that none
/// exists. Deterministic; free choices are fixed to the smallest id (or the
/// given processing order). Iteration counters breaching the proven bounds
/// abort with a logic error.
inline SolveOutcome solve(const Instance& inst, const SolveOptions& options = {}) {
  const std::size_t n = inst.ground_size;
  const ElementSet everything = inst.all_elements();

  const std::vector<Element>* order = options.order.empty() ? nullptr : &options.order;
  if (order) {
    if (order->size() != n)
      throw std::invalid_argument("solve: processing order must cover the ground set");
  }
  auto pick = [&](const ElementSet& candidates) -> Element {
    if (order) {
      for (Element e : *order)
        if (candidates.contains(e)) return e;
    }
    return candidates.first();
  };

  SolveOutcome outcome;
  auto calls_d = std::make_shared<std::size_t>(0);
  auto calls_h = std::make_shared<std::size_t>(0);
  MatroidPtr counted_d = std::make_shared<CountingMatroid>(inst.matroid_d, calls_d);
  MatroidPtr counted_h = std::make_shared<CountingMatroid>(inst.matroid_h, calls_h);

  ElementSet chosen(n);
  ElementSet rejected(n);
  std::size_t round = 0;
  while (true) {
    if (chosen == choose_d(counted_d, inst.order_d, everything - rejected).output) break;
    ++round;
    detail::check_iteration_bound(round, n, "outer");
    SolveTrace::Round round_trace;

    // Refinement: alternate the two choice functions, rejecting whatever the
    // D choice proposes but the H choice drops, until a fixed point.
    ElementSet kept(n);
    ElementSet dropped = rejected;
    std::size_t refine = 0;
    while (true) {
      ElementSet selected = choose_d(counted_d, inst.order_d, everything - dropped).output;
      if (kept == selected) break;
      ++refine;
      detail::check_iteration_bound(refine, n, "refinement");
      kept = choose_h(counted_h, inst.order_h, selected, order).output;
      dropped |= selected - kept;
      round_trace.refine_steps.push_back({std::move(selected), kept, dropped});
    }

    // Withdrawal: while a rejected element still blocks the candidate on the
    // H side, drop the tail band of its fundamental circuit and reject it.
    ElementSet candidate = kept;
    ElementSet bucket = dropped;
    std::size_t withdraw = 0;
    while (true) {
      ElementSet blockers = bucket & blocking_set_h(*counted_h, inst.order_h, candidate);
      if (blockers.empty()) break;
      ++withdraw;
      detail::check_iteration_bound(withdraw, n, "withdrawal");
      const Element pivot = pick(blockers);
      ElementSet tail = inst.order_h.tail(fundamental_circuit(*counted_h, pivot, candidate));
      candidate -= tail;
      bucket |= tail;
      round_trace.withdraw_steps.push_back({pivot, std::move(tail)});
      if (options.debug_checks && candidate.intersects(bucket))
        throw std::logic_error("solver invariant failure: candidate intersects rejections");
    }

    if (options.debug_checks && !rejected.is_subset_of(bucket))
      throw std::logic_error("solver invariant failure: rejection set shrank");

    chosen = std::move(candidate);
    rejected = std::move(bucket);
    round_trace.chosen = chosen;
    round_trace.rejected = rejected;
    outcome.trace.rounds.push_back(std::move(round_trace));
  }

  outcome.chosen = chosen;
  outcome.rejected = rejected;
  if (!counted_d->is_independent(chosen)) {
    outcome.verdict = SolveOutcome::Verdict::NoneExistsDependentInD;
  } else {
    outcome.verdict = SolveOutcome::Verdict::Found;
    ElementSet augmentable(n);
    for (Element e : rejected.elements()) {
      if (counted_h->is_independent(chosen.with(e))) augmentable.insert(e);
    }
    if (!augmentable.empty()) {
      outcome.verdict = SolveOutcome::Verdict::NoneExistsAugmentable;
      outcome.augmenting = pick(augmentable);
    }
  }
  outcome.trace.oracle_calls_d = *calls_d;
  outcome.trace.oracle_calls_h = *calls_h;
  return outcome;
}

}  // namespace superstable

#endif  // SUPERSTABLE_SOLVER_HPP
