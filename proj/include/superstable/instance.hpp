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

#ifndef SUPERSTABLE_INSTANCE_HPP
#define SUPERSTABLE_INSTANCE_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "superstable/matroid.hpp"
#include "superstable/weak_order.hpp"

namespace superstable {

enum class Side { D, H };

inline const char* side_name(Side s) { return s == Side::D ? "D" : "H"; }

/// A full problem input: ground set, two matroids over it, and one weak
/// order per side. Immutable after construction.
struct Instance {
  std::size_t ground_size = 0;
  MatroidPtr matroid_d;
  MatroidPtr matroid_h;
  WeakOrder order_d;
  WeakOrder order_h;

  const MatroidPtr& matroid(Side s) const { return s == Side::D ? matroid_d : matroid_h; }
  const WeakOrder& order(Side s) const { return s == Side::D ? order_d : order_h; }

  ElementSet all_elements() const { return ElementSet::full(ground_size); }

  /// Every singleton must be independent on both sides; instances with loop
  /// elements are rejected rather than repaired.
  void validate() const {
    for (Side s : {Side::D, Side::H}) {
      const Matroid& m = *matroid(s);
      if (m.universe_size() != ground_size)
        throw std::invalid_argument(std::string("matroid ") + side_name(s) +
                                    " ground set size mismatch");
      if (order(s).universe() != ground_size)
        throw std::invalid_argument(std::string("order ") + side_name(s) +
                                    " does not cover the ground set");
      for (std::size_t e = 0; e < ground_size; ++e) {
        if (!m.is_independent_singleton(static_cast<Element>(e)))
          throw std::invalid_argument("element " + std::to_string(e) +
                                      " is dependent as a singleton in matroid " + side_name(s));
      }
    }
  }
};

}  // namespace superstable

#endif  // SUPERSTABLE_INSTANCE_HPP
