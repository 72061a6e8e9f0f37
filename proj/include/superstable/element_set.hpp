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

#ifndef SUPERSTABLE_ELEMENT_SET_HPP
#define SUPERSTABLE_ELEMENT_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace superstable {

/// Elements of a ground set are dense integer ids 0..n-1.
using Element = int;

/// Immutable-by-convention subset of a fixed-size ground set, stored as a
/// bitset. All set arithmetic is exact; mixing sets over different ground
/// sizes is an error.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet empty(std::size_t universe) { return ElementSet(universe); }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t e = 0; e < universe; ++e) s.insert(static_cast<Element>(e));
    return s;
  }

  static ElementSet of(std::size_t universe, std::initializer_list<Element> elems) {
    ElementSet s(universe);
    for (Element e : elems) s.insert(e);
    return s;
  }

  /// Builds a set from the low bits of a mask; requires universe <= 64.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("from_mask: universe exceeds 64");
    ElementSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask & low_mask(universe);
    return s;
  }

  std::uint64_t to_mask() const {
    if (universe_ > 64) throw std::logic_error("to_mask: universe exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::size_t universe() const { return universe_; }

  bool contains(Element e) const {
    check_id(e);
    return (words_[static_cast<std::size_t>(e) / 64] >> (static_cast<std::size_t>(e) % 64)) & 1u;
  }

  void insert(Element e) {
    check_id(e);
    words_[static_cast<std::size_t>(e) / 64] |= (std::uint64_t{1} << (static_cast<std::size_t>(e) % 64));
  }

  void erase(Element e) {
    check_id(e);
    words_[static_cast<std::size_t>(e) / 64] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(e) % 64));
  }

  ElementSet with(Element e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }

  ElementSet without(Element e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  ElementSet& operator-=(const ElementSet& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

  /// Members in ascending id order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int bit = std::countr_zero(w);
        out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Smallest member, or -1 when empty.
  Element first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return -1;
  }

  std::string to_string() const {
    std::string out = "{";
    bool sep = false;
    for (Element e : elements()) {
      if (sep) out += ", ";
      out += std::to_string(e);
      sep = true;
    }
    out += "}";
    return out;
  }

 private:
  static std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  void check_id(Element e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= universe_)
      throw std::out_of_range("element id " + std::to_string(e) + " outside ground set of size " +
                              std::to_string(universe_));
  }

  void check_compatible(const ElementSet& other) const {
    if (universe_ != other.universe_)
      throw std::invalid_argument("element sets over different ground sets");
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Orders sets by cardinality, then lexicographically on their sorted
/// element lists. Used wherever enumeration output must be canonical.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const std::size_t na = a.size(), nb = b.size();
  if (na != nb) return na < nb;
  return a.elements() < b.elements();
}

}  // namespace superstable

#endif  // SUPERSTABLE_ELEMENT_SET_HPP
