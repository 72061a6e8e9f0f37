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

#ifndef SUPERSTABLE_MATROID_KINDS_HPP
#define SUPERSTABLE_MATROID_KINDS_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superstable/element_set.hpp"
#include "superstable/matroid.hpp"

namespace superstable {

/// Independent iff |I| <= k.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(std::size_t universe, std::size_t max_size)
      : ground_(ElementSet::full(universe)), max_size_(max_size) {}

  std::size_t universe_size() const override { return ground_.universe(); }
  const ElementSet& ground() const override { return ground_; }
  std::size_t max_size() const { return max_size_; }

 protected:
  bool check_independent(const ElementSet& set) const override {
    return set.size() <= max_size_;
  }

 private:
  ElementSet ground_;
  std::size_t max_size_;
};

/// Independent iff each block holds at most its capacity. Blocks must be
/// disjoint; elements outside every block are unconstrained.
class PartitionMatroid final : public Matroid {
 public:
  struct Block {
    ElementSet members;
    std::size_t capacity;
  };

  PartitionMatroid(std::size_t universe, std::vector<Block> blocks)
      : ground_(ElementSet::full(universe)), blocks_(std::move(blocks)) {
    ElementSet seen(universe);
    for (const Block& b : blocks_) {
      if (b.members.universe() != universe)
        throw std::invalid_argument("partition matroid: block over wrong ground set");
      if (b.members.intersects(seen))
        throw std::invalid_argument("partition matroid: blocks overlap");
      seen |= b.members;
    }
  }

  std::size_t universe_size() const override { return ground_.universe(); }
  const ElementSet& ground() const override { return ground_; }
  const std::vector<Block>& blocks() const { return blocks_; }

 protected:
  bool check_independent(const ElementSet& set) const override {
    for (const Block& b : blocks_) {
      if ((set & b.members).size() > b.capacity) return false;
    }
    return true;
  }

 private:
  ElementSet ground_;
  std::vector<Block> blocks_;
};

/// Independent iff each family set holds at most its capacity. The family
/// must be laminar: any two sets are disjoint or nested.
class LaminarMatroid final : public Matroid {
 public:
  struct Constraint {
    ElementSet members;
    std::size_t capacity;
  };

  LaminarMatroid(std::size_t universe, std::vector<Constraint> sets)
      : ground_(ElementSet::full(universe)), sets_(std::move(sets)) {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (sets_[i].members.universe() != universe)
        throw std::invalid_argument("laminar matroid: set over wrong ground set");
      for (std::size_t j = i + 1; j < sets_.size(); ++j) {
        const ElementSet& a = sets_[i].members;
        const ElementSet& b = sets_[j].members;
        if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a))
          throw std::invalid_argument("laminar matroid: family is not laminar (sets " +
                                      std::to_string(i) + " and " + std::to_string(j) +
                                      " overlap without nesting)");
      }
    }
  }

  std::size_t universe_size() const override { return ground_.universe(); }
  const ElementSet& ground() const override { return ground_; }
  const std::vector<Constraint>& constraints() const { return sets_; }

 protected:
  bool check_independent(const ElementSet& set) const override {
    for (const Constraint& c : sets_) {
      if ((set & c.members).size() > c.capacity) return false;
    }
    return true;
  }

 private:
  ElementSet ground_;
  std::vector<Constraint> sets_;
};

/// Cycle matroid of a multigraph: element i is edge i, independent iff the
/// edge set is a forest. Self-loops are rejected so singletons stay
/// independent.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(std::size_t vertices, std::vector<std::pair<int, int>> edges)
      : ground_(ElementSet::full(edges.size())), vertices_(vertices), edges_(std::move(edges)) {
    for (const auto& [u, v] : edges_) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertices_ ||
          static_cast<std::size_t>(v) >= vertices_)
        throw std::invalid_argument("graphic matroid: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("graphic matroid: self-loop edge");
    }
  }

  std::size_t universe_size() const override { return ground_.universe(); }
  const ElementSet& ground() const override { return ground_; }
  std::size_t vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 protected:
  bool check_independent(const ElementSet& set) const override {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (Element e : set.elements()) {
      int a = find(edges_[static_cast<std::size_t>(e)].first);
      int b = find(edges_[static_cast<std::size_t>(e)].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }

 private:
  ElementSet ground_;
  std::size_t vertices_;
  std::vector<std::pair<int, int>> edges_;
};

/// Column matroid of a matrix over GF(p): element i is column i, independent
/// iff the columns are linearly independent. Exact modular arithmetic, p a
/// prime below 2^16. Zero columns are rejected so singletons stay
/// independent.
class PrimeFieldLinearMatroid final : public Matroid {
 public:
  /// matrix is row-major, rows x columns; columns == universe size.
  PrimeFieldLinearMatroid(std::uint32_t prime, std::size_t rows, std::size_t columns,
                          std::vector<std::uint32_t> matrix)
      : ground_(ElementSet::full(columns)),
        prime_(prime),
        rows_(rows),
        matrix_(std::move(matrix)) {
    if (prime_ < 2 || prime_ >= (1u << 16) || !is_prime(prime_))
      throw std::invalid_argument("linear matroid: modulus must be a prime below 2^16");
    if (matrix_.size() != rows_ * columns)
      throw std::invalid_argument("linear matroid: matrix size mismatch");
    for (std::uint32_t v : matrix_) {
      if (v >= prime_) throw std::invalid_argument("linear matroid: entry not reduced mod p");
    }
    for (std::size_t c = 0; c < columns; ++c) {
      bool nonzero = false;
      for (std::size_t r = 0; r < rows_; ++r) nonzero = nonzero || matrix_[r * columns + c] != 0;
      if (!nonzero)
        throw std::invalid_argument("linear matroid: zero column " + std::to_string(c));
    }
  }

  std::size_t universe_size() const override { return ground_.universe(); }
  const ElementSet& ground() const override { return ground_; }
  std::uint32_t prime() const { return prime_; }
  std::size_t rows() const { return rows_; }
  const std::vector<std::uint32_t>& matrix() const { return matrix_; }

 protected:
  bool check_independent(const ElementSet& set) const override {
    const std::vector<Element> cols = set.elements();
    if (cols.size() > rows_) return false;
    // Gaussian elimination on the selected columns, stored column-major.
    const std::size_t n = ground_.universe();
    std::vector<std::uint32_t> work(cols.size() * rows_);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t r = 0; r < rows_; ++r)
        work[j * rows_ + r] = matrix_[r * n + static_cast<std::size_t>(cols[j])];

    std::size_t pivot_row = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::size_t r = pivot_row;
      while (r < rows_ && work[j * rows_ + r] == 0) ++r;
      if (r == rows_) return false;
      if (r != pivot_row) {
        for (std::size_t jj = j; jj < cols.size(); ++jj)
          std::swap(work[jj * rows_ + r], work[jj * rows_ + pivot_row]);
      }
      const std::uint64_t inv = mod_inverse(work[j * rows_ + pivot_row]);
      for (std::size_t rr = pivot_row + 1; rr < rows_; ++rr) {
        const std::uint64_t factor = (work[j * rows_ + rr] * inv) % prime_;
        if (factor == 0) continue;
        for (std::size_t jj = j; jj < cols.size(); ++jj) {
          std::uint64_t v = work[jj * rows_ + rr] + prime_ -
                            (factor * work[jj * rows_ + pivot_row]) % prime_;
          work[jj * rows_ + rr] = static_cast<std::uint32_t>(v % prime_);
        }
      }
      ++pivot_row;
    }
    return true;
  }

 private:
  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  std::uint64_t mod_inverse(std::uint64_t a) const {
    // Fermat: a^(p-2) mod p.
    std::uint64_t result = 1, base = a % prime_, exp = prime_ - 2;
    while (exp) {
      if (exp & 1) result = result * base % prime_;
      base = base * base % prime_;
      exp >>= 1;
    }
    return result;
  }

  ElementSet ground_;
  std::uint32_t prime_;
  std::size_t rows_;
  std::vector<std::uint32_t> matrix_;
};

}  // namespace superstable

#endif  // SUPERSTABLE_MATROID_KINDS_HPP
