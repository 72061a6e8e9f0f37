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

// Test-only helpers: exhaustive subset oracles kept independent of the
// library's derived-query implementations, and a small zoo of concrete
// matroids for property checks.

#ifndef SUPERSTABLE_TESTS_TEST_UTIL_HPP
#define SUPERSTABLE_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superstable/superstable.hpp"

namespace test_util {

using namespace superstable;

inline std::string read_fixture(const std::string& name) {
  std::string path = std::string(FIXTURES_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// All subsets of the ground set, as masks.
inline std::uint64_t subset_count(std::size_t n) { return std::uint64_t{1} << n; }

inline ElementSet mask_set(std::size_t n, std::uint64_t mask) {
  return ElementSet::from_mask(n, mask);
}

/// All circuits (minimal dependent sets) found by exhaustive subset search.
inline std::vector<ElementSet> all_circuits_exhaustive(const Matroid& m) {
  const std::size_t n = m.universe_size();
  const std::uint64_t ground_mask = m.ground().to_mask();
  std::vector<ElementSet> circuits;
  for (std::uint64_t mask = 1; mask < subset_count(n); ++mask) {
    if ((mask & ground_mask) != mask) continue;
    ElementSet candidate = mask_set(n, mask);
    if (m.is_independent(candidate)) continue;
    bool minimal = true;
    for (Element e : candidate.elements()) {
      if (!m.is_independent(candidate.without(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits.push_back(std::move(candidate));
  }
  return circuits;
}

/// Rank by exhaustive search over independent subsets of X.
inline std::size_t rank_exhaustive(const Matroid& m, const ElementSet& X) {
  const std::size_t n = m.universe_size();
  const std::uint64_t x_mask = X.to_mask();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < subset_count(n); ++mask) {
    if ((mask & x_mask) != mask) continue;
    ElementSet candidate = mask_set(n, mask);
    if (m.is_independent(candidate)) best = std::max(best, candidate.size());
  }
  return best;
}

/// Whether some circuit C satisfies e in C, C subseteq F, and pred(C).
template <typename Pred>
bool exists_circuit_through(const Matroid& m, const ElementSet& F, Element e, Pred pred) {
  const std::size_t n = m.universe_size();
  const std::uint64_t f_mask = F.to_mask();
  for (std::uint64_t mask = 1; mask < subset_count(n); ++mask) {
    if ((mask & f_mask) != mask) continue;
    ElementSet candidate = mask_set(n, mask);
    if (!candidate.contains(e)) continue;
    if (m.is_independent(candidate)) continue;
    bool minimal = true;
    for (Element f : candidate.elements()) {
      if (!m.is_independent(candidate.without(f))) {
        minimal = false;
        break;
      }
    }
    if (minimal && pred(candidate)) return true;
  }
  return false;
}

struct NamedMatroid {
  std::string name;
  MatroidPtr matroid;
};

/// Small concrete matroids covering all five kinds, for axiom and
/// derived-query property tests. Ground sets stay at or below 7 elements.
inline std::vector<NamedMatroid> matroid_zoo() {
  std::vector<NamedMatroid> zoo;
  zoo.push_back({"uniform(5,2)", std::make_shared<UniformMatroid>(5, 2)});
  zoo.push_back({"uniform(4,4)", std::make_shared<UniformMatroid>(4, 4)});
  zoo.push_back({"uniform(6,3)", std::make_shared<UniformMatroid>(6, 3)});

  {
    std::vector<PartitionMatroid::Block> blocks;
    blocks.push_back({ElementSet::of(5, {0, 1}), 1});
    blocks.push_back({ElementSet::of(5, {2, 3, 4}), 2});
    zoo.push_back({"partition(2|1,3|2)", std::make_shared<PartitionMatroid>(5, blocks)});
  }
  {
    std::vector<PartitionMatroid::Block> blocks;
    blocks.push_back({ElementSet::of(6, {0, 1, 2}), 1});
    blocks.push_back({ElementSet::of(6, {3, 4}), 1});
    zoo.push_back({"partition(3|1,2|1,free)", std::make_shared<PartitionMatroid>(6, blocks)});
  }
  {
    std::vector<LaminarMatroid::Constraint> sets;
    sets.push_back({ElementSet::of(6, {0, 1, 2, 3, 4, 5}), 3});
    sets.push_back({ElementSet::of(6, {0, 1, 2}), 2});
    sets.push_back({ElementSet::of(6, {0, 1}), 1});
    sets.push_back({ElementSet::of(6, {4, 5}), 1});
    zoo.push_back({"laminar(nested)", std::make_shared<LaminarMatroid>(6, sets)});
  }
  {
    // Triangle plus a pendant edge and a parallel pair.
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {2, 3}};
    zoo.push_back({"graphic(triangle+)", std::make_shared<GraphicMatroid>(4, edges)});
  }
  {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}};
    zoo.push_back({"graphic(K4)", std::make_shared<GraphicMatroid>(4, edges)});
  }
  {
    // Columns over GF(2): e2 = e0 + e1, plus an independent tail.
    std::vector<std::uint32_t> matrix = {
        1, 0, 1, 0, 1,  //
        0, 1, 1, 0, 0,  //
        0, 0, 0, 1, 1,  //
    };
    zoo.push_back({"linear(gf2)", std::make_shared<PrimeFieldLinearMatroid>(2, 3, 5, matrix)});
  }
  {
    std::vector<std::uint32_t> matrix = {
        1, 2, 0, 1,  //
        0, 1, 1, 2,  //
    };
    zoo.push_back({"linear(gf3)", std::make_shared<PrimeFieldLinearMatroid>(3, 2, 4, matrix)});
  }
  return zoo;
}

/// Deterministic corpus of solver instances spanning all kind pairs and tie
/// densities. max_elements bounds |E|.
inline std::vector<InstanceDoc> instance_corpus(std::size_t count, std::size_t max_elements,
                                                std::uint64_t seed_base = 1000,
                                                double fixed_tie_density = -1) {
  static constexpr double densities[] = {0.0, 0.3, 0.7, 1.0};
  std::vector<InstanceDoc> docs;
  docs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorConfig config;
    config.seed = seed_base + i;
    config.min_elements = 0;
    config.max_elements = max_elements;
    config.tie_density = fixed_tie_density >= 0 ? fixed_tie_density : densities[i % 4];
    MatroidKind kind_d = static_cast<MatroidKind>(i % 5);
    MatroidKind kind_h = static_cast<MatroidKind>((i / 5) % 5);
    docs.push_back(generate_with_kinds(config, kind_d, kind_h));
  }
  return docs;
}

}  // namespace test_util

#endif  // SUPERSTABLE_TESTS_TEST_UTIL_HPP
