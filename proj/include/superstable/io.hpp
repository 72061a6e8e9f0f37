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

#ifndef SUPERSTABLE_IO_HPP
#define SUPERSTABLE_IO_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "superstable/instance.hpp"
#include "superstable/matroid_kinds.hpp"
#include "superstable/spa.hpp"

namespace superstable {

/// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct UniformSpec {
  std::size_t rank = 0;
  friend bool operator==(const UniformSpec&, const UniformSpec&) = default;
};
struct PartitionSpec {
  std::vector<std::pair<std::vector<Element>, std::size_t>> blocks;  // (members, cap)
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};
struct LaminarSpec {
  std::vector<std::pair<std::vector<Element>, std::size_t>> sets;
  friend bool operator==(const LaminarSpec&, const LaminarSpec&) = default;
};
struct GraphicSpec {
  std::size_t vertices = 0;
  std::vector<std::pair<int, int>> edges;  // edge i is element i
  friend bool operator==(const GraphicSpec&, const GraphicSpec&) = default;
};
struct LinearSpec {
  std::uint32_t prime = 2;
  std::size_t rows = 0;
  std::vector<std::uint32_t> matrix;  // row-major, rows x |E|
  friend bool operator==(const LinearSpec&, const LinearSpec&) = default;
};

/// Serializable matroid descriptor; builds the concrete oracle on demand.
struct MatroidSpec {
  using Uniform = UniformSpec;
  using Partition = PartitionSpec;
  using Laminar = LaminarSpec;
  using Graphic = GraphicSpec;
  using Linear = LinearSpec;

  std::variant<UniformSpec, PartitionSpec, LaminarSpec, GraphicSpec, LinearSpec> descriptor;

  MatroidPtr build(std::size_t ground_size) const {
    if (const auto* u = std::get_if<Uniform>(&descriptor))
      return std::make_shared<UniformMatroid>(ground_size, u->rank);
    if (const auto* p = std::get_if<Partition>(&descriptor)) {
      std::vector<PartitionMatroid::Block> blocks;
      for (const auto& [members, cap] : p->blocks) {
        ElementSet set(ground_size);
        for (Element e : members) set.insert(e);
        blocks.push_back({std::move(set), cap});
      }
      return std::make_shared<PartitionMatroid>(ground_size, std::move(blocks));
    }
    if (const auto* l = std::get_if<Laminar>(&descriptor)) {
      std::vector<LaminarMatroid::Constraint> sets;
      for (const auto& [members, cap] : l->sets) {
        ElementSet set(ground_size);
        for (Element e : members) set.insert(e);
        sets.push_back({std::move(set), cap});
      }
      return std::make_shared<LaminarMatroid>(ground_size, std::move(sets));
    }
    if (const auto* g = std::get_if<Graphic>(&descriptor)) {
      if (g->edges.size() != ground_size)
        throw std::invalid_argument("graphic descriptor: edge count must equal ground size");
      return std::make_shared<GraphicMatroid>(g->vertices, g->edges);
    }
    const auto& lin = std::get<Linear>(descriptor);
    return std::make_shared<PrimeFieldLinearMatroid>(lin.prime, lin.rows, ground_size, lin.matrix);
  }

  friend bool operator==(const MatroidSpec&, const MatroidSpec&) = default;
};

/// Parsed form of an instance file: everything needed to rebuild the text
/// document or the in-memory Instance.
struct InstanceDoc {
  std::size_t ground_size = 0;
  MatroidSpec matroid_d;
  MatroidSpec matroid_h;
  std::vector<int> ranks_d;
  std::vector<int> ranks_h;

  Instance build() const {
    Instance inst;
    inst.ground_size = ground_size;
    inst.matroid_d = matroid_d.build(ground_size);
    inst.matroid_h = matroid_h.build(ground_size);
    inst.order_d = WeakOrder(ranks_d);
    inst.order_h = WeakOrder(ranks_h);
    inst.validate();
    return inst;
  }

  friend bool operator==(const InstanceDoc&, const InstanceDoc&) = default;
};

namespace io_detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

inline long parse_int(const Line& line, const std::string& tok) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected an integer, got '" + tok + "'");
  }
}

inline long parse_nonneg(const Line& line, const std::string& tok) {
  long v = parse_int(line, tok);
  if (v < 0) throw ParseError(line.number, "expected a non-negative integer, got '" + tok + "'");
  return v;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }

  const Line& peek() const {
    if (done()) throw ParseError(last_line() + 1, "unexpected end of document");
    return lines_[pos_];
  }

  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }

  std::size_t last_line() const {
    return lines_.empty() ? 0 : lines_.back().number;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

inline MatroidSpec parse_matroid_body(Cursor& cur, std::size_t ground_size) {
  const Line& kind_line = cur.next();
  if (kind_line.tokens.size() != 2 || kind_line.tokens[0] != "kind")
    throw ParseError(kind_line.number, "expected 'kind <name>'");
  const std::string& kind = kind_line.tokens[1];
  MatroidSpec spec;

  auto expect_end = [&](const Line& l) {
    if (l.tokens.size() != 1 || l.tokens[0] != "end")
      throw ParseError(l.number, "expected 'end'");
  };

  if (kind == "uniform") {
    const Line& l = cur.next();
    if (l.tokens.size() != 2 || l.tokens[0] != "rank")
      throw ParseError(l.number, "expected 'rank <k>'");
    spec.descriptor = MatroidSpec::Uniform{static_cast<std::size_t>(parse_nonneg(l, l.tokens[1]))};
    expect_end(cur.next());
  } else if (kind == "partition" || kind == "laminar") {
    const std::string member_kw = kind == "partition" ? "block" : "set";
    std::vector<std::pair<std::vector<Element>, std::size_t>> groups;
    while (true) {
      const Line& l = cur.next();
      if (l.tokens.size() == 1 && l.tokens[0] == "end") break;
      if (l.tokens.size() < 2 || l.tokens[0] != member_kw)
        throw ParseError(l.number, "expected '" + member_kw + " <cap> <elements...>' or 'end'");
      std::size_t cap = static_cast<std::size_t>(parse_nonneg(l, l.tokens[1]));
      std::vector<Element> members;
      for (std::size_t i = 2; i < l.tokens.size(); ++i) {
        long e = parse_nonneg(l, l.tokens[i]);
        if (static_cast<std::size_t>(e) >= ground_size)
          throw ParseError(l.number, "element id " + std::to_string(e) + " out of range");
        members.push_back(static_cast<Element>(e));
      }
      groups.emplace_back(std::move(members), cap);
    }
    if (kind == "partition")
      spec.descriptor = MatroidSpec::Partition{std::move(groups)};
    else
      spec.descriptor = MatroidSpec::Laminar{std::move(groups)};
  } else if (kind == "graphic") {
    const Line& vl = cur.next();
    if (vl.tokens.size() != 2 || vl.tokens[0] != "vertices")
      throw ParseError(vl.number, "expected 'vertices <n>'");
    MatroidSpec::Graphic g;
    g.vertices = static_cast<std::size_t>(parse_nonneg(vl, vl.tokens[1]));
    for (std::size_t e = 0; e < ground_size; ++e) {
      const Line& l = cur.next();
      if (l.tokens.size() != 3 || l.tokens[0] != "edge")
        throw ParseError(l.number, "expected 'edge <u> <v>' (one per element)");
      g.edges.emplace_back(static_cast<int>(parse_nonneg(l, l.tokens[1])),
                           static_cast<int>(parse_nonneg(l, l.tokens[2])));
    }
    spec.descriptor = std::move(g);
    expect_end(cur.next());
  } else if (kind == "linear") {
    const Line& pl = cur.next();
    if (pl.tokens.size() != 2 || pl.tokens[0] != "prime")
      throw ParseError(pl.number, "expected 'prime <p>'");
    const Line& rl = cur.next();
    if (rl.tokens.size() != 2 || rl.tokens[0] != "rows")
      throw ParseError(rl.number, "expected 'rows <r>'");
    MatroidSpec::Linear lin;
    lin.prime = static_cast<std::uint32_t>(parse_nonneg(pl, pl.tokens[1]));
    lin.rows = static_cast<std::size_t>(parse_nonneg(rl, rl.tokens[1]));
    for (std::size_t r = 0; r < lin.rows; ++r) {
      const Line& l = cur.next();
      if (l.tokens.size() != ground_size + 1 || l.tokens[0] != "row")
        throw ParseError(l.number, "expected 'row' with " + std::to_string(ground_size) +
                                       " entries");
      for (std::size_t c = 0; c < ground_size; ++c)
        lin.matrix.push_back(static_cast<std::uint32_t>(parse_nonneg(l, l.tokens[c + 1])));
    }
    spec.descriptor = std::move(lin);
    expect_end(cur.next());
  } else {
    throw ParseError(kind_line.number, "unknown matroid kind '" + kind + "'");
  }
  return spec;
}

inline std::vector<int> parse_order_line(const Line& l, std::size_t ground_size) {
  if (l.tokens.size() != ground_size + 2)
    throw ParseError(l.number,
                     "order line must carry " + std::to_string(ground_size) + " ranks");
  std::vector<int> ranks;
  for (std::size_t i = 2; i < l.tokens.size(); ++i)
    ranks.push_back(static_cast<int>(parse_int(l, l.tokens[i])));
  return ranks;
}

}  // namespace io_detail

inline constexpr const char* kFormatName = "ssci";
inline constexpr int kFormatVersion = 1;

/// Parses the versioned instance text format. Errors carry line numbers;
/// semantic validation (singleton independence, laminarity, disjointness)
/// happens when the document is built.
inline InstanceDoc parse_instance(const std::string& text) {
  io_detail::Cursor cur(io_detail::tokenize(text));

  const io_detail::Line& header = cur.next();
  if (header.tokens.size() != 2 || header.tokens[0] != kFormatName ||
      io_detail::parse_int(header, header.tokens[1]) != kFormatVersion)
    throw ParseError(header.number, std::string("expected header '") + kFormatName + " " +
                                        std::to_string(kFormatVersion) + "'");

  const io_detail::Line& el = cur.next();
  if (el.tokens.size() != 2 || el.tokens[0] != "elements")
    throw ParseError(el.number, "expected 'elements <n>'");
  InstanceDoc doc;
  doc.ground_size = static_cast<std::size_t>(io_detail::parse_nonneg(el, el.tokens[1]));

  for (Side side : {Side::D, Side::H}) {
    const io_detail::Line& ml = cur.next();
    if (ml.tokens.size() != 2 || ml.tokens[0] != "matroid" || ml.tokens[1] != side_name(side))
      throw ParseError(ml.number, std::string("expected 'matroid ") + side_name(side) + "'");
    MatroidSpec spec = io_detail::parse_matroid_body(cur, doc.ground_size);
    (side == Side::D ? doc.matroid_d : doc.matroid_h) = std::move(spec);
  }

  for (Side side : {Side::D, Side::H}) {
    const io_detail::Line& ol = cur.next();
    if (ol.tokens.size() < 2 || ol.tokens[0] != "order" || ol.tokens[1] != side_name(side))
      throw ParseError(ol.number, std::string("expected 'order ") + side_name(side) + " <ranks>'");
    (side == Side::D ? doc.ranks_d : doc.ranks_h) =
        io_detail::parse_order_line(ol, doc.ground_size);
  }

  if (!cur.done())
    throw ParseError(cur.peek().number, "trailing content after instance");
  return doc;
}

inline std::string serialize(const InstanceDoc& doc) {
  std::ostringstream out;
  out << kFormatName << " " << kFormatVersion << "\n";
  out << "elements " << doc.ground_size << "\n";
  for (Side side : {Side::D, Side::H}) {
    const MatroidSpec& spec = side == Side::D ? doc.matroid_d : doc.matroid_h;
    out << "matroid " << side_name(side) << "\n";
    if (const auto* u = std::get_if<MatroidSpec::Uniform>(&spec.descriptor)) {
      out << "kind uniform\nrank " << u->rank << "\n";
    } else if (const auto* p = std::get_if<MatroidSpec::Partition>(&spec.descriptor)) {
      out << "kind partition\n";
      for (const auto& [members, cap] : p->blocks) {
        out << "block " << cap;
        for (Element e : members) out << " " << e;
        out << "\n";
      }
    } else if (const auto* l = std::get_if<MatroidSpec::Laminar>(&spec.descriptor)) {
      out << "kind laminar\n";
      for (const auto& [members, cap] : l->sets) {
        out << "set " << cap;
        for (Element e : members) out << " " << e;
        out << "\n";
      }
    } else if (const auto* g = std::get_if<MatroidSpec::Graphic>(&spec.descriptor)) {
      out << "kind graphic\nvertices " << g->vertices << "\n";
      for (const auto& [u2, v2] : g->edges) out << "edge " << u2 << " " << v2 << "\n";
    } else {
      const auto& lin = std::get<MatroidSpec::Linear>(spec.descriptor);
      out << "kind linear\nprime " << lin.prime << "\nrows " << lin.rows << "\n";
      for (std::size_t r = 0; r < lin.rows; ++r) {
        out << "row";
        for (std::size_t c = 0; c < doc.ground_size; ++c)
          out << " " << lin.matrix[r * doc.ground_size + c];
        out << "\n";
      }
    }
    out << "end\n";
  }
  for (Side side : {Side::D, Side::H}) {
    out << "order " << side_name(side);
    for (int r : (side == Side::D ? doc.ranks_d : doc.ranks_h)) out << " " << r;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Deterministic instance generation.

/// Small splitmix-based generator so identical seeds yield identical
/// instances on every platform (std distributions are not portable).
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  std::size_t in_range(std::size_t lo, std::size_t hi) {  // inclusive
    return lo + static_cast<std::size_t>(below(hi - lo + 1));
  }

  bool chance(double p) { return static_cast<double>(next() >> 11) / 9007199254740992.0 < p; }

 private:
  std::uint64_t state_;
};

enum class MatroidKind : int { Uniform = 0, Partition, Laminar, Graphic, Linear };

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t min_elements = 0;
  std::size_t max_elements = 9;
  /// Relative weight per matroid kind, indexed by MatroidKind.
  std::array<double, 5> kind_weights = {1, 1, 1, 1, 1};
  /// Probability that two adjacent rank positions merge into a tie.
  double tie_density = 0.3;
};

namespace io_detail {

inline MatroidKind pick_kind(DeterministicRng& rng, const std::array<double, 5>& weights) {
  double total = 0;
  for (double w : weights) {
    if (w < 0) throw std::invalid_argument("generator: negative kind weight");
    total += w;
  }
  if (total <= 0) throw std::invalid_argument("generator: all kind weights are zero");
  double target = static_cast<double>(rng.next() >> 11) / 9007199254740992.0 * total;
  for (int k = 0; k < 5; ++k) {
    target -= weights[static_cast<std::size_t>(k)];
    if (target < 0) return static_cast<MatroidKind>(k);
  }
  return MatroidKind::Linear;
}

inline std::vector<Element> shuffled_elements(DeterministicRng& rng, std::size_t n) {
  std::vector<Element> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<Element>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(ids[i - 1], ids[j]);
  }
  return ids;
}

inline void add_laminar_children(DeterministicRng& rng, std::vector<Element> pool,
                                 std::vector<std::pair<std::vector<Element>, std::size_t>>* sets) {
  if (pool.size() < 2) return;
  // Split into two parts; each part may become a capped set and recurse.
  std::size_t cut = rng.in_range(1, pool.size() - 1);
  std::vector<Element> left(pool.begin(), pool.begin() + static_cast<long>(cut));
  std::vector<Element> right(pool.begin() + static_cast<long>(cut), pool.end());
  for (auto& part : {left, right}) {
    if (part.size() >= 2 && rng.chance(0.7)) {
      std::vector<Element> sorted = part;
      std::sort(sorted.begin(), sorted.end());
      sets->emplace_back(std::move(sorted), rng.in_range(1, part.size()));
      add_laminar_children(rng, part, sets);
    }
  }
}

inline MatroidSpec generate_matroid(DeterministicRng& rng, MatroidKind kind, std::size_t n) {
  MatroidSpec spec;
  switch (kind) {
    case MatroidKind::Uniform: {
      spec.descriptor = MatroidSpec::Uniform{n == 0 ? 0 : rng.in_range(1, n)};
      break;
    }
    case MatroidKind::Partition: {
      MatroidSpec::Partition part;
      std::vector<Element> pool = shuffled_elements(rng, n);
      std::size_t at = 0;
      while (at < n) {
        std::size_t len = rng.in_range(1, n - at);
        std::vector<Element> members(pool.begin() + static_cast<long>(at),
                                     pool.begin() + static_cast<long>(at + len));
        std::sort(members.begin(), members.end());
        part.blocks.emplace_back(std::move(members), rng.in_range(1, len));
        at += len;
      }
      spec.descriptor = std::move(part);
      break;
    }
    case MatroidKind::Laminar: {
      MatroidSpec::Laminar lam;
      if (n > 0) {
        std::vector<Element> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Element>(i);
        lam.sets.emplace_back(all, rng.in_range(1, n));
        add_laminar_children(rng, shuffled_elements(rng, n), &lam.sets);
      }
      spec.descriptor = std::move(lam);
      break;
    }
    case MatroidKind::Graphic: {
      MatroidSpec::Graphic g;
      g.vertices = n == 0 ? 1 : rng.in_range(2, n + 1);
      for (std::size_t e = 0; e < n; ++e) {
        int u = static_cast<int>(rng.below(g.vertices));
        int v = static_cast<int>(rng.below(g.vertices - 1));
        if (v >= u) ++v;  // no self-loops
        g.edges.emplace_back(u, v);
      }
      spec.descriptor = std::move(g);
      break;
    }
    case MatroidKind::Linear: {
      static constexpr std::array<std::uint32_t, 4> primes = {2, 3, 5, 7};
      MatroidSpec::Linear lin;
      lin.prime = primes[static_cast<std::size_t>(rng.below(primes.size()))];
      lin.rows = n == 0 ? 1 : rng.in_range(1, n);
      lin.matrix.assign(lin.rows * n, 0);
      for (std::size_t c = 0; c < n; ++c) {
        bool nonzero = false;
        for (std::size_t r = 0; r < lin.rows; ++r) {
          std::uint32_t v = static_cast<std::uint32_t>(rng.below(lin.prime));
          lin.matrix[r * n + c] = v;
          nonzero = nonzero || v != 0;
        }
        if (!nonzero) {
          // Repair the column so the singleton stays independent.
          std::size_t r = static_cast<std::size_t>(rng.below(lin.rows));
          lin.matrix[r * n + c] = 1 + static_cast<std::uint32_t>(rng.below(lin.prime - 1));
        }
      }
      spec.descriptor = std::move(lin);
      break;
    }
  }
  return spec;
}

inline std::vector<int> generate_ranks(DeterministicRng& rng, std::size_t n, double tie_density) {
  std::vector<Element> by_pref = shuffled_elements(rng, n);
  std::vector<int> ranks(n, 0);
  int bucket = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && !rng.chance(tie_density)) ++bucket;
    ranks[static_cast<std::size_t>(by_pref[i])] = bucket;
  }
  return ranks;
}

}  // namespace io_detail

/// Deterministic pseudo-random instance: same seed and config, same
/// document, byte for byte.
inline InstanceDoc generate(const GeneratorConfig& config) {
  if (config.min_elements > config.max_elements)
    throw std::invalid_argument("generator: empty element-count range");
  DeterministicRng rng(config.seed ^ 0x5f3d1e2b9c8a7766ull);
  InstanceDoc doc;
  doc.ground_size = rng.in_range(config.min_elements, config.max_elements);
  doc.matroid_d = io_detail::generate_matroid(
      rng, io_detail::pick_kind(rng, config.kind_weights), doc.ground_size);
  doc.matroid_h = io_detail::generate_matroid(
      rng, io_detail::pick_kind(rng, config.kind_weights), doc.ground_size);
  doc.ranks_d = io_detail::generate_ranks(rng, doc.ground_size, config.tie_density);
  doc.ranks_h = io_detail::generate_ranks(rng, doc.ground_size, config.tie_density);
  return doc;
}

/// Like generate(), but with the matroid kind of each side pinned. Used to
/// sweep kind combinations systematically.
inline InstanceDoc generate_with_kinds(const GeneratorConfig& config, MatroidKind kind_d,
                                       MatroidKind kind_h) {
  if (config.min_elements > config.max_elements)
    throw std::invalid_argument("generator: empty element-count range");
  DeterministicRng rng(config.seed ^ 0x5f3d1e2b9c8a7766ull);
  InstanceDoc doc;
  doc.ground_size = rng.in_range(config.min_elements, config.max_elements);
  doc.matroid_d = io_detail::generate_matroid(rng, kind_d, doc.ground_size);
  doc.matroid_h = io_detail::generate_matroid(rng, kind_h, doc.ground_size);
  doc.ranks_d = io_detail::generate_ranks(rng, doc.ground_size, config.tie_density);
  doc.ranks_h = io_detail::generate_ranks(rng, doc.ground_size, config.tie_density);
  return doc;
}

// ---------------------------------------------------------------------------
// SPA text format: header "n m q", project owners, capacities, then tied
// preference lists with parenthesized ties.

/// Parses the SPA text format:
///   line 1: n m q                (students, lecturers, projects)
///   line 2: owners <q ints>      (1-based lecturer per project)
///   line 3: pcap <q ints>
///   line 4: lcap <m ints>
///   then n lines:  s<i>: <tied project list>   e.g.  s1: p1 (p2 p3)
///   then m lines:  l<j>: <tied student list>   e.g.  l1: (s1 s2) s3
/// All agent ids in lists are 1-based; a list may be empty.
inline SpaInstance parse_spa(const std::string& text) {
  std::vector<io_detail::Line> lines = io_detail::tokenize(text);
  io_detail::Cursor cur(lines);

  const io_detail::Line& header = cur.next();
  if (header.tokens.size() != 3) throw ParseError(header.number, "expected 'n m q' header");
  SpaInstance spa;
  spa.num_students = static_cast<int>(io_detail::parse_nonneg(header, header.tokens[0]));
  spa.num_lecturers = static_cast<int>(io_detail::parse_nonneg(header, header.tokens[1]));
  spa.num_projects = static_cast<int>(io_detail::parse_nonneg(header, header.tokens[2]));

  auto parse_counted = [&](const std::string& keyword, int count) {
    const io_detail::Line& l = cur.next();
    if (static_cast<int>(l.tokens.size()) != count + 1 || l.tokens[0] != keyword)
      throw ParseError(l.number,
                       "expected '" + keyword + "' with " + std::to_string(count) + " entries");
    std::vector<int> vals;
    for (int i = 1; i <= count; ++i)
      vals.push_back(static_cast<int>(io_detail::parse_nonneg(l, l.tokens[static_cast<std::size_t>(i)])));
    return vals;
  };

  spa.project_owner = parse_counted("owners", spa.num_projects);
  for (int& o : spa.project_owner) --o;  // to 0-based
  spa.project_capacity = parse_counted("pcap", spa.num_projects);
  spa.lecturer_capacity = parse_counted("lcap", spa.num_lecturers);

  auto parse_pref_line = [&](char agent_tag, int index, char item_tag,
                             int item_count) -> std::vector<std::vector<int>> {
    const io_detail::Line& l = cur.next();
    const std::string label = std::string(1, agent_tag) + std::to_string(index + 1) + ":";
    if (l.tokens.empty() || l.tokens[0] != label)
      throw ParseError(l.number, "expected preference line starting with '" + label + "'");
    std::vector<std::vector<int>> groups;
    bool in_tie = false;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      std::string tok = l.tokens[i];
      bool opens = false, closes = false;
      if (!tok.empty() && tok.front() == '(') {
        opens = true;
        tok.erase(tok.begin());
      }
      if (!tok.empty() && tok.back() == ')') {
        closes = true;
        tok.pop_back();
      }
      if (tok.size() < 2 || tok[0] != item_tag)
        throw ParseError(l.number, "expected '" + std::string(1, item_tag) + "<id>', got '" +
                                       l.tokens[i] + "'");
      int id = static_cast<int>(io_detail::parse_nonneg(l, tok.substr(1))) - 1;
      if (id < 0 || id >= item_count)
        throw ParseError(l.number, "id out of range in '" + l.tokens[i] + "'");
      if (opens) {
        if (in_tie) throw ParseError(l.number, "nested tie group");
        in_tie = true;
        groups.emplace_back();
      } else if (!in_tie) {
        groups.emplace_back();
      }
      groups.back().push_back(id);
      if (closes) {
        if (!in_tie) throw ParseError(l.number, "unmatched ')'");
        in_tie = false;
      }
    }
    if (in_tie) throw ParseError(l.number, "unclosed tie group");
    return groups;
  };

  for (int s = 0; s < spa.num_students; ++s)
    spa.student_prefs.push_back(parse_pref_line('s', s, 'p', spa.num_projects));
  for (int l = 0; l < spa.num_lecturers; ++l)
    spa.lecturer_prefs.push_back(parse_pref_line('l', l, 's', spa.num_students));

  if (!cur.done()) throw ParseError(cur.peek().number, "trailing content after instance");
  spa.validate();
  return spa;
}

inline std::string serialize_spa(const SpaInstance& spa) {
  std::ostringstream out;
  out << spa.num_students << " " << spa.num_lecturers << " " << spa.num_projects << "\n";
  auto emit_counted = [&](const std::string& keyword, const std::vector<int>& vals, int offset) {
    out << keyword;
    for (int v : vals) out << " " << v + offset;
    out << "\n";
  };
  emit_counted("owners", spa.project_owner, 1);
  emit_counted("pcap", spa.project_capacity, 0);
  emit_counted("lcap", spa.lecturer_capacity, 0);
  auto emit_prefs = [&](char agent_tag, char item_tag,
                        const std::vector<std::vector<std::vector<int>>>& prefs) {
    for (std::size_t a = 0; a < prefs.size(); ++a) {
      out << agent_tag << a + 1 << ":";
      for (const auto& group : prefs[a]) {
        if (group.size() == 1) {
          out << " " << item_tag << group[0] + 1;
        } else {
          out << " (";
          for (std::size_t i = 0; i < group.size(); ++i)
            out << (i ? " " : "") << item_tag << group[i] + 1;
          out << ")";
        }
      }
      out << "\n";
    }
  };
  emit_prefs('s', 'p', spa.student_prefs);
  emit_prefs('l', 's', spa.lecturer_prefs);
  return out.str();
}

struct SpaGeneratorConfig {
  std::uint64_t seed = 0;
  int max_students = 3;
  int max_lecturers = 2;
  int max_projects = 3;
  std::size_t max_pairs = 10;
  int max_project_capacity = 2;
  int max_lecturer_capacity = 3;
  double tie_density = 0.3;
  double acceptability = 0.7;  // chance a (student, project) pair is acceptable
};

/// Deterministic pseudo-random SPA instance with at most max_pairs
/// acceptable pairs.
inline SpaInstance generate_spa(const SpaGeneratorConfig& config) {
  DeterministicRng rng(config.seed ^ 0x2c4f8e1d3b5a7988ull);
  SpaInstance spa;
  spa.num_students = static_cast<int>(rng.in_range(1, static_cast<std::size_t>(config.max_students)));
  spa.num_lecturers =
      static_cast<int>(rng.in_range(1, static_cast<std::size_t>(config.max_lecturers)));
  spa.num_projects =
      static_cast<int>(rng.in_range(1, static_cast<std::size_t>(config.max_projects)));
  for (int p = 0; p < spa.num_projects; ++p) {
    spa.project_owner.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(spa.num_lecturers))));
    spa.project_capacity.push_back(
        static_cast<int>(rng.in_range(1, static_cast<std::size_t>(config.max_project_capacity))));
  }
  for (int l = 0; l < spa.num_lecturers; ++l)
    spa.lecturer_capacity.push_back(
        static_cast<int>(rng.in_range(1, static_cast<std::size_t>(config.max_lecturer_capacity))));

  std::size_t pairs = 0;
  for (int s = 0; s < spa.num_students; ++s) {
    std::vector<int> accepted;
    for (int p = 0; p < spa.num_projects; ++p) {
      if (pairs < config.max_pairs && rng.chance(config.acceptability)) {
        accepted.push_back(p);
        ++pairs;
      }
    }
    // Random tied ranking over the accepted projects.
    for (std::size_t i = accepted.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng.below(i));
      std::swap(accepted[i - 1], accepted[j]);
    }
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 0; i < accepted.size(); ++i) {
      if (i == 0 || !rng.chance(config.tie_density)) groups.emplace_back();
      groups.back().push_back(accepted[i]);
    }
    spa.student_prefs.push_back(std::move(groups));
  }

  // Lecturers rank every student (covers all applicants).
  for (int l = 0; l < spa.num_lecturers; ++l) {
    std::vector<int> students(static_cast<std::size_t>(spa.num_students));
    for (int s = 0; s < spa.num_students; ++s) students[static_cast<std::size_t>(s)] = s;
    for (std::size_t i = students.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng.below(i));
      std::swap(students[i - 1], students[j]);
    }
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 0; i < students.size(); ++i) {
      if (i == 0 || !rng.chance(config.tie_density)) groups.emplace_back();
      groups.back().push_back(students[i]);
    }
    spa.lecturer_prefs.push_back(std::move(groups));
  }
  spa.validate();
  return spa;
}

}  // namespace superstable

#endif  // SUPERSTABLE_IO_HPP
