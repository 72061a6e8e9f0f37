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

#ifndef SUPERSTABLE_SPA_HPP
#define SUPERSTABLE_SPA_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superstable/instance.hpp"
#include "superstable/matroid_kinds.hpp"
#include "superstable/stability.hpp"

namespace superstable {

/// A (student, project) pair; indices are 0-based.
using SpaPair = std::pair<int, int>;

/// Student-project allocation input with ties: students rank their
/// acceptable projects, lecturers rank students, projects and lecturers
/// carry capacities, and every project belongs to exactly one lecturer.
/// Preference lists are stored as tie groups, most preferred first.
struct SpaInstance {
  int num_students = 0;
  int num_lecturers = 0;
  int num_projects = 0;
  std::vector<int> project_owner;                       // project -> lecturer
  std::vector<int> project_capacity;                    // per project
  std::vector<int> lecturer_capacity;                   // per lecturer
  std::vector<std::vector<std::vector<int>>> student_prefs;   // student -> tie groups of projects
  std::vector<std::vector<std::vector<int>>> lecturer_prefs;  // lecturer -> tie groups of students

  /// Acceptable pairs, sorted (student, project).
  std::vector<SpaPair> acceptable_pairs() const {
    std::vector<SpaPair> pairs;
    for (int s = 0; s < num_students; ++s)
      for (const auto& group : student_prefs[static_cast<std::size_t>(s)])
        for (int p : group) pairs.emplace_back(s, p);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
  }

  void validate() const {
    auto require = [](bool ok, const std::string& msg) {
      if (!ok) throw std::invalid_argument("spa instance: " + msg);
    };
    require(num_students >= 0 && num_lecturers >= 0 && num_projects >= 0, "negative counts");
    require(static_cast<int>(project_owner.size()) == num_projects, "project owner list size");
    require(static_cast<int>(project_capacity.size()) == num_projects, "project capacity list size");
    require(static_cast<int>(lecturer_capacity.size()) == num_lecturers,
            "lecturer capacity list size");
    require(static_cast<int>(student_prefs.size()) == num_students, "student preference count");
    require(static_cast<int>(lecturer_prefs.size()) == num_lecturers, "lecturer preference count");
    for (int p = 0; p < num_projects; ++p) {
      require(project_owner[static_cast<std::size_t>(p)] >= 0 &&
                  project_owner[static_cast<std::size_t>(p)] < num_lecturers,
              "project " + std::to_string(p) + " has no valid lecturer");
      require(project_capacity[static_cast<std::size_t>(p)] >= 0, "negative project capacity");
    }
    for (int l = 0; l < num_lecturers; ++l)
      require(lecturer_capacity[static_cast<std::size_t>(l)] >= 0, "negative lecturer capacity");

    for (int s = 0; s < num_students; ++s) {
      std::set<int> seen;
      for (const auto& group : student_prefs[static_cast<std::size_t>(s)]) {
        require(!group.empty(), "empty tie group in student list");
        for (int p : group) {
          require(p >= 0 && p < num_projects, "student ranks unknown project");
          require(seen.insert(p).second,
                  "student " + std::to_string(s) + " ranks project " + std::to_string(p) +
                      " twice");
        }
      }
    }
    for (int l = 0; l < num_lecturers; ++l) {
      std::set<int> seen;
      for (const auto& group : lecturer_prefs[static_cast<std::size_t>(l)]) {
        require(!group.empty(), "empty tie group in lecturer list");
        for (int s : group) {
          require(s >= 0 && s < num_students, "lecturer ranks unknown student");
          require(seen.insert(s).second,
                  "lecturer " + std::to_string(l) + " ranks student " + std::to_string(s) +
                      " twice");
        }
      }
      // Every student applying to one of this lecturer's projects must be ranked.
      for (int s = 0; s < num_students; ++s) {
        for (const auto& group : student_prefs[static_cast<std::size_t>(s)]) {
          for (int p : group) {
            if (project_owner[static_cast<std::size_t>(p)] == l)
              require(seen.count(s) > 0, "lecturer " + std::to_string(l) +
                                             " does not rank applicant student " +
                                             std::to_string(s));
          }
        }
      }
    }
  }

  friend bool operator==(const SpaInstance&, const SpaInstance&) = default;
};

/// The two-matroid form of a SPA instance, plus the element <-> pair maps.
struct SpaReduction {
  Instance instance;
  std::vector<SpaPair> pair_of_element;  // element id -> pair
  std::map<SpaPair, Element> element_of_pair;

  ElementSet to_elements(const std::vector<SpaPair>& pairs) const {
    ElementSet out(instance.ground_size);
    for (const SpaPair& pr : pairs) {
      auto it = element_of_pair.find(pr);
      if (it == element_of_pair.end())
        throw std::invalid_argument("pair (" + std::to_string(pr.first) + ", " +
                                    std::to_string(pr.second) + ") is not acceptable");
      out.insert(it->second);
    }
    return out;
  }

  std::vector<SpaPair> to_pairs(const ElementSet& set) const {
    std::vector<SpaPair> out;
    for (Element e : set.elements()) out.push_back(pair_of_element[static_cast<std::size_t>(e)]);
    return out;
  }
};

/// Builds the matroid form: elements are the acceptable pairs, the D matroid
/// caps each student at one pair, the H matroid is laminar with project sets
/// nested inside lecturer sets. Side orders rank within an agent by that
/// agent's list and across agents strictly by agent index. Instances where
/// an acceptable pair hits a zero-capacity project or lecturer are rejected,
/// since that pair could never be matched yet would not be a valid element.
inline SpaReduction reduce(const SpaInstance& spa) {
  spa.validate();
  SpaReduction red;
  red.pair_of_element = spa.acceptable_pairs();
  const std::size_t n = red.pair_of_element.size();
  for (std::size_t e = 0; e < n; ++e)
    red.element_of_pair[red.pair_of_element[e]] = static_cast<Element>(e);

  for (const SpaPair& pr : red.pair_of_element) {
    const int p = pr.second;
    const int l = spa.project_owner[static_cast<std::size_t>(p)];
    if (spa.project_capacity[static_cast<std::size_t>(p)] == 0 ||
        spa.lecturer_capacity[static_cast<std::size_t>(l)] == 0)
      throw std::invalid_argument(
          "spa instance: acceptable pair (" + std::to_string(pr.first) + ", " +
          std::to_string(p) + ") hits a zero-capacity project or lecturer");
  }

  // D matroid: at most one pair per student.
  std::vector<PartitionMatroid::Block> student_blocks;
  for (int s = 0; s < spa.num_students; ++s) {
    ElementSet members(n);
    for (std::size_t e = 0; e < n; ++e)
      if (red.pair_of_element[e].first == s) members.insert(static_cast<Element>(e));
    if (!members.empty()) student_blocks.push_back({std::move(members), 1});
  }

  // H matroid: project capacities nested inside lecturer capacities.
  std::vector<LaminarMatroid::Constraint> constraints;
  for (int l = 0; l < spa.num_lecturers; ++l) {
    ElementSet members(n);
    for (std::size_t e = 0; e < n; ++e) {
      const int p = red.pair_of_element[e].second;
      if (spa.project_owner[static_cast<std::size_t>(p)] == l)
        members.insert(static_cast<Element>(e));
    }
    if (!members.empty())
      constraints.push_back(
          {std::move(members),
           static_cast<std::size_t>(spa.lecturer_capacity[static_cast<std::size_t>(l)])});
  }
  for (int p = 0; p < spa.num_projects; ++p) {
    ElementSet members(n);
    for (std::size_t e = 0; e < n; ++e)
      if (red.pair_of_element[e].second == p) members.insert(static_cast<Element>(e));
    if (!members.empty())
      constraints.push_back(
          {std::move(members),
           static_cast<std::size_t>(spa.project_capacity[static_cast<std::size_t>(p)])});
  }

  // D order: within a student by that student's tie groups, across students
  // strictly by student index. Rank buckets flatten (student, group).
  std::vector<int> ranks_d(n, 0);
  {
    int next = 0;
    for (int s = 0; s < spa.num_students; ++s) {
      for (const auto& group : spa.student_prefs[static_cast<std::size_t>(s)]) {
        for (int p : group) ranks_d[static_cast<std::size_t>(red.element_of_pair.at({s, p}))] = next;
        ++next;
      }
    }
  }

  // H order: within a lecturer by the lecturer's ranking of students, across
  // lecturers strictly by lecturer index.
  std::vector<int> ranks_h(n, 0);
  {
    int next = 0;
    for (int l = 0; l < spa.num_lecturers; ++l) {
      for (const auto& group : spa.lecturer_prefs[static_cast<std::size_t>(l)]) {
        for (int s : group) {
          for (std::size_t e = 0; e < n; ++e) {
            const auto& [es, ep] = red.pair_of_element[e];
            if (es == s && spa.project_owner[static_cast<std::size_t>(ep)] == l)
              ranks_h[e] = next;
          }
        }
        ++next;
      }
    }
  }

  red.instance.ground_size = n;
  red.instance.matroid_d = std::make_shared<PartitionMatroid>(n, std::move(student_blocks));
  red.instance.matroid_h = std::make_shared<LaminarMatroid>(n, std::move(constraints));
  red.instance.order_d = WeakOrder(std::move(ranks_d));
  red.instance.order_h = WeakOrder(std::move(ranks_h));
  red.instance.validate();
  return red;
}

namespace spa_detail {

inline void check_pairs(const SpaInstance& spa, const std::vector<SpaPair>& pairs) {
  std::set<SpaPair> acceptable;
  for (const SpaPair& pr : spa.acceptable_pairs()) acceptable.insert(pr);
  for (const SpaPair& pr : pairs) {
    if (!acceptable.count(pr))
      throw std::invalid_argument("pair (" + std::to_string(pr.first) + ", " +
                                  std::to_string(pr.second) + ") is not acceptable");
  }
}

inline int count_for_project(const std::vector<SpaPair>& m, int p) {
  int c = 0;
  for (const SpaPair& pr : m) c += pr.second == p ? 1 : 0;
  return c;
}

inline int count_for_lecturer(const SpaInstance& spa, const std::vector<SpaPair>& m, int l) {
  int c = 0;
  for (const SpaPair& pr : m)
    c += spa.project_owner[static_cast<std::size_t>(pr.second)] == l ? 1 : 0;
  return c;
}

/// Tie-group index of a project in a student's list, or -1.
inline int student_group(const SpaInstance& spa, int s, int p) {
  const auto& groups = spa.student_prefs[static_cast<std::size_t>(s)];
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (std::find(groups[g].begin(), groups[g].end(), p) != groups[g].end())
      return static_cast<int>(g);
  return -1;
}

/// Tie-group index of a student in a lecturer's list, or -1.
inline int lecturer_group(const SpaInstance& spa, int l, int s) {
  const auto& groups = spa.lecturer_prefs[static_cast<std::size_t>(l)];
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (std::find(groups[g].begin(), groups[g].end(), s) != groups[g].end())
      return static_cast<int>(g);
  return -1;
}

}  // namespace spa_detail

/// Checks the three capacity conditions: one pair per student, project
/// capacities, lecturer capacities.
inline bool is_spa_matching(const SpaInstance& spa, const std::vector<SpaPair>& m) {
  spa_detail::check_pairs(spa, m);
  std::set<SpaPair> dedup(m.begin(), m.end());
  if (dedup.size() != m.size()) return false;
  std::vector<int> per_student(static_cast<std::size_t>(spa.num_students), 0);
  for (const SpaPair& pr : m) {
    if (++per_student[static_cast<std::size_t>(pr.first)] > 1) return false;
  }
  for (int p = 0; p < spa.num_projects; ++p)
    if (spa_detail::count_for_project(m, p) > spa.project_capacity[static_cast<std::size_t>(p)])
      return false;
  for (int l = 0; l < spa.num_lecturers; ++l)
    if (spa_detail::count_for_lecturer(spa, m, l) > spa.lecturer_capacity[static_cast<std::size_t>(l)])
      return false;
  return true;
}

/// Whether the acceptable pair (s, p) outside the matching blocks it: the
/// student is unmatched or would weakly improve, and the lecturer side has
/// free capacity or a weakly worse assignee to displace. Ties count as
/// blocking.
inline bool spa_blocks(const SpaInstance& spa, const std::vector<SpaPair>& m,
                       const SpaPair& pair) {
  spa_detail::check_pairs(spa, m);
  spa_detail::check_pairs(spa, {pair});
  if (std::find(m.begin(), m.end(), pair) != m.end())
    throw std::invalid_argument("spa_blocks: pair is already in the matching");
  const auto [s, p] = pair;
  const int l = spa.project_owner[static_cast<std::size_t>(p)];

  // Student side: unmatched, or (s,p) weakly preferred to the assignment.
  bool student_ok = true;
  for (const SpaPair& pr : m) {
    if (pr.first != s) continue;
    const int gp = spa_detail::student_group(spa, s, p);
    const int gq = spa_detail::student_group(spa, s, pr.second);
    student_ok = gp <= gq;
  }
  if (!student_ok) return false;

  const int mp = spa_detail::count_for_project(m, p);
  const int ml = spa_detail::count_for_lecturer(spa, m, l);
  const int cp = spa.project_capacity[static_cast<std::size_t>(p)];
  const int cl = spa.lecturer_capacity[static_cast<std::size_t>(l)];
  const int gs = spa_detail::lecturer_group(spa, l, s);

  if (mp < cp && ml < cl) return true;
  if (mp == cp) {
    for (const SpaPair& pr : m) {
      if (pr.second != p) continue;
      if (gs <= spa_detail::lecturer_group(spa, l, pr.first)) return true;
    }
  }
  if (mp < cp && ml == cl) {
    for (const SpaPair& pr : m) {
      if (spa.project_owner[static_cast<std::size_t>(pr.second)] != l) continue;
      if (gs <= spa_detail::lecturer_group(spa, l, pr.first)) return true;
    }
  }
  return false;
}

/// A matching with no blocking pair among the remaining acceptable pairs.
inline bool spa_super_stable(const SpaInstance& spa, const std::vector<SpaPair>& m) {
  if (!is_spa_matching(spa, m)) return false;
  for (const SpaPair& pr : spa.acceptable_pairs()) {
    if (std::find(m.begin(), m.end(), pr) != m.end()) continue;
    if (spa_blocks(spa, m, pr)) return false;
  }
  return true;
}

}  // namespace superstable

#endif  // SUPERSTABLE_SPA_HPP
