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

// Command-line front end: solve / verify / enumerate / fuzz / spa / gen.
// Exit codes: 0 success (solve: set found), 2 no solution exists, 1 error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "superstable/superstable.hpp"

namespace {

using nlohmann::json;
using namespace superstable;

constexpr int kExitFound = 0;
constexpr int kExitError = 1;
constexpr int kExitNoSolution = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Element> parse_id_list(const std::string& text) {
  std::vector<Element> out;
  std::string cleaned;
  for (char c : text) {
    if (c == '{' || c == '}' || c == ' ') continue;
    cleaned += c == ',' ? ' ' : c;
  }
  std::istringstream in(cleaned);
  long v = 0;
  while (in >> v) out.push_back(static_cast<Element>(v));
  if (!in.eof()) throw std::runtime_error("malformed element list: " + text);
  return out;
}

json set_to_json(const ElementSet& s) {
  json arr = json::array();
  for (Element e : s.elements()) arr.push_back(e);
  return arr;
}

json outcome_to_json(const SolveOutcome& outcome, bool with_trace) {
  json counters;
  counters["k"] = outcome.trace.round_count();
  json refine = json::array(), withdraw = json::array();
  for (const auto& round : outcome.trace.rounds) {
    refine.push_back(round.refine_count());
    withdraw.push_back(round.withdraw_count());
  }
  counters["i_t"] = refine;
  counters["j_t"] = withdraw;

  json out;
  switch (outcome.verdict) {
    case SolveOutcome::Verdict::Found:
      out["verdict"] = "found";
      break;
    case SolveOutcome::Verdict::NoneExistsDependentInD:
      out["verdict"] = "none-exists";
      out["reason"] = "candidate dependent in matroid D";
      break;
    case SolveOutcome::Verdict::NoneExistsAugmentable:
      out["verdict"] = "none-exists";
      out["reason"] = "rejected element " + std::to_string(outcome.augmenting) +
                      " still fits on side H";
      break;
  }
  out["set"] = set_to_json(outcome.chosen);
  out["rejected"] = set_to_json(outcome.rejected);
  out["counters"] = counters;
  out["oracleCalls"] = outcome.trace.oracle_calls_d + outcome.trace.oracle_calls_h;
  if (with_trace) {
    json rounds = json::array();
    for (const auto& round : outcome.trace.rounds) {
      json r;
      json refines = json::array();
      for (const auto& step : round.refine_steps) {
        refines.push_back({{"selected", set_to_json(step.selected)},
                           {"kept", set_to_json(step.kept)},
                           {"rejected", set_to_json(step.rejected)}});
      }
      json withdraws = json::array();
      for (const auto& step : round.withdraw_steps) {
        withdraws.push_back(
            {{"pivot", step.pivot}, {"removedTail", set_to_json(step.removed_tail)}});
      }
      r["refineSteps"] = refines;
      r["withdrawSteps"] = withdraws;
      r["chosen"] = set_to_json(round.chosen);
      r["rejected"] = set_to_json(round.rejected);
      rounds.push_back(r);
    }
    out["trace"] = rounds;
  }
  return out;
}

void print_trace_text(const SolveTrace& trace) {
  for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
    const auto& round = trace.rounds[t];
    std::cout << "round " << t + 1 << ":\n";
    for (std::size_t i = 0; i < round.refine_steps.size(); ++i) {
      const auto& step = round.refine_steps[i];
      std::cout << "  refine " << i + 1 << ": selected=" << step.selected.to_string()
                << " kept=" << step.kept.to_string() << " rejected=" << step.rejected.to_string()
                << "\n";
    }
    for (std::size_t j = 0; j < round.withdraw_steps.size(); ++j) {
      const auto& step = round.withdraw_steps[j];
      std::cout << "  withdraw " << j + 1 << ": pivot=" << step.pivot
                << " removed=" << step.removed_tail.to_string() << "\n";
    }
    std::cout << "  result: chosen=" << round.chosen.to_string()
              << " rejected=" << round.rejected.to_string() << "\n";
  }
  std::cout << "oracle calls: D=" << trace.oracle_calls_d << " H=" << trace.oracle_calls_h
            << "\n";
}

int report_outcome(const SolveOutcome& outcome, bool as_json, bool with_trace) {
  if (as_json) {
    std::cout << outcome_to_json(outcome, with_trace).dump(2) << "\n";
  } else {
    if (with_trace) print_trace_text(outcome.trace);
    switch (outcome.verdict) {
      case SolveOutcome::Verdict::Found:
        std::cout << "Found: " << outcome.chosen.to_string() << "\n";
        break;
      case SolveOutcome::Verdict::NoneExistsDependentInD:
        std::cout << "none exists: candidate " << outcome.chosen.to_string()
                  << " is dependent in matroid D\n";
        break;
      case SolveOutcome::Verdict::NoneExistsAugmentable:
        std::cout << "none exists: rejected element " << outcome.augmenting
                  << " still fits on side H\n";
        break;
    }
  }
  return outcome.found() ? kExitFound : kExitNoSolution;
}

int run_solve(const std::string& path, bool as_json, bool with_trace) {
  Instance inst = parse_instance(read_file(path)).build();
  return report_outcome(solve(inst), as_json, with_trace);
}

int run_verify(const std::string& path, const std::string& set_text, bool as_json) {
  Instance inst = parse_instance(read_file(path)).build();
  ElementSet candidate(inst.ground_size);
  for (Element e : parse_id_list(set_text)) candidate.insert(e);
  StabilityVerdict verdict = check_super_stable(inst, candidate);
  if (as_json) {
    json out;
    out["set"] = set_to_json(candidate);
    out["superStable"] = verdict.stable;
    if (!verdict.stable) out["witness"] = verdict.describe();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << candidate.to_string() << ": " << verdict.describe() << "\n";
  }
  return verdict.stable ? kExitFound : kExitNoSolution;
}

int run_enumerate(const std::string& path, std::size_t limit, bool as_json) {
  Instance inst = parse_instance(read_file(path)).build();
  std::vector<ElementSet> all = enumerate_super_stable(inst, limit);
  if (as_json) {
    json arr = json::array();
    for (const ElementSet& s : all) arr.push_back(set_to_json(s));
    std::cout << json{{"count", all.size()}, {"sets", arr}}.dump(2) << "\n";
  } else {
    std::cout << all.size() << " super-stable common independent set(s)\n";
    for (const ElementSet& s : all) std::cout << s.to_string() << "\n";
  }
  return kExitFound;
}

int run_fuzz(std::uint64_t seed, std::size_t count, std::size_t max_elements) {
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorConfig config;
    config.seed = seed + i;
    config.max_elements = max_elements;
    config.tie_density = (i % 4) * 0.25;
    InstanceDoc doc = generate(config);
    Instance inst = doc.build();
    SolveOutcome outcome = solve(inst);
    std::vector<ElementSet> all = enumerate_super_stable(inst);

    std::string complaint;
    if (outcome.found() != !all.empty()) {
      complaint = "solver verdict disagrees with brute force";
    } else if (outcome.found() && !check_super_stable(inst, outcome.chosen).stable) {
      complaint = "solver returned a set that is not super-stable";
    } else {
      for (const ElementSet& m : all) {
        if (m.intersects(outcome.rejected)) {
          complaint = "brute-forced solution intersects the rejection set";
          break;
        }
      }
    }
    if (!complaint.empty()) {
      std::cerr << "error: fuzz discrepancy at seed " << config.seed << ": " << complaint
                << "\ncounterexample instance:\n"
                << serialize(doc);
      return kExitError;
    }
  }
  std::cout << "fuzz: " << count << " instances checked, no discrepancy\n";
  return kExitFound;
}

int run_spa_solve(const std::string& path, bool as_json, bool with_trace) {
  SpaInstance spa = parse_spa(read_file(path));
  SpaReduction red = reduce(spa);
  SolveOutcome outcome = solve(red.instance);
  if (as_json) {
    json out = outcome_to_json(outcome, with_trace);
    json pairs = json::array();
    for (const auto& [s, p] : red.to_pairs(outcome.chosen))
      pairs.push_back({{"student", s + 1}, {"project", p + 1}});
    out["matching"] = pairs;
    std::cout << out.dump(2) << "\n";
  } else {
    if (with_trace) print_trace_text(outcome.trace);
    if (outcome.found()) {
      std::cout << "Found matching:";
      for (const auto& [s, p] : red.to_pairs(outcome.chosen))
        std::cout << " s" << s + 1 << ":p" << p + 1;
      std::cout << "\n";
    } else {
      std::cout << "none exists: no super-stable matching\n";
    }
  }
  return outcome.found() ? kExitFound : kExitNoSolution;
}

std::vector<SpaPair> parse_matching(const std::string& text) {
  // Comma-separated 1-based "s:p" entries, e.g. "1:2,3:1". Empty = empty.
  std::vector<SpaPair> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("malformed matching entry: " + item);
    int s = std::stoi(item.substr(0, colon));
    int p = std::stoi(item.substr(colon + 1));
    out.emplace_back(s - 1, p - 1);
  }
  return out;
}

int run_spa_check(const std::string& path, const std::string& matching_text) {
  SpaInstance spa = parse_spa(read_file(path));
  std::vector<SpaPair> matching = parse_matching(matching_text);
  const bool stable = spa_super_stable(spa, matching);
  std::cout << (stable ? "super-stable matching\n" : "not a super-stable matching\n");
  return stable ? kExitFound : kExitNoSolution;
}

int run_gen(std::uint64_t seed, std::size_t min_elements, std::size_t max_elements,
            double tie_density) {
  GeneratorConfig config;
  config.seed = seed;
  config.min_elements = min_elements;
  config.max_elements = max_elements;
  config.tie_density = tie_density;
  std::cout << serialize(generate(config));
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"super-stable common independent set solver"};
  app.require_subcommand(1);

  std::string path, set_text, matching_text;
  bool as_json = false, with_trace = false;
  std::size_t limit = kDefaultEnumerationLimit;
  std::uint64_t seed = 0;
  std::size_t count = 100, max_elements = 8, min_elements = 0;
  double tie_density = 0.3;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("file", path)->required();
  solve_cmd->add_flag("--json", as_json);
  solve_cmd->add_flag("--trace", with_trace);

  auto* verify_cmd = app.add_subcommand("verify", "check a set for super-stability");
  verify_cmd->add_option("file", path)->required();
  verify_cmd->add_option("set", set_text, "comma-separated element ids, e.g. '0,2' or '{}'")
      ->required();
  verify_cmd->add_flag("--json", as_json);

  auto* enum_cmd = app.add_subcommand("enumerate", "brute-force all super-stable sets");
  enum_cmd->add_option("file", path)->required();
  enum_cmd->add_option("--limit", limit, "max ground-set size for enumeration");
  enum_cmd->add_flag("--json", as_json);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "cross-check solver against brute force");
  fuzz_cmd->add_option("--seed", seed);
  fuzz_cmd->add_option("--count", count);
  fuzz_cmd->add_option("--max-e", max_elements);

  auto* spa_cmd = app.add_subcommand("spa", "student-project allocation front end");
  spa_cmd->require_subcommand(1);
  auto* spa_solve_cmd = spa_cmd->add_subcommand("solve", "solve a SPA instance");
  spa_solve_cmd->add_option("file", path)->required();
  spa_solve_cmd->add_flag("--json", as_json);
  spa_solve_cmd->add_flag("--trace", with_trace);
  auto* spa_check_cmd = spa_cmd->add_subcommand("check", "check a matching for super-stability");
  spa_check_cmd->add_option("file", path)->required();
  spa_check_cmd->add_option("matching", matching_text, "1-based 's:p' pairs, e.g. '1:2,2:1'")
      ->required();

  auto* gen_cmd = app.add_subcommand("gen", "emit a deterministic random instance");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--min-e", min_elements);
  gen_cmd->add_option("--max-e", max_elements);
  gen_cmd->add_option("--tie", tie_density);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(path, as_json, with_trace);
    if (verify_cmd->parsed()) return run_verify(path, set_text, as_json);
    if (enum_cmd->parsed()) return run_enumerate(path, limit, as_json);
    if (fuzz_cmd->parsed()) return run_fuzz(seed, count, max_elements);
    if (spa_cmd->parsed()) {
      if (spa_solve_cmd->parsed()) return run_spa_solve(path, as_json, with_trace);
      return run_spa_check(path, matching_text);
    }
    if (gen_cmd->parsed()) return run_gen(seed, min_elements, max_elements, tie_density);
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
