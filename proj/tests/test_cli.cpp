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

// End-to-end checks of the ssci binary: exit codes, stable output, and the
// machine-parsable error prefix.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const auto out_path = dir / ("ssci_out_" + std::to_string(counter) + ".txt");
  const auto err_path = dir / ("ssci_err_" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string(SSCI_BIN) + " " + args + " > " + out_path.string() +
                          " 2> " + err_path.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve exit codes and output") {
  RunResult empty = run("solve " + fixture("empty.ssci"));
  CHECK(empty.exit_code == 0);
  CHECK(contains(empty.out, "Found: {}"));

  RunResult none = run("solve " + fixture("smti_all_indifferent.ssci"));
  CHECK(none.exit_code == 2);
  CHECK(contains(none.out, "none exists"));

  RunResult json = run("solve --json " + fixture("smti_all_indifferent.ssci"));
  CHECK(json.exit_code == 2);
  CHECK(contains(json.out, "\"verdict\": \"none-exists\""));
  CHECK(contains(json.out, "\"counters\""));

  RunResult traced = run("solve --trace " + fixture("smti_all_indifferent.ssci"));
  CHECK(traced.exit_code == 2);
  CHECK(contains(traced.out, "oracle calls:"));
}

TEST_CASE("errors land on stderr with the stable prefix") {
  RunResult missing = run("solve /nonexistent/file.ssci");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.rfind("error: ", 0) == 0);

  const auto bad = std::filesystem::temp_directory_path() / "ssci_bad.ssci";
  std::ofstream(bad) << "ssci 1\nelements nope\n";
  RunResult parse = run("solve " + bad.string());
  CHECK(parse.exit_code == 1);
  CHECK(contains(parse.err, "error: parse: line 2"));
  std::filesystem::remove(bad);
}

TEST_CASE("verify") {
  CHECK(run("verify " + fixture("empty.ssci") + " {}").exit_code == 0);

  RunResult bad = run("verify " + fixture("smti_all_indifferent.ssci") + " 0,3");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "outside both dominated sets"));
}

TEST_CASE("enumerate") {
  RunResult r = run("enumerate " + fixture("smti_all_indifferent.ssci"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0 super-stable"));

  RunResult refused = run("enumerate --limit 2 " + fixture("smti_all_indifferent.ssci"));
  CHECK(refused.exit_code == 1);
  CHECK(contains(refused.err, "error: "));
}

TEST_CASE("fuzz cross-checks cleanly") {
  RunResult r = run("fuzz --seed 7 --count 40 --max-e 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "no discrepancy"));
}

TEST_CASE("gen is deterministic and emits a solvable document") {
  RunResult once = run("gen --seed 5 --max-e 8");
  RunResult twice = run("gen --seed 5 --max-e 8");
  CHECK(once.exit_code == 0);
  CHECK(once.out == twice.out);
  CHECK(contains(once.out, "ssci 1"));

  const auto path = std::filesystem::temp_directory_path() / "ssci_gen.ssci";
  std::ofstream(path) << once.out;
  RunResult solved = run("solve " + path.string());
  CHECK((solved.exit_code == 0 || solved.exit_code == 2));
  std::filesystem::remove(path);
}

TEST_CASE("spa subcommands") {
  RunResult solve = run("spa solve " + fixture("spa_one_student.spa"));
  CHECK(solve.exit_code == 0);
  CHECK(contains(solve.out, "Found matching: s1:p1"));

  CHECK(run("spa check " + fixture("spa_one_student.spa") + " 1:1").exit_code == 0);
  RunResult unstable = run("spa check " + fixture("spa_one_student.spa") + " ''");
  CHECK(unstable.exit_code == 2);
  CHECK(contains(unstable.out, "not a super-stable matching"));
}
