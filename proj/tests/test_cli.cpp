// Copyright 2026 The dirricci Authors
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

// End-to-end runs of the installed binary. Each case shells out to the
// built CLI, captures stdout, and checks text and exit codes.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string capture = "cli_out_" + std::to_string(counter++) + ".txt";
  std::string command = std::string(DIRRICCI_CLI_PATH) + " " + args + " > " +
                        capture + " 2>&1";
  int raw = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(raw);
  std::ifstream in(capture, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  std::remove(capture.c_str());
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gen then flatness check on a directed cycle") {
  RunResult gen = run_cli("gen cycle 5 -o cli_c5.edges");
  REQUIRE(gen.exit_code == 0);

  RunResult check = run_cli("check cli_c5.edges --condition flat");
  CHECK(check.exit_code == 0);
  CHECK(contains(check.output, "ricci_flat: true"));
  std::remove("cli_c5.edges");
}

TEST_CASE("pair curvature on the tournament") {
  REQUIRE(run_cli("gen complete 5 -o cli_k5.edges").exit_code == 0);

  RunResult pair = run_cli("curvature cli_k5.edges --pair 0 1");
  CHECK(pair.exit_code == 0);
  CHECK(pair.output == "1/4\n");

  RunResult alpha = run_cli("curvature cli_k5.edges --pair 0 1 --alpha 1/2");
  CHECK(alpha.exit_code == 0);
  CHECK(alpha.output == "1/8\n");

  RunResult csv = run_cli("-f csv curvature cli_k5.edges");
  CHECK(csv.exit_code == 0);
  CHECK(contains(csv.output, "u,v,kappa_num,kappa_den"));
  CHECK(contains(csv.output, "0,1,1,4"));

  RunResult bound = run_cli("bound cli_k5.edges 0 1");
  CHECK(bound.exit_code == 0);
  CHECK(bound.output == "1/4\n");

  RunResult cond = run_cli("check cli_k5.edges --condition a");
  CHECK(cond.exit_code == 0);
  CHECK(contains(cond.output, "holds: false"));
  std::remove("cli_k5.edges");
}

TEST_CASE("trees: distances are defined, whole-graph verdicts are not") {
  REQUIRE(run_cli("gen tree r,0,0,1,1 -o cli_tree.edges").exit_code == 0);

  RunResult dist = run_cli("distances cli_tree.edges");
  CHECK(dist.exit_code == 0);
  CHECK(contains(dist.output, "inf"));

  RunResult flat = run_cli("check cli_tree.edges --condition flat");
  CHECK(flat.exit_code == 2);

  // per-pair curvature away from the root stays defined
  RunResult pair = run_cli("curvature cli_tree.edges --pair 3 1");
  CHECK(pair.exit_code == 0);
  CHECK(pair.output == "2/3\n");
  std::remove("cli_tree.edges");
}

TEST_CASE("measure and wasserstein output") {
  REQUIRE(run_cli("gen cycle 5 -o cli_m.edges").exit_code == 0);

  RunResult measure = run_cli("measure cli_m.edges 0 --alpha 1/2");
  CHECK(measure.exit_code == 0);
  CHECK(contains(measure.output, "0: 3/4"));
  CHECK(contains(measure.output, "1: 1/4"));

  RunResult w = run_cli("wasserstein cli_m.edges 0 1 --alpha 1/2");
  CHECK(w.exit_code == 0);
  CHECK(contains(w.output, "value: 1"));
  CHECK(contains(w.output, "dual potential:"));

  RunResult limit = run_cli("wasserstein cli_m.edges 0 1 --alpha limit");
  CHECK(limit.exit_code == 0);
  CHECK(contains(limit.output, "value: 1"));
  std::remove("cli_m.edges");
}

TEST_CASE("json output formats parse") {
  REQUIRE(run_cli("gen product 3 4 -o cli_p.json").exit_code == 0);
  RunResult report = run_cli("-f json curvature cli_p.json");
  CHECK(report.exit_code == 0);
  CHECK(contains(report.output, "\"is_ricci_flat\": true"));

  RunResult dist = run_cli("-f json distances cli_p.json");
  CHECK(dist.exit_code == 0);
  CHECK(contains(dist.output, "\"distances\""));

  RunResult cond = run_cli("-f json check cli_p.json --condition phi");
  CHECK(cond.exit_code == 0);
  CHECK(contains(cond.output, "\"condition\": \"MatchingPhi\""));
  CHECK(contains(cond.output, "\"holds\": true"));

  RunResult measure = run_cli("-f json measure cli_p.json 0 --alpha 1/3");
  CHECK(measure.exit_code == 0);
  CHECK(contains(measure.output, "\"mass\""));
  std::remove("cli_p.json");
}

TEST_CASE("whole-graph report at a fixed alpha") {
  REQUIRE(run_cli("gen complete 5 -o cli_ka.edges").exit_code == 0);
  RunResult csv = run_cli("-f csv curvature cli_ka.edges --alpha 1/2");
  CHECK(csv.exit_code == 0);
  CHECK(contains(csv.output, "0,1,1,8"));  // successor edges: kappa = 1/8
  CHECK(contains(csv.output, "0,2,0,1"));  // chord edges: kappa = 0
  std::remove("cli_ka.edges");
}

TEST_CASE("invalid inputs exit 1 with a named reason") {
  RunResult nofile = run_cli("distances no_such_file.edges");
  CHECK(nofile.exit_code == 1);
  CHECK(contains(nofile.output, "IoError"));

  REQUIRE(run_cli("gen cycle 5 -o cli_e.edges").exit_code == 0);
  RunResult bad_alpha = run_cli("curvature cli_e.edges --pair 0 1 --alpha 2");
  CHECK(bad_alpha.exit_code == 1);
  CHECK(contains(bad_alpha.output, "AlphaOutOfRange"));

  RunResult bad_family = run_cli("gen moebius 5 -o x.edges");
  CHECK(bad_family.exit_code == 1);

  RunResult loop = run_cli("gen cycle 2 -o x.edges");
  CHECK(loop.exit_code == 1);
  CHECK(contains(loop.output, "NTooSmall"));
  std::remove("cli_e.edges");
}

TEST_CASE("verify subcommand reports fixtures") {
  RunResult verify = run_cli("verify");
  CHECK(verify.exit_code == 0);
  CHECK(contains(verify.output, "PASS"));
  CHECK(contains(verify.output, "WARN"));
  CHECK(contains(verify.output, "0 failed"));
}

TEST_CASE("split degree convention admits anti-parallel graph files") {
  std::ofstream file("cli_anti.edges", std::ios::binary);
  file << "0 1\n1 0\n1 2\n2 0\n";
  file.close();

  RunResult rejected = run_cli("distances cli_anti.edges");
  CHECK(rejected.exit_code == 1);
  CHECK(contains(rejected.output, "AntiParallelPair"));

  RunResult admitted =
      run_cli("--degree-convention split distances cli_anti.edges");
  CHECK(admitted.exit_code == 0);
  std::remove("cli_anti.edges");
}
