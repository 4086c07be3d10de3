// Copyright 2026 The ncg Authors
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

// Drives the ncg binary as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ncg.hpp"
#include "ncg/json_io.hpp"

namespace ncg {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result ncg_cli(const std::string& args) {
  const std::string cmd = std::string(NCG_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ncg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenerateTreeStar) {
  const auto r = ncg_cli("generate --family tree-star --d 4 --l 81 --out " + path("ts.json"));
  ASSERT_EQ(r.code, 0);
  const Network net = io::read_network(slurp(path("ts.json")));
  EXPECT_EQ(net.size(), 114u);
  EXPECT_EQ(net, families::tree_star(4, 81).net);
}

TEST_F(CliTest, GenerateLineToStdoutWithDot) {
  const auto r = ncg_cli("generate --family line --n 10 --dot " + path("line.dot"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::read_network(r.out), families::line(10));
  EXPECT_NE(slurp(path("line.dot")).find("digraph"), std::string::npos);
}

TEST_F(CliTest, GenerateRejectsUnknownFamily) { EXPECT_EQ(ncg_cli("generate --family nope --n 3").code, 2); }

TEST_F(CliTest, CertifyExitCodes) {
  ASSERT_EQ(ncg_cli("generate --family star --n 5 --out " + path("star.json")).code, 0);
  EXPECT_EQ(ncg_cli("certify " + path("star.json") + " --alpha 3 --k 2").code, 0);
  const auto bad = ncg_cli("certify " + path("star.json") + " --alpha 1/2 --k 2 --out " + path("report.json"));
  EXPECT_EQ(bad.code, 1);
  const auto report = io::Json::parse(slurp(path("report.json")));
  EXPECT_EQ(report.at("verdicts").at("kGE").at("witness").at("kind"), "BUY");
  std::ofstream(path("broken.json")) << "{\"n\": 3, \"edges\": [[0,";
  EXPECT_EQ(ncg_cli("certify " + path("broken.json") + " --alpha 1").code, 2);
  EXPECT_EQ(ncg_cli("certify " + path("missing.json") + " --alpha 1").code, 2);
  EXPECT_EQ(ncg_cli("certify " + path("star.json") + " --alpha zero").code, 2);
}

TEST_F(CliTest, DynamicsConvergesAndReplays) {
  ASSERT_EQ(ncg_cli("generate --family balanced-clique --n 5 --out " + path("c5.json")).code, 0);
  const auto run = ncg_cli("dynamics " + path("c5.json") + " --alpha 3 --k 1 --regime K_BG --out " + path("t.jsonl"));
  ASSERT_EQ(run.code, 0);
  std::ifstream in(path("t.jsonl"));
  const auto file = io::read_trace(in);
  EXPECT_EQ(file.trace.outcome, Outcome::kConverged);
  EXPECT_LE(file.trace.steps.size(), 5u);
  EXPECT_EQ(ncg_cli("dynamics " + path("c5.json") + " --replay " + path("t.jsonl")).code, 0);

  // A tampered trace must fail verification.
  std::string text = slurp(path("t.jsonl"));
  const auto pos = text.find("\"hash\":\"");
  ASSERT_NE(pos, std::string::npos);
  text[pos + 8] = text[pos + 8] == '0' ? '1' : '0';
  std::ofstream(path("bad.jsonl")) << text;
  EXPECT_NE(ncg_cli("dynamics " + path("c5.json") + " --replay " + path("bad.jsonl")).code, 0);
}

TEST_F(CliTest, DynamicsBudgetZero) {
  ASSERT_EQ(ncg_cli("generate --family clique --n 5 --out " + path("c.json")).code, 0);
  const auto r = ncg_cli("dynamics " + path("c.json") + " --alpha 3 --regime K_BG --budget 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("BUDGET_EXHAUSTED"), std::string::npos);
}

TEST_F(CliTest, ExperimentsAreDeterministic) {
  for (const std::string name : {"poa-line-scan", "poa-binary-tree-scan", "formula-grid", "ball-lemma-scan",
                                 "br-cycle-hunt"}) {
    ASSERT_EQ(ncg_cli("experiment " + name + " --out " + path("a.csv")).code, 0) << name;
    ASSERT_EQ(ncg_cli("experiment " + name + " --out " + path("b.csv")).code, 0) << name;
    const std::string a = slurp(path("a.csv"));
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(path("b.csv"))) << name;
  }
  EXPECT_EQ(ncg_cli("experiment nope").code, 2);
}

TEST_F(CliTest, BinaryTreeScanCoversDepthsAndRadii) {
  const auto r = ncg_cli("experiment poa-binary-tree-scan");
  ASSERT_EQ(r.code, 0);
  for (const std::string row : {"\n3,2,", "\n4,3,", "\n5,2,", "\n6,3,"}) EXPECT_NE(r.out.find(row), std::string::npos) << row;
}

TEST_F(CliTest, FormulasCheckAll) {
  const auto r = ncg_cli("formulas --check-all");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("delta_general"), std::string::npos);
  EXPECT_NE(r.out.find("tree_star_leaf_dist,6"), std::string::npos);
}

}  // namespace
}  // namespace ncg
