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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ncg.hpp"
#include "ncg/json_io.hpp"
#include "oracle.hpp"

namespace ncg {
namespace {

ErrorCode read_error(const std::string& text) {
  try {
    io::read_network(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kInvalidArgument;
}

TEST(NetworkJsonTest, ExactFormat) {
  EXPECT_EQ(io::write_network(families::line(3)), "{\"edges\":[[0,1],[1,2]],\"n\":3}\n");
  const Network net = io::read_network("{\"n\": 3, \"edges\": [[2, 0], [1, 0]]}");
  EXPECT_TRUE(net.owns(2, 0));
  EXPECT_TRUE(net.owns(1, 0));
}

TEST(NetworkJsonTest, RoundTrip) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const Network net = oracle::random_connected(1 + rng() % 12, rng);
    EXPECT_EQ(io::read_network(io::write_network(net)), net);
  }
}

TEST(NetworkJsonTest, RejectsMalformedInput) {
  EXPECT_EQ(read_error("{bad"), ErrorCode::kParseError);
  EXPECT_EQ(read_error("{\"n\": 3}"), ErrorCode::kParseError);
  EXPECT_EQ(read_error("{\"n\": -1, \"edges\": []}"), ErrorCode::kParseError);
  EXPECT_EQ(read_error("{\"n\": 3, \"edges\": [[0, 1, 2]]}"), ErrorCode::kParseError);
  EXPECT_EQ(read_error("{\"n\": 3, \"edges\": [[0, \"1\"]]}"), ErrorCode::kParseError);
  EXPECT_EQ(read_error("{\"n\": 3, \"edges\": [[0, 1], [1, 0]]}"), ErrorCode::kInvalidNetwork);
  EXPECT_EQ(read_error("{\"n\": 3, \"edges\": [[1, 1]]}"), ErrorCode::kInvalidNetwork);
  EXPECT_EQ(read_error("{\"n\": 3, \"edges\": [[0, 3]]}"), ErrorCode::kInvalidNetwork);
}

TEST(DotTest, ArrowsFollowOwnership) {
  const std::string dot = io::to_dot(families::star(3), "g");
  EXPECT_NE(dot.find("digraph g {"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 1;"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 2;"), std::string::npos);
}

TEST(ReportJsonTest, WitnessFields) {
  const auto cfg = make_config(Rational(1, 2), 2);
  const auto report = certify(families::star(5), cfg);
  const auto j = io::report_to_json(report, cfg);
  EXPECT_EQ(j.at("alpha"), "1/2");
  EXPECT_FALSE(j.at("verdicts").at("kGE").at("holds").get<bool>());
  EXPECT_EQ(j.at("verdicts").at("kGE").at("witness").at("kind"), "BUY");
  EXPECT_EQ(j.at("verdicts").at("kGE").at("witness").at("agent"), 1);
  EXPECT_TRUE(j.contains("beta_local"));
}

TEST(TraceJsonTest, RoundTripAndReplay) {
  const auto cfg = make_config(Rational(5, 2), 2);
  const auto found = find_br_cycle(6, cfg, Regime::kBuy, {});
  ASSERT_TRUE(found.cycle);
  std::stringstream buf;
  io::write_trace(buf, *found.cycle, cfg, Regime::kBuy, "SEARCH");
  const auto file = io::read_trace(buf);
  EXPECT_EQ(file.regime, Regime::kBuy);
  EXPECT_EQ(file.cfg.alpha, cfg.alpha);
  EXPECT_EQ(file.trace.outcome, Outcome::kCycle);
  EXPECT_EQ(file.trace.period, found.cycle->period);
  ASSERT_EQ(file.trace.steps.size(), found.cycle->steps.size());
  for (std::size_t i = 0; i < file.trace.steps.size(); ++i) {
    EXPECT_EQ(file.trace.steps[i].move, found.cycle->steps[i].move);
    EXPECT_EQ(file.trace.steps[i].hash, found.cycle->steps[i].hash);
  }
  EXPECT_TRUE(verify_cycle(file.trace, file.cfg, file.regime));
}

TEST(TraceJsonTest, RejectsIncompleteFiles) {
  std::stringstream empty;
  EXPECT_THROW(io::read_trace(empty), Error);
  std::stringstream junk("{\"type\":\"step\"}\n");
  EXPECT_THROW(io::read_trace(junk), Error);
}

}  // namespace
}  // namespace ncg
