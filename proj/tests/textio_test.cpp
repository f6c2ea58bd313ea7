// Copyright 2026 The bnlive Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "bnlive/error.hpp"
#include "bnlive/textio.hpp"
#include "test_support.hpp"

namespace bnlive {
namespace {

constexpr const char* kNet1Text = R"(# fixture one
messages a b
states q0 qf
initial q0
final qf
trans q0 !a qf
trans qf !b qf
)";

TEST(TextIo, ParsesNet1) {
  const auto net = parse_network(kNet1Text);
  EXPECT_EQ(net.num_states(), 2U);
  EXPECT_EQ(net.num_messages(), 2U);
  EXPECT_EQ(net.transitions().size(), 2U);
  EXPECT_EQ(net, fixtures::net1());
}

TEST(TextIo, UndeclaredMessageReportsLine) {
  const std::string text = "messages a\nstates q0 q1\ninitial q0\ntrans q0 !x q1\n";
  try {
    parse_network(text);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ModelError::Kind::kDanglingMessageRef);
    EXPECT_EQ(e.entity(), "x");
    EXPECT_EQ(e.line(), 4U);
  }
}

TEST(TextIo, OnlyCommentsIsEmptyInitials) {
  try {
    parse_network("# nothing here\n   # still nothing\n");
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ModelError::Kind::kEmptyInitials);
  }
}

TEST(TextIo, SyntaxErrors) {
  EXPECT_THROW(parse_network("states q0\ninitial q0\nfoo bar\n"), SyntaxError);
  EXPECT_THROW(parse_network("messages a\nstates q0\ninitial q0\ntrans q0 a q0\n"), SyntaxError);
  EXPECT_THROW(parse_network("messages a\nstates q0\ninitial q0\ntrans q0 !a\n"), SyntaxError);
  EXPECT_THROW(parse_network("states 9lives\ninitial 9lives\n"), SyntaxError);
  EXPECT_THROW(parse_network("network a\nnetwork b\nstates q\ninitial q\n"), SyntaxError);
  try {
    parse_network("states q0\ninitial q0\n\nbogus\n");
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
}

TEST(TextIo, SectionsAccumulate) {
  const auto net = parse_network("states q0\nstates q1\nmessages a\ninitial q0\ntrans q0 !a q1\ntrans q1 ?a q0\n");
  EXPECT_EQ(net.num_states(), 2U);
  EXPECT_EQ(net.transitions().size(), 2U);
}

TEST(TextIo, Net2CanonicalBody) {
  const std::string text = serialize_network(fixtures::net2());
  EXPECT_EQ(text, "messages a\nstates q0 qf\ninitial q0\nfinal qf\ntrans q0 !a qf\n");
  std::istringstream in(text);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 5);
}

TEST(TextIo, RoundTripFixtures) {
  for (const auto& net : {fixtures::net1(), fixtures::net2(), fixtures::net3(), fixtures::net4()}) {
    EXPECT_EQ(parse_network(serialize_network(net)), net);
  }
}

TEST(TextIo, RoundTripGeneratedNetworks) {
  for (std::size_t i = 0; i < 300; ++i) {
    const auto net = testing::corpus_network(i);
    const std::string text = serialize_network(net);
    const auto back = parse_network(text);
    ASSERT_EQ(back, net) << text;
    EXPECT_EQ(serialize_network(back), text);
  }
  GenParams big;
  big.states = 40;
  big.messages = 5;
  big.transitions = 200;
  const auto net = random_network(big, 11);
  EXPECT_EQ(parse_network(serialize_network(net)), net);
}

TEST(TextIo, NamedNetworkKeepsHeader) {
  const auto net = parse_network("network demo\nstates s\ninitial s\nfinal\n");
  EXPECT_EQ(net.name(), "demo");
  EXPECT_EQ(serialize_network(net), "network demo\nstates s\ninitial s\nfinal\n");
}

TEST(TextIo, MissingFileIsError) { EXPECT_THROW(load_network("/nonexistent/x.bn"), Error); }

}  // namespace
}  // namespace bnlive
