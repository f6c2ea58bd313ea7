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

#include "bnlive/error.hpp"
#include "bnlive/model.hpp"
#include "test_support.hpp"

namespace bnlive {
namespace {

using testing::sid;

NetworkSpec small_spec() {
  NetworkSpec s;
  s.messages = {"a"};
  s.states = {"q0", "q1"};
  s.initials = {"q0"};
  s.finals = {"q1"};
  s.transitions.push_back({"q0", ActionKind::kSend, "a", "q1", 7});
  return s;
}

ModelError::Kind error_kind(const NetworkSpec& s) {
  try {
    validate_network(s);
  } catch (const ModelError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a ModelError";
  return ModelError::Kind::kEmptyInitials;
}

TEST(Model, Net1Shape) {
  const auto net = fixtures::net1();
  EXPECT_EQ(net.num_states(), 2U);
  EXPECT_EQ(net.num_messages(), 2U);
  EXPECT_EQ(net.transitions().size(), 2U);
  EXPECT_TRUE(net.initials().contains(sid(net, "q0")));
  EXPECT_TRUE(net.finals().contains(sid(net, "qf")));
  EXPECT_EQ(to_string(net, net.transition(0)), "q0 !a qf");
  EXPECT_EQ(to_string(net, net.transition(1)), "qf !b qf");
}

TEST(Model, FixturesMatchTheirDefinitions) {
  const auto n3 = fixtures::net3();
  EXPECT_EQ(to_string(n3, n3.transition(0)), "q0 !a q0");
  EXPECT_EQ(to_string(n3, n3.transition(1)), "q0 ?a qf");
  const auto n4 = fixtures::net4();
  EXPECT_EQ(n4.finals().members(), std::vector<StateId>{sid(n4, "q1")});
  EXPECT_EQ(n4.transitions().size(), 2U);
  EXPECT_EQ(fixtures::net2().transitions().size(), 1U);
}

TEST(Model, DanglingStateRef) {
  auto s = small_spec();
  s.transitions.push_back({"q0", ActionKind::kSend, "a", "qx", 9});
  try {
    validate_network(s);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ModelError::Kind::kDanglingStateRef);
    EXPECT_EQ(e.entity(), "qx");
    EXPECT_EQ(e.line(), 9U);
  }
}

TEST(Model, DanglingMessageRef) {
  auto s = small_spec();
  s.transitions.push_back({"q0", ActionKind::kReceive, "zz", "q1", 3});
  EXPECT_EQ(error_kind(s), ModelError::Kind::kDanglingMessageRef);
}

TEST(Model, EmptyInitials) {
  auto s = small_spec();
  s.initials.clear();
  EXPECT_EQ(error_kind(s), ModelError::Kind::kEmptyInitials);
}

TEST(Model, DuplicateNames) {
  auto s = small_spec();
  s.states.push_back("q0");
  EXPECT_EQ(error_kind(s), ModelError::Kind::kDuplicateName);
  auto t = small_spec();
  t.messages.push_back("a");
  EXPECT_EQ(error_kind(t), ModelError::Kind::kDuplicateName);
}

TEST(Model, DanglingFinalOrInitial) {
  auto s = small_spec();
  s.finals.push_back("nowhere");
  EXPECT_EQ(error_kind(s), ModelError::Kind::kDanglingStateRef);
}

TEST(Model, DuplicateTransitionsAreDroppedInOrder) {
  auto s = small_spec();
  s.transitions.push_back({"q1", ActionKind::kReceive, "a", "q0", 0});
  s.transitions.push_back({"q0", ActionKind::kSend, "a", "q1", 0});
  const auto net = validate_network(s);
  ASSERT_EQ(net.transitions().size(), 2U);
  EXPECT_EQ(to_string(net, net.transition(0)), "q0 !a q1");
  EXPECT_EQ(to_string(net, net.transition(1)), "q1 ?a q0");
}

TEST(Model, ValidationIsIdempotent) {
  for (auto net : {fixtures::net1(), fixtures::net2(), fixtures::net3(), fixtures::net4()}) {
    EXPECT_EQ(validate_network(to_spec(net)), net);
  }
  for (std::size_t i = 0; i < 50; ++i) {
    const auto net = testing::corpus_network(i);
    EXPECT_EQ(validate_network(to_spec(net)), net);
  }
}

TEST(Model, FinalsMayBeEmptyAndOverlapInitials) {
  auto s = small_spec();
  s.finals = {"q0"};
  EXPECT_NO_THROW(validate_network(s));
  s.finals.clear();
  EXPECT_TRUE(validate_network(s).finals().empty());
}

TEST(Model, SelfLoopsAndParallelTransitions) {
  auto s = small_spec();
  s.transitions.push_back({"q0", ActionKind::kReceive, "a", "q1", 0});
  s.transitions.push_back({"q1", ActionKind::kSend, "a", "q1", 0});
  EXPECT_EQ(validate_network(s).transitions().size(), 3U);
}

TEST(Model, IndexesAgreeWithTransitionList) {
  const auto net = fixtures::net3();
  const auto q0 = sid(net, "q0");
  EXPECT_EQ(net.sends_from(q0).size(), 1U);
  EXPECT_EQ(net.receives_from(q0).size(), 1U);
  EXPECT_EQ(net.receives_into(sid(net, "qf")).size(), 1U);
  EXPECT_EQ(net.sends_of(testing::mid(net, "a")).size(), 1U);
}

TEST(Model, SupportOfConfiguration) {
  const auto net = fixtures::net3();
  const Configuration c{sid(net, "q0"), sid(net, "q0"), sid(net, "qf")};
  EXPECT_EQ(support(net, c), testing::set_of(net, {"q0", "qf"}));
}

}  // namespace
}  // namespace bnlive
