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

#include <stdexcept>

#include "bnlive/closures.hpp"
#include "bnlive/coverability.hpp"
#include "bnlive/liveness.hpp"
#include "bnlive/oracle.hpp"
#include "bnlive/textio.hpp"
#include "bnlive/witness.hpp"
#include "test_support.hpp"

namespace bnlive {
namespace {

using testing::ids;
using testing::tuple_of;

SetTuple kleene_step(const BroadcastNetwork& net, const SetTuple& c, const SetTuple& seed_tuple) {
  return meet(post_closure(net, c, seed_tuple), pre_closure(net, c, seed_tuple));
}

TEST(Liveness, GfpNet1) {
  const auto net = fixtures::net1();
  const auto t = gfp_constraint(net, ids(net, {"q0", "qf"}));
  EXPECT_EQ(t.fixed_point(), tuple_of(net, {{"q0"}, {"qf"}}));
  const auto seed_tuple = tuple_of(net, {{"q0"}, {"qf"}});
  const auto q = SetTuple::full(2, net.num_states());
  EXPECT_EQ(meet(testing::reference_closure(net, true, q, seed_tuple), testing::reference_closure(net, false, q, seed_tuple)),
            t.iterates.front());
}

TEST(Liveness, GfpNet2) {
  const auto net = fixtures::net2();
  EXPECT_EQ(gfp_constraint(net, ids(net, {"q0", "qf"})).fixed_point(), tuple_of(net, {{"q0"}, {"qf"}}));
}

TEST(Liveness, GfpWithoutTransitions) {
  const auto net = parse_network("states q0\ninitial q0\nfinal q0\n");
  const auto t = gfp_constraint(net, ids(net, {"q0"}));
  EXPECT_EQ(t.fixed_point(), tuple_of(net, {{"q0"}}));
  EXPECT_FALSE(has_nontrivial_cycle(net, ids(net, {"q0"})).has_cycle);
}

TEST(Liveness, GfpRejectsBadSeeds) {
  const auto net = fixtures::net1();
  EXPECT_THROW(gfp_constraint(net, {}), std::invalid_argument);
  EXPECT_THROW(gfp_constraint(net, ids(net, {"q0", "q0"})), std::invalid_argument);
}

TEST(Liveness, NontrivialCycleFixtures) {
  const auto n1 = fixtures::net1();
  EXPECT_TRUE(has_nontrivial_cycle(n1, ids(n1, {"q0", "qf"})).has_cycle);
  EXPECT_TRUE(find_cycle_explicit(n1, ids(n1, {"q0", "qf"})).has_value());
  const auto n2 = fixtures::net2();
  EXPECT_FALSE(has_nontrivial_cycle(n2, ids(n2, {"q0", "qf"})).has_cycle);
  EXPECT_FALSE(find_cycle_explicit(n2, ids(n2, {"q0", "qf"})).has_value());
  const auto n3 = fixtures::net3();
  EXPECT_TRUE(has_nontrivial_cycle(n3, ids(n3, {"q0", "qf"})).has_cycle);
  EXPECT_TRUE(find_cycle_explicit(n3, ids(n3, {"q0", "qf"})).has_value());
}

TEST(Liveness, CheckFixtures) {
  EXPECT_TRUE(check_liveness(fixtures::net1()).yes());
  EXPECT_TRUE(oracle_liveness(fixtures::net1(), 1));
  EXPECT_FALSE(check_liveness(fixtures::net2()).yes());
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_FALSE(oracle_liveness(fixtures::net2(), k));
  EXPECT_TRUE(check_liveness(fixtures::net3()).yes());
  EXPECT_TRUE(check_liveness(fixtures::net4()).yes());
}

TEST(Liveness, NoFinalsIsNo) {
  const auto net = fixtures::net1().with_finals(StateSet(2));
  const auto v = check_liveness(net);
  EXPECT_FALSE(v.yes());
  EXPECT_EQ(v.stats.kleene_steps, 0U);
}

TEST(Liveness, WitnessOnlyWhenRequested) {
  EXPECT_FALSE(check_liveness(fixtures::net1()).witness.has_value());
  CheckOptions opt;
  opt.emit_witness = true;
  const auto v = check_liveness(fixtures::net1(), opt);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(validate_witness(fixtures::net1(), *v.witness));
  EXPECT_FALSE(check_liveness(fixtures::net2(), opt).witness.has_value());
}

TEST(Liveness, TraceShape) {
  for (std::size_t i = 0; i < testing::kCorpusSize; ++i) {
    const auto net = testing::corpus_network(i);
    const auto seeds = reachable_states(net).members();
    const auto t = gfp_constraint(net, seeds);
    const auto seed_tuple = SetTuple::singletons(seeds, net.num_states());
    ASSERT_GE(t.iterates.size(), 2U);
    EXPECT_EQ(t.iterates[t.iterates.size() - 1], t.iterates[t.iterates.size() - 2]);
    for (std::size_t k = 0; k + 2 < t.iterates.size(); ++k) {
      EXPECT_TRUE(t.iterates[k + 1].is_below(t.iterates[k]));
      EXPECT_NE(t.iterates[k + 1], t.iterates[k]);
    }
    for (const auto& c : t.iterates) EXPECT_TRUE(seed_tuple.is_below(c));
    EXPECT_EQ(kleene_step(net, t.fixed_point(), seed_tuple), t.fixed_point());
    EXPECT_LE(t.rounds, seeds.size() * net.num_states() + 1);
  }
}

TEST(Liveness, AgreesWithExplicitSearch) {
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < testing::kCorpusSize; ++i) {
    const auto net = testing::corpus_network(i);
    const auto seeds = reachable_states(net).members();
    const bool fast = has_nontrivial_cycle(net, seeds).has_cycle;
    const bool slow = find_cycle_explicit(net, seeds).has_value();
    ASSERT_EQ(fast, slow) << "instance " << i << "\n" << serialize_network(net);
    cycles += slow ? 1 : 0;
  }
  // Both outcomes occur in the corpus.
  EXPECT_GT(cycles, 0U);
  EXPECT_LT(cycles, testing::kCorpusSize);
}

TEST(Liveness, AgreesWithExplicitSearchOnArbitrarySeeds) {
  for (std::size_t i = 0; i < 300; ++i) {
    const auto net = testing::corpus_network(i);
    const std::size_t n = net.num_states();
    // Every non-empty subset of states as the seed list.
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      std::vector<StateId> seeds;
      for (std::uint32_t q = 0; q < n; ++q) {
        if ((mask >> q) & 1U) seeds.push_back(StateId{q});
      }
      ASSERT_EQ(has_nontrivial_cycle(net, seeds).has_cycle, find_cycle_explicit(net, seeds).has_value())
          << "instance " << i << " mask " << mask;
    }
  }
}

TEST(Liveness, GreatestFixedPoint) {
  for (std::size_t i = 0; i < 240; ++i) {
    const auto net = testing::corpus_network(i);
    const auto seeds = reachable_states(net).members();
    if (seeds.size() > 3) continue;
    const auto seed_tuple = SetTuple::singletons(seeds, net.num_states());
    const auto gfp = gfp_constraint(net, seeds).fixed_point();
    for (const auto& c : testing::all_tuples(net.num_states(), seeds.size())) {
      if (!seed_tuple.is_below(c)) continue;
      if (kleene_step(net, c, seed_tuple) == c) EXPECT_TRUE(c.is_below(gfp)) << "instance " << i;
    }
  }
}

TEST(Liveness, IsolatedStateDoesNotChangeVerdict) {
  for (std::size_t i = 0; i < testing::kCorpusSize; ++i) {
    const auto net = testing::corpus_network(i);
    auto spec = to_spec(net);
    spec.states.push_back("idle");
    if (i % 2 == 0) {
      spec.finals.push_back("idle");
    }
    const auto padded = validate_network(spec);
    EXPECT_EQ(check_liveness(net).yes(), check_liveness(padded).yes()) << "instance " << i;
  }
}

}  // namespace
}  // namespace bnlive
