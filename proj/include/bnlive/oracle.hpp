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

#ifndef BNLIVE_ORACLE_HPP_
#define BNLIVE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bnlive/model.hpp"
#include "bnlive/witness.hpp"

// Explicit-state semantics with a fixed number k of clients. Deliberately
// naive: no symmetry or partial-order reduction. A YES from any procedure here
// is a real computation; a NO only speaks for the given k.

namespace bnlive {

inline constexpr std::size_t kDefaultOracleCap = 1000000;

struct Successor {
  Configuration config;
  /// Sender and receivers, ascending client indices.
  std::vector<std::uint32_t> participants;
  /// One step producing this successor.
  ConcreteStep step;
};

/// All distinct (successor, participants) pairs of c. Receivers are chosen
/// independently per client: idle or any matching receive.
std::vector<Successor> step_successors(const BroadcastNetwork& net, const Configuration& c);

/// Configurations reachable from I^k, sorted. Throws CapExceeded past `cap`.
std::vector<Configuration> bounded_reach_configs(const BroadcastNetwork& net, std::size_t k,
                                                 std::size_t cap = kDefaultOracleCap);

/// Some reachable configuration containing a final state lies on a cycle.
bool oracle_liveness(const BroadcastNetwork& net, std::size_t k, std::size_t cap = kDefaultOracleCap);

/// Some reachable configuration c admits a good cycle c =>F c: every client
/// that moves during the cycle occupies a final state at some point of it.
bool oracle_fair(const BroadcastNetwork& net, std::size_t k, std::size_t cap = kDefaultOracleCap);

/// A reachable lasso: prefix from an initial configuration to c and a cycle
/// c ->+ c.
struct Lasso {
  ConcreteComputation prefix;
  ConcreteComputation cycle;
};

/// Finds a lasso whose cycle configuration satisfies `accept`.
std::optional<Lasso> find_lasso(const BroadcastNetwork& net, std::size_t k,
                                const std::function<bool(const Configuration&)>& accept,
                                std::size_t cap = kDefaultOracleCap);

/// Finds a lasso whose cycle is good for the network's final states.
std::optional<Lasso> find_good_lasso(const BroadcastNetwork& net, std::size_t k, std::size_t cap = kDefaultOracleCap);

/// Every client moving in the cycle occupies a final state somewhere in it.
bool is_good_cycle(const BroadcastNetwork& net, const ConcreteComputation& cycle);

}  // namespace bnlive

#endif  // BNLIVE_ORACLE_HPP_
