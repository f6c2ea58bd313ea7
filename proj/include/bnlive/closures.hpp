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

#ifndef BNLIVE_CLOSURES_HPP_
#define BNLIVE_CLOSURES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "bnlive/model.hpp"
#include "bnlive/state_set.hpp"

namespace bnlive {

// Constrained closure operators over tuples of state sets.
//
// Both operators saturate a tuple R, seeded with X, under two rules in which
// every transition used by component i must stay inside C_i:
//
//  (i)  internal send:  s in R_i, s !a s'            =>  s' in R_i   (post)
//                       s' in R_i, s !a s'           =>  s  in R_i   (pre)
//  (ii) witnessed receive: some component l holds both ends of a send s1 !a s2,
//                       s in R_i, s ?a s'            =>  s' in R_i   (post)
//                       s' in R_i, s ?a s'           =>  s  in R_i   (pre)
//
// The result is reflexive (contains the seeds) and bounded by the constraint.

enum class ClosureDirection { kPost, kPre };

/// A send transition fully contained in a component; enables rule (ii) for
/// its message.
struct SendWitness {
  std::size_t component = 0;
  TransitionIndex send = 0;
};

/// One state added during saturation, with the rule that added it.
struct Insertion {
  std::size_t component = 0;
  StateId state;
  /// Send transition for rule (i), receive transition for rule (ii).
  TransitionIndex reason = 0;
  /// Present exactly for rule (ii).
  std::optional<SendWitness> witness;
};

struct ClosureTrace {
  SetTuple result;
  /// In insertion order.
  std::vector<Insertion> insertions;
  /// Full passes over all components, including the final quiet pass.
  std::size_t rounds = 0;
};

struct ClosureOptions {
  /// Component visiting order per round; empty means 0..m-1.
  std::vector<std::size_t> component_order;
};

SetTuple post_closure(const BroadcastNetwork& net, const SetTuple& constraint, const SetTuple& seeds);
SetTuple pre_closure(const BroadcastNetwork& net, const SetTuple& constraint, const SetTuple& seeds);

/// As above but also reports how every state was derived.
/// Throws ClosureError on arity mismatch or seeds outside the constraint.
ClosureTrace saturate(const BroadcastNetwork& net, ClosureDirection direction, const SetTuple& constraint,
                      const SetTuple& seeds, const ClosureOptions& options = {});

}  // namespace bnlive

#endif  // BNLIVE_CLOSURES_HPP_
