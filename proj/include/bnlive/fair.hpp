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

#ifndef BNLIVE_FAIR_HPP_
#define BNLIVE_FAIR_HPP_

#include <vector>

#include "bnlive/liveness.hpp"
#include "bnlive/model.hpp"

namespace bnlive {

enum class Phase : std::uint8_t { kBase, kHat, kTilde };

/// Three-phase copy of a network that turns good cycles into plain cycles.
///
/// A client leaves the base copy Q as soon as it moves, landing in the hat
/// copy. From a hat copy of a final state it may switch to the tilde copy by
/// sending the fresh, receiver-less message, and from any tilde state it may
/// return to Q the same way. The tilde copy also replays the original
/// transitions, which lets it mimic the computation prefix.
///
/// State layout: [0, n) base, [n, 2n) hat, [2n, 3n) tilde.
struct InstrumentedNetwork {
  BroadcastNetwork net;
  std::vector<Phase> phase_of;
  std::vector<StateId> base_of;
  MessageId fresh;
  std::size_t base_states = 0;

  StateId hat(StateId q) const { return StateId{static_cast<std::uint32_t>(q.index + base_states)}; }
  StateId tilde(StateId q) const { return StateId{static_cast<std::uint32_t>(q.index + 2 * base_states)}; }
};

/// Builds the instrumented network; initial states are the tilde copies of I.
/// Names: q, q__hat, q__tilde; fresh message __n.
InstrumentedNetwork instrument(const BroadcastNetwork& net);

struct FairVerdict {
  Verdict verdict;
  /// The network the witness (if any) lives on.
  InstrumentedNetwork instrumented;
};

/// Is there an initialized infinite computation in which every client that
/// moves infinitely often visits final states infinitely often?
FairVerdict check_fair_liveness(const BroadcastNetwork& net, const CheckOptions& options = {});

}  // namespace bnlive

#endif  // BNLIVE_FAIR_HPP_
