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

#include "bnlive/coverability.hpp"

#include <queue>
#include <vector>

namespace bnlive {

StateSet reachable_states(const BroadcastNetwork& net) {
  StateSet reached(net.num_states());
  std::vector<bool> sendable(net.num_messages(), false);
  // Receive transitions whose source is reached but whose message has no
  // reached sender yet, bucketed by message.
  std::vector<std::vector<TransitionIndex>> waiting(net.num_messages());
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> work;

  auto reach = [&](StateId s) {
    if (reached.insert(s)) work.push(s.index);
  };
  net.initials().for_each(reach);

  while (!work.empty()) {
    const StateId s{work.top()};
    work.pop();
    for (TransitionIndex ti : net.sends_from(s)) {
      const Transition& t = net.transition(ti);
      reach(t.to);
      const auto m = t.action.message.index;
      if (!sendable[m]) {
        sendable[m] = true;
        for (TransitionIndex wi : waiting[m]) reach(net.transition(wi).to);
        waiting[m].clear();
      }
    }
    for (TransitionIndex ti : net.receives_from(s)) {
      const Transition& t = net.transition(ti);
      if (sendable[t.action.message.index]) {
        reach(t.to);
      } else {
        waiting[t.action.message.index].push_back(ti);
      }
    }
  }
  return reached;
}

}  // namespace bnlive
