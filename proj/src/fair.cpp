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

#include "bnlive/fair.hpp"

#include <chrono>

#include "bnlive/coverability.hpp"

namespace bnlive {

InstrumentedNetwork instrument(const BroadcastNetwork& net) {
  const std::size_t n = net.num_states();
  NetworkSpec spec;
  spec.name = net.name();
  spec.messages = net.message_names();
  spec.messages.push_back("__n");

  InstrumentedNetwork out;
  out.base_states = n;
  out.fresh = MessageId{static_cast<std::uint32_t>(net.num_messages())};
  for (Phase phase : {Phase::kBase, Phase::kHat, Phase::kTilde}) {
    const char* suffix = phase == Phase::kBase ? "" : phase == Phase::kHat ? "__hat" : "__tilde";
    for (std::size_t q = 0; q < n; ++q) {
      spec.states.push_back(net.state_names()[q] + suffix);
      out.phase_of.push_back(phase);
      out.base_of.push_back(StateId{static_cast<std::uint32_t>(q)});
    }
  }
  const auto& names = spec.states;
  auto base = [&](StateId q) { return names[q.index]; };
  auto hat = [&](StateId q) { return names[q.index + n]; };
  auto tilde = [&](StateId q) { return names[q.index + 2 * n]; };

  net.initials().for_each([&](StateId q) { spec.initials.push_back(tilde(q)); });
  for (const Transition& t : net.transitions()) {
    const std::string& msg = net.message_name(t.action.message);
    spec.transitions.push_back({base(t.from), t.action.kind, msg, hat(t.to), 0});
    spec.transitions.push_back({hat(t.from), t.action.kind, msg, hat(t.to), 0});
    spec.transitions.push_back({tilde(t.from), t.action.kind, msg, tilde(t.to), 0});
  }
  net.finals().for_each([&](StateId q) { spec.transitions.push_back({hat(q), ActionKind::kSend, "__n", tilde(q), 0}); });
  for (std::size_t q = 0; q < n; ++q) {
    const StateId s{static_cast<std::uint32_t>(q)};
    spec.transitions.push_back({tilde(s), ActionKind::kSend, "__n", base(s), 0});
  }
  out.net = validate_network(spec);
  return out;
}

FairVerdict check_fair_liveness(const BroadcastNetwork& net, const CheckOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  FairVerdict out{Verdict{}, instrument(net)};
  const InstrumentedNetwork& inst = out.instrumented;

  StateSet reachable = reachable_states(inst.net);
  std::vector<StateId> seeds;
  reachable.for_each([&](StateId s) {
    if (inst.phase_of[s.index] == Phase::kBase) seeds.push_back(s);
  });
  const double cov_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  out.verdict = decide_cycle(inst.net, seeds, options);
  out.verdict.stats.coverability_ms = cov_ms;
  out.verdict.stats.seed_count = seeds.size();
  return out;
}

}  // namespace bnlive
