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

#include "bnlive/generate.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace bnlive {

BroadcastNetwork random_network(const GenParams& params, std::uint64_t seed) {
  if (params.states == 0 || params.messages == 0) {
    throw std::invalid_argument("need at least one state and one message");
  }
  // Raw engine output only: distributions are not portable across standard
  // libraries, the engine is.
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  NetworkSpec spec;
  for (std::size_t i = 0; i < params.states; ++i) spec.states.push_back("q" + std::to_string(i));
  for (std::size_t i = 0; i < params.messages; ++i) spec.messages.push_back("m" + std::to_string(i));

  if (params.random_marking) {
    for (const auto& s : spec.states) {
      if (draw(3) == 0) spec.initials.push_back(s);
      if (draw(2) == 0) spec.finals.push_back(s);
    }
    if (spec.initials.empty()) spec.initials.push_back(spec.states[draw(params.states)]);
  } else {
    spec.initials.push_back(spec.states.front());
    spec.finals.push_back(spec.states.back());
  }

  bool any_send = false;
  for (std::size_t i = 0; i < params.transitions; ++i) {
    NetworkSpec::RawTransition t;
    t.from = spec.states[draw(params.states)];
    t.kind = draw(2) == 0 ? ActionKind::kSend : ActionKind::kReceive;
    t.message = spec.messages[draw(params.messages)];
    t.to = spec.states[draw(params.states)];
    any_send |= t.kind == ActionKind::kSend;
    spec.transitions.push_back(std::move(t));
  }
  if (!any_send && !spec.transitions.empty()) spec.transitions.front().kind = ActionKind::kSend;
  return validate_network(spec);
}

}  // namespace bnlive
