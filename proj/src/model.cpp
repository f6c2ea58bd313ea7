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

#include "bnlive/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "bnlive/error.hpp"

namespace bnlive {

namespace {

std::size_t line_at(const std::vector<std::size_t>& lines, std::size_t i) {
  return i < lines.size() ? lines[i] : 0;
}

struct TransitionHash {
  std::size_t operator()(const Transition& t) const {
    std::size_t h = t.from.index;
    h = h * 31 + static_cast<std::size_t>(t.action.kind);
    h = h * 1000003 + t.action.message.index;
    return h * 1000003 + t.to.index;
  }
};

}  // namespace

std::optional<StateId> BroadcastNetwork::find_state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MessageId> BroadcastNetwork::find_message(std::string_view name) const {
  auto it = message_index_.find(std::string(name));
  if (it == message_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<TransitionIndex> BroadcastNetwork::find_transition(const Transition& t) const {
  if (t.from.index >= num_states()) return std::nullopt;
  const auto& candidates = t.is_send() ? sends_from(t.from) : receives_from(t.from);
  for (TransitionIndex i : candidates) {
    if (transitions_[i] == t) return i;
  }
  return std::nullopt;
}

BroadcastNetwork BroadcastNetwork::with_finals(const StateSet& finals) const {
  BroadcastNetwork copy = *this;
  copy.finals_ = finals;
  return copy;
}

void BroadcastNetwork::build_indices() {
  const std::size_t n = states_.size();
  state_index_.clear();
  message_index_.clear();
  for (std::size_t i = 0; i < n; ++i) state_index_.emplace(states_[i], StateId{static_cast<std::uint32_t>(i)});
  for (std::size_t i = 0; i < messages_.size(); ++i) {
    message_index_.emplace(messages_[i], MessageId{static_cast<std::uint32_t>(i)});
  }
  sends_from_.assign(n, {});
  receives_from_.assign(n, {});
  sends_into_.assign(n, {});
  receives_into_.assign(n, {});
  sends_of_.assign(messages_.size(), {});
  receives_of_.assign(messages_.size(), {});
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto idx = static_cast<TransitionIndex>(i);
    const Transition& t = transitions_[i];
    if (t.is_send()) {
      sends_from_[t.from.index].push_back(idx);
      sends_into_[t.to.index].push_back(idx);
      sends_of_[t.action.message.index].push_back(idx);
    } else {
      receives_from_[t.from.index].push_back(idx);
      receives_into_[t.to.index].push_back(idx);
      receives_of_[t.action.message.index].push_back(idx);
    }
  }
}

BroadcastNetwork validate_network(const NetworkSpec& raw) {
  using Kind = ModelError::Kind;
  BroadcastNetwork net;
  net.name_ = raw.name;

  std::unordered_map<std::string, StateId> states;
  for (std::size_t i = 0; i < raw.states.size(); ++i) {
    if (!states.emplace(raw.states[i], StateId{static_cast<std::uint32_t>(i)}).second) {
      throw ModelError(Kind::kDuplicateName, raw.states[i], line_at(raw.state_lines, i));
    }
  }
  std::unordered_map<std::string, MessageId> messages;
  for (std::size_t i = 0; i < raw.messages.size(); ++i) {
    if (!messages.emplace(raw.messages[i], MessageId{static_cast<std::uint32_t>(i)}).second) {
      throw ModelError(Kind::kDuplicateName, raw.messages[i], line_at(raw.message_lines, i));
    }
  }
  if (raw.initials.empty()) throw ModelError(Kind::kEmptyInitials, "");

  auto resolve_state = [&](const std::string& name, std::size_t line) {
    auto it = states.find(name);
    if (it == states.end()) throw ModelError(Kind::kDanglingStateRef, name, line);
    return it->second;
  };

  const std::size_t n = raw.states.size();
  net.states_ = raw.states;
  net.messages_ = raw.messages;
  net.initials_ = StateSet(n);
  net.finals_ = StateSet(n);
  for (std::size_t i = 0; i < raw.initials.size(); ++i) {
    net.initials_.insert(resolve_state(raw.initials[i], line_at(raw.initial_lines, i)));
  }
  for (std::size_t i = 0; i < raw.finals.size(); ++i) {
    net.finals_.insert(resolve_state(raw.finals[i], line_at(raw.final_lines, i)));
  }

  std::unordered_set<Transition, TransitionHash> seen;
  for (const auto& rt : raw.transitions) {
    Transition t;
    t.from = resolve_state(rt.from, rt.line);
    auto msg = messages.find(rt.message);
    if (msg == messages.end()) throw ModelError(Kind::kDanglingMessageRef, rt.message, rt.line);
    t.action = Action{rt.kind, msg->second};
    t.to = resolve_state(rt.to, rt.line);
    if (seen.insert(t).second) net.transitions_.push_back(t);
  }
  net.build_indices();
  return net;
}

NetworkSpec to_spec(const BroadcastNetwork& net) {
  NetworkSpec spec;
  spec.name = net.name();
  spec.messages = net.message_names();
  spec.states = net.state_names();
  net.initials().for_each([&](StateId s) { spec.initials.push_back(net.state_name(s)); });
  net.finals().for_each([&](StateId s) { spec.finals.push_back(net.state_name(s)); });
  for (const Transition& t : net.transitions()) {
    spec.transitions.push_back({net.state_name(t.from), t.action.kind, net.message_name(t.action.message),
                                net.state_name(t.to), 0});
  }
  return spec;
}

StateSet support(const BroadcastNetwork& net, const Configuration& c) {
  StateSet s(net.num_states());
  for (StateId q : c) s.insert(q);
  return s;
}

std::string to_string(const BroadcastNetwork& net, const Transition& t) {
  return net.state_name(t.from) + (t.is_send() ? " !" : " ?") + net.message_name(t.action.message) + " " +
         net.state_name(t.to);
}

namespace fixtures {

namespace {

NetworkSpec::RawTransition send(std::string from, std::string msg, std::string to) {
  return {std::move(from), ActionKind::kSend, std::move(msg), std::move(to), 0};
}
NetworkSpec::RawTransition recv(std::string from, std::string msg, std::string to) {
  return {std::move(from), ActionKind::kReceive, std::move(msg), std::move(to), 0};
}

}  // namespace

BroadcastNetwork net1() {
  NetworkSpec s;
  s.messages = {"a", "b"};
  s.states = {"q0", "qf"};
  s.initials = {"q0"};
  s.finals = {"qf"};
  s.transitions = {send("q0", "a", "qf"), send("qf", "b", "qf")};
  return validate_network(s);
}

BroadcastNetwork net2() {
  NetworkSpec s;
  s.messages = {"a"};
  s.states = {"q0", "qf"};
  s.initials = {"q0"};
  s.finals = {"qf"};
  s.transitions = {send("q0", "a", "qf")};
  return validate_network(s);
}

BroadcastNetwork net3() {
  NetworkSpec s;
  s.messages = {"a"};
  s.states = {"q0", "qf"};
  s.initials = {"q0"};
  s.finals = {"qf"};
  s.transitions = {send("q0", "a", "q0"), recv("q0", "a", "qf")};
  return validate_network(s);
}

BroadcastNetwork net4() {
  NetworkSpec s;
  s.messages = {"a"};
  s.states = {"q0", "q1"};
  s.initials = {"q0"};
  s.finals = {"q1"};
  s.transitions = {send("q0", "a", "q1"), send("q1", "a", "q0")};
  return validate_network(s);
}

}  // namespace fixtures

}  // namespace bnlive
