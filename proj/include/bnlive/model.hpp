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

#ifndef BNLIVE_MODEL_HPP_
#define BNLIVE_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bnlive/ids.hpp"
#include "bnlive/state_set.hpp"

namespace bnlive {

enum class ActionKind : std::uint8_t { kSend, kReceive };

struct Action {
  ActionKind kind = ActionKind::kSend;
  MessageId message;
  friend bool operator==(const Action&, const Action&) = default;
};

struct Transition {
  StateId from;
  Action action;
  StateId to;

  bool is_send() const { return action.kind == ActionKind::kSend; }
  bool is_receive() const { return action.kind == ActionKind::kReceive; }
  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Index into BroadcastNetwork::transitions().
using TransitionIndex = std::uint32_t;

/// Name-based, unvalidated description of a network. This is what parsers and
/// generators produce; validate_network() turns it into a BroadcastNetwork.
struct NetworkSpec {
  struct RawTransition {
    std::string from;
    ActionKind kind = ActionKind::kSend;
    std::string message;
    std::string to;
    std::size_t line = 0;
  };

  std::string name;
  std::vector<std::string> messages;
  std::vector<std::string> states;
  std::vector<std::string> initials;
  std::vector<std::string> finals;
  std::vector<RawTransition> transitions;

  // Source lines for diagnostics (0 = unknown). Parallel to the vectors above.
  std::vector<std::size_t> message_lines;
  std::vector<std::size_t> state_lines;
  std::vector<std::size_t> initial_lines;
  std::vector<std::size_t> final_lines;
};

/// A validated network: message names, the client automaton (states,
/// initial states, transitions) and final states. Immutable once built.
class BroadcastNetwork {
 public:
  const std::string& name() const { return name_; }
  std::size_t num_states() const { return states_.size(); }
  std::size_t num_messages() const { return messages_.size(); }

  const std::vector<std::string>& state_names() const { return states_; }
  const std::vector<std::string>& message_names() const { return messages_; }
  const std::string& state_name(StateId s) const { return states_[s.index]; }
  const std::string& message_name(MessageId m) const { return messages_[m.index]; }
  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<MessageId> find_message(std::string_view name) const;

  const StateSet& initials() const { return initials_; }
  const StateSet& finals() const { return finals_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const Transition& transition(TransitionIndex t) const { return transitions_[t]; }
  std::optional<TransitionIndex> find_transition(const Transition& t) const;

  /// Send/receive transitions leaving or entering a state.
  const std::vector<TransitionIndex>& sends_from(StateId s) const { return sends_from_[s.index]; }
  const std::vector<TransitionIndex>& receives_from(StateId s) const { return receives_from_[s.index]; }
  const std::vector<TransitionIndex>& sends_into(StateId s) const { return sends_into_[s.index]; }
  const std::vector<TransitionIndex>& receives_into(StateId s) const { return receives_into_[s.index]; }
  /// All send (receive) transitions carrying a message.
  const std::vector<TransitionIndex>& sends_of(MessageId m) const { return sends_of_[m.index]; }
  const std::vector<TransitionIndex>& receives_of(MessageId m) const { return receives_of_[m.index]; }

  StateSet empty_set() const { return StateSet(num_states()); }
  StateSet all_states() const { return StateSet::full(num_states()); }

  /// Copy with a different set of final states.
  BroadcastNetwork with_finals(const StateSet& finals) const;

  friend bool operator==(const BroadcastNetwork& a, const BroadcastNetwork& b) {
    return a.name_ == b.name_ && a.messages_ == b.messages_ && a.states_ == b.states_ &&
           a.initials_ == b.initials_ && a.finals_ == b.finals_ && a.transitions_ == b.transitions_;
  }

 private:
  friend BroadcastNetwork validate_network(const NetworkSpec& raw);
  void build_indices();

  std::string name_;
  std::vector<std::string> messages_;
  std::vector<std::string> states_;
  StateSet initials_;
  StateSet finals_;
  std::vector<Transition> transitions_;

  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, MessageId> message_index_;
  std::vector<std::vector<TransitionIndex>> sends_from_, receives_from_, sends_into_, receives_into_;
  std::vector<std::vector<TransitionIndex>> sends_of_, receives_of_;
};

/// Resolves names to dense ids and checks the network invariants.
/// Duplicate transitions are dropped, keeping first-occurrence order.
/// Throws ModelError naming the offending entity.
BroadcastNetwork validate_network(const NetworkSpec& raw);

/// Inverse of validate_network: the name-based description of a network.
NetworkSpec to_spec(const BroadcastNetwork& net);

/// Ordered tuple of client states; length fixed within one computation.
using Configuration = std::vector<StateId>;

/// Set(c): the distinct states occurring in c.
StateSet support(const BroadcastNetwork& net, const Configuration& c);

std::string to_string(const BroadcastNetwork& net, const Transition& t);

namespace fixtures {

/// messages {a,b}; states {q0,qf}; I={q0}; F={qf}; q0 !a qf, qf !b qf.
BroadcastNetwork net1();
/// messages {a}; states {q0,qf}; I={q0}; F={qf}; q0 !a qf.
BroadcastNetwork net2();
/// messages {a}; states {q0,qf}; I={q0}; F={qf}; q0 !a q0, q0 ?a qf.
BroadcastNetwork net3();
/// messages {a}; states {q0,q1}; I={q0}; F={q1}; q0 !a q1, q1 !a q0.
BroadcastNetwork net4();

}  // namespace fixtures

}  // namespace bnlive

#endif  // BNLIVE_MODEL_HPP_
