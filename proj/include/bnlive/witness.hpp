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

#ifndef BNLIVE_WITNESS_HPP_
#define BNLIVE_WITNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bnlive/model.hpp"
#include "bnlive/state_set.hpp"

namespace bnlive {

struct FixedPointTrace;

inline constexpr std::size_t kDefaultClientCap = 100000;

// ---------------------------------------------------------------------------
// The graph of set tuples.
//
// A vertex holds one state set per component. An edge mimics one
// broadcast: the sender component takes a send whose source it contains.
// In each component, `gens` are receive successors that get added, and
// `kills` are receive-enabled states that get emptied. Every killed state
// needs a receive successor among that component's gens. The sender
// component also gains the send target and, with drop_sender_source, loses
// the send source (unless something re-adds it).
// ---------------------------------------------------------------------------

/// Full justification of one edge.
struct EdgeCertificate {
  MessageId message;
  std::size_t sender_component = 0;
  StateId sender_from;
  StateId sender_to;
  /// Remove sender_from from the sender component before adding targets.
  bool drop_sender_source = false;
  std::vector<StateSet> gens;
  std::vector<StateSet> kills;

  friend bool operator==(const EdgeCertificate&, const EdgeCertificate&) = default;
};

/// Certificate with empty Gen/Kill sets in every component.
EdgeCertificate make_certificate(const BroadcastNetwork& net, std::size_t arity, std::size_t sender_component,
                                 TransitionIndex send, bool drop_sender_source = false);

struct EdgeRejection {
  /// 0 for malformed certificates (arity, unknown ids), else the violated
  /// edge condition 1, 2 or 3.
  int condition = 0;
  std::size_t component = 0;
  std::string detail;
};

using EdgeResult = std::variant<SetTuple, EdgeRejection>;

/// States reachable from S by one receive of a.
StateSet post_receives(const BroadcastNetwork& net, MessageId a, const StateSet& states);
/// States of S with at least one receive of a.
StateSet enabled_receives(const BroadcastNetwork& net, MessageId a, const StateSet& states);

/// Checks a certificate against `from` and returns the successor vertex.
EdgeResult is_edge(const BroadcastNetwork& net, const SetTuple& from, const EdgeCertificate& cert);

/// Replays a path; throws InvalidPath naming the first rejected edge.
/// Returns all visited vertices, starting with `from`.
std::vector<SetTuple> replay_path(const BroadcastNetwork& net, const SetTuple& from,
                                  const std::vector<EdgeCertificate>& path);

struct ExplicitCaps {
  std::size_t max_states = 6;
  std::size_t max_arity = 4;
  /// Maximum number of distinct vertices visited.
  std::size_t node_budget = 1U << 22;
};

/// Breadth-first search in the graph from ({s_1}, ..., {s_m}) back to itself.
/// Returns a shortest cycle of length >= 1, or nullopt.
/// Throws CapExceeded when the instance or the search exceeds `caps`.
std::optional<std::vector<EdgeCertificate>> find_cycle_explicit(const BroadcastNetwork& net,
                                                                const std::vector<StateId>& seeds,
                                                                const ExplicitCaps& caps = {});

/// Path split into a non-decreasing prefix edges[0, peak) and a
/// non-increasing suffix edges[peak, end).
struct NormalPath {
  std::vector<EdgeCertificate> edges;
  std::size_t peak = 0;
};

/// Rewrites a path into normal form with identical endpoints: the original
/// edges replayed without deletions, followed by deletions of the surplus in
/// order of each deleted state's last occurrence. A path that already has
/// normal form is returned with its growing certificates stripped of kills.
/// Throws InvalidPath if `path` does not replay from `from`.
NormalPath normalize_path(const BroadcastNetwork& net, const std::vector<EdgeCertificate>& path,
                          const SetTuple& from);

/// A cycle through the singleton tuple of the seeds, in normal form.
struct SymbolicWitness {
  std::vector<StateId> seeds;
  SetTuple apex;
  std::vector<EdgeCertificate> increasing;
  std::vector<EdgeCertificate> decreasing;

  std::size_t length() const { return increasing.size() + decreasing.size(); }
  std::vector<EdgeCertificate> path() const;
};

/// Builds the increasing path from the post-closure derivation, the
/// decreasing path from the reversed pre-closure derivation, and a self-loop
/// on an internal send when both are empty.
/// Throws TrivialFixedPoint if the fixed point has no internal send.
SymbolicWitness extract_cycle_from_gfp(const BroadcastNetwork& net, const FixedPointTrace& trace);

/// Checks every structural invariant of a witness (edges replay, monotone
/// halves, returns to the seeds, length >= 1).
bool validate_witness(const BroadcastNetwork& net, const SymbolicWitness& witness, std::string* why = nullptr);

/// One broadcast step: a sender and any set of receivers; all others idle.
struct ConcreteStep {
  MessageId message;
  std::uint32_t sender = 0;
  TransitionIndex sender_transition = 0;
  /// (client index, receive transition), sorted by client index.
  std::vector<std::pair<std::uint32_t, TransitionIndex>> receivers;

  friend bool operator==(const ConcreteStep&, const ConcreteStep&) = default;
};

struct ConcreteComputation {
  Configuration start;
  std::vector<ConcreteStep> steps;
};

/// Applies a step in place. Returns false (leaving `config` unspecified) if
/// the step is not a legal broadcast from `config`.
bool apply_step(const BroadcastNetwork& net, Configuration& config, const ConcreteStep& step);

/// Final configuration of a computation, or nullopt if some step is illegal.
std::optional<Configuration> replay_computation(const BroadcastNetwork& net, const ConcreteComputation& comp);

/// True iff every step is a legal broadcast transition.
bool validate_computation(const BroadcastNetwork& net, const ConcreteComputation& comp);

/// m * |Q|^length, saturating at SIZE_MAX.
std::size_t predicted_clients(std::size_t arity, std::size_t num_states, std::size_t length);

struct ConcretizeOptions {
  std::size_t cap_clients = kDefaultClientCap;
  /// Drop clients that never move, keeping one client per block.
  bool drop_idle_clients = false;
};

/// Turns a symbolic cycle into a cyclic computation c ->+ c with
/// Set(c) = seeds over m * |Q|^length clients, block i starting in s_i.
/// Throws CapExceeded or InvalidWitness.
ConcreteComputation concretize(const BroadcastNetwork& net, const SymbolicWitness& witness,
                               const ConcretizeOptions& options = {});

}  // namespace bnlive

#endif  // BNLIVE_WITNESS_HPP_
