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

#ifndef BNLIVE_LIVENESS_HPP_
#define BNLIVE_LIVENESS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "bnlive/model.hpp"
#include "bnlive/state_set.hpp"
#include "bnlive/witness.hpp"

namespace bnlive {

/// Descending iterates of constraint -> post_closure(constraint, seeds) meet
/// pre_closure(constraint, seeds), started from the full tuple.
struct FixedPointTrace {
  std::vector<StateId> seeds;
  /// The last two entries are equal.
  std::vector<SetTuple> iterates;
  /// Number of Kleene steps (iterates.size()).
  std::size_t rounds = 0;

  const SetTuple& fixed_point() const { return iterates.back(); }
};

/// Throws std::invalid_argument if seeds are empty or not pairwise distinct.
FixedPointTrace gfp_constraint(const BroadcastNetwork& net, const std::vector<StateId>& seeds);

/// True iff some component of the fixed point holds both ends of a send.
bool is_nontrivial(const BroadcastNetwork& net, const SetTuple& fixed_point);

struct CycleTest {
  bool has_cycle = false;
  FixedPointTrace trace;
};

/// Decides whether ({s_1}, ..., {s_m}) lies on a cycle of length >= 1 in the
/// graph of set tuples.
CycleTest has_nontrivial_cycle(const BroadcastNetwork& net, const std::vector<StateId>& seeds);

enum class Answer { kYes, kNo };

struct VerdictStats {
  double coverability_ms = 0;
  double fixed_point_ms = 0;
  double witness_ms = 0;
  std::size_t kleene_steps = 0;
  std::size_t seed_count = 0;
};

struct CheckOptions {
  bool emit_witness = false;
  bool concretize = false;
  std::size_t cap_clients = kDefaultClientCap;
};

struct Verdict {
  Answer answer = Answer::kNo;
  std::optional<SymbolicWitness> witness;
  /// Set when concretization was requested and fit under the client cap.
  std::optional<ConcreteComputation> concrete;
  /// Set when concretization was requested but exceeded the client cap.
  bool concretization_capped = false;
  VerdictStats stats;

  bool yes() const { return answer == Answer::kYes; }
};

/// Is there an initialized infinite computation in which some client visits
/// a final state infinitely often?
Verdict check_liveness(const BroadcastNetwork& net, const CheckOptions& options = {});

/// Shared tail of the liveness and fair-liveness checks: the cycle test on the
/// given seeds plus optional witness extraction.
Verdict decide_cycle(const BroadcastNetwork& net, const std::vector<StateId>& seeds, const CheckOptions& options);

}  // namespace bnlive

#endif  // BNLIVE_LIVENESS_HPP_
