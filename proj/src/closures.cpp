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

#include "bnlive/closures.hpp"

#include <cassert>
#include <numeric>
#include <string>

#include "bnlive/error.hpp"

namespace bnlive {

namespace {

class Saturation {
 public:
  Saturation(const BroadcastNetwork& net, ClosureDirection dir, const SetTuple& constraint, const SetTuple& seeds)
      : net_(net), post_(dir == ClosureDirection::kPost), constraint_(constraint),
        witness_(net.num_messages()) {
    trace_.result = seeds;
  }

  ClosureTrace run(const ClosureOptions& options) {
    const std::size_t m = constraint_.arity();
    std::vector<std::size_t> order = options.component_order;
    if (order.empty()) {
      order.resize(m);
      std::iota(order.begin(), order.end(), std::size_t{0});
    }
    bool changed = true;
    while (changed) {
      changed = false;
      ++trace_.rounds;
      for (std::size_t i : order) changed |= update_component(i);
    }
    // Every non-final round adds at least one state.
    assert(trace_.rounds <= m * net_.num_states() + 1);
    return std::move(trace_);
  }

 private:
  // The state on the far side of a transition, seen from the saturation
  // direction: the target for post, the source for pre.
  StateId far_end(const Transition& t) const { return post_ ? t.to : t.from; }
  StateId near_end(const Transition& t) const { return post_ ? t.from : t.to; }

  // Saturates component i against the current witness table. Returns true if
  // it added a state or discovered a new witnessed message.
  bool update_component(std::size_t i) {
    StateSet& r = trace_.result[i];
    const StateSet& c = constraint_[i];
    bool progress = false;
    bool new_witness = true;
    while (new_witness) {
      new_witness = false;
      std::vector<StateId> stack = r.members();
      while (!stack.empty()) {
        const StateId s = stack.back();
        stack.pop_back();
        // Rule (i).
        for (TransitionIndex ti : post_ ? net_.sends_from(s) : net_.sends_into(s)) {
          const Transition& t = net_.transition(ti);
          const StateId other = far_end(t);
          if (!c.contains(s) || !c.contains(other)) continue;
          if (r.insert(other)) {
            trace_.insertions.push_back({i, other, ti, std::nullopt});
            stack.push_back(other);
            progress = true;
          }
          auto& w = witness_[t.action.message.index];
          if (!w) {
            w = SendWitness{i, ti};
            new_witness = true;
            progress = true;
          }
        }
        // Rule (ii).
        for (TransitionIndex ti : post_ ? net_.receives_from(s) : net_.receives_into(s)) {
          const Transition& t = net_.transition(ti);
          const auto& w = witness_[t.action.message.index];
          if (!w) continue;
          const StateId other = far_end(t);
          if (!c.contains(s) || !c.contains(other)) continue;
          if (r.insert(other)) {
            trace_.insertions.push_back({i, other, ti, *w});
            stack.push_back(other);
            progress = true;
          }
        }
      }
    }
    return progress;
  }

  const BroadcastNetwork& net_;
  bool post_;
  const SetTuple& constraint_;
  std::vector<std::optional<SendWitness>> witness_;
  ClosureTrace trace_;
};

void check_arguments(const BroadcastNetwork& net, const SetTuple& constraint, const SetTuple& seeds) {
  if (constraint.arity() != seeds.arity()) {
    throw ClosureError(ClosureError::Kind::kArityMismatch,
                       "constraint arity " + std::to_string(constraint.arity()) + " differs from seed arity " +
                           std::to_string(seeds.arity()));
  }
  for (std::size_t i = 0; i < seeds.arity(); ++i) {
    if (constraint[i].universe() != net.num_states() || seeds[i].universe() != net.num_states()) {
      throw ClosureError(ClosureError::Kind::kArityMismatch,
                         "component " + std::to_string(i) + " is not over the network's state universe");
    }
    if (!seeds[i].is_subset_of(constraint[i])) {
      throw ClosureError(ClosureError::Kind::kSeedOutsideConstraint,
                         "seed component " + std::to_string(i) + " is not contained in the constraint");
    }
  }
}

}  // namespace

ClosureTrace saturate(const BroadcastNetwork& net, ClosureDirection direction, const SetTuple& constraint,
                      const SetTuple& seeds, const ClosureOptions& options) {
  check_arguments(net, constraint, seeds);
  if (!options.component_order.empty()) {
    std::vector<bool> hit(seeds.arity(), false);
    for (std::size_t i : options.component_order) {
      if (i >= seeds.arity() || hit[i]) {
        throw ClosureError(ClosureError::Kind::kArityMismatch, "component order is not a permutation");
      }
      hit[i] = true;
    }
    if (options.component_order.size() != seeds.arity()) {
      throw ClosureError(ClosureError::Kind::kArityMismatch, "component order is not a permutation");
    }
  }
  return Saturation(net, direction, constraint, seeds).run(options);
}

SetTuple post_closure(const BroadcastNetwork& net, const SetTuple& constraint, const SetTuple& seeds) {
  return saturate(net, ClosureDirection::kPost, constraint, seeds).result;
}

SetTuple pre_closure(const BroadcastNetwork& net, const SetTuple& constraint, const SetTuple& seeds) {
  return saturate(net, ClosureDirection::kPre, constraint, seeds).result;
}

}  // namespace bnlive
