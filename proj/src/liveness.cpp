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

#include "bnlive/liveness.hpp"

#include <cassert>
#include <chrono>
#include <stdexcept>

#include "bnlive/closures.hpp"
#include "bnlive/coverability.hpp"
#include "bnlive/error.hpp"

namespace bnlive {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

FixedPointTrace gfp_constraint(const BroadcastNetwork& net, const std::vector<StateId>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("seed list is empty");
  StateSet distinct(net.num_states());
  for (StateId s : seeds) {
    if (s.index >= net.num_states()) throw std::invalid_argument("seed out of range");
    if (!distinct.insert(s)) throw std::invalid_argument("seeds are not pairwise distinct");
  }

  const std::size_t n = net.num_states();
  const std::size_t m = seeds.size();
  const SetTuple seed_tuple = SetTuple::singletons(seeds, n);

  FixedPointTrace trace;
  trace.seeds = seeds;
  SetTuple current = SetTuple::full(m, n);
  while (true) {
    SetTuple next = meet(post_closure(net, current, seed_tuple), pre_closure(net, current, seed_tuple));
    trace.iterates.push_back(next);
    if (trace.iterates.size() >= 2 && next == current) break;
    current = std::move(next);
  }
  trace.rounds = trace.iterates.size();
  assert(trace.rounds <= m * n + 1);
  return trace;
}

bool is_nontrivial(const BroadcastNetwork& net, const SetTuple& fixed_point) {
  for (const Transition& t : net.transitions()) {
    if (!t.is_send()) continue;
    for (std::size_t j = 0; j < fixed_point.arity(); ++j) {
      if (fixed_point[j].contains(t.from) && fixed_point[j].contains(t.to)) return true;
    }
  }
  return false;
}

CycleTest has_nontrivial_cycle(const BroadcastNetwork& net, const std::vector<StateId>& seeds) {
  CycleTest out;
  out.trace = gfp_constraint(net, seeds);
  out.has_cycle = is_nontrivial(net, out.trace.fixed_point());
  return out;
}

Verdict decide_cycle(const BroadcastNetwork& net, const std::vector<StateId>& seeds, const CheckOptions& options) {
  Verdict v;
  v.stats.seed_count = seeds.size();
  if (seeds.empty()) return v;

  auto t0 = Clock::now();
  CycleTest test = has_nontrivial_cycle(net, seeds);
  v.stats.fixed_point_ms = millis_since(t0);
  v.stats.kleene_steps = test.trace.rounds;
  v.answer = test.has_cycle ? Answer::kYes : Answer::kNo;

  if (v.yes() && (options.emit_witness || options.concretize)) {
    t0 = Clock::now();
    v.witness = extract_cycle_from_gfp(net, test.trace);
    if (options.concretize) {
      try {
        v.concrete = concretize(net, *v.witness, ConcretizeOptions{options.cap_clients, false});
      } catch (const CapExceeded&) {
        v.concretization_capped = true;
      }
    }
    v.stats.witness_ms = millis_since(t0);
  }
  return v;
}

Verdict check_liveness(const BroadcastNetwork& net, const CheckOptions& options) {
  const auto t0 = Clock::now();
  const StateSet reachable = reachable_states(net);
  const double cov_ms = millis_since(t0);

  Verdict v;
  if (reachable.intersects(net.finals())) {
    v = decide_cycle(net, reachable.members(), options);
  }
  v.stats.coverability_ms = cov_ms;
  v.stats.seed_count = reachable.size();
  return v;
}

}  // namespace bnlive
