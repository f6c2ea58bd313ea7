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

#include "bnlive/witness.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <unordered_map>

#include "bnlive/closures.hpp"
#include "bnlive/error.hpp"
#include "bnlive/liveness.hpp"

namespace bnlive {

StateSet post_receives(const BroadcastNetwork& net, MessageId a, const StateSet& states) {
  StateSet out(net.num_states());
  for (TransitionIndex ti : net.receives_of(a)) {
    const Transition& t = net.transition(ti);
    if (states.contains(t.from)) out.insert(t.to);
  }
  return out;
}

StateSet enabled_receives(const BroadcastNetwork& net, MessageId a, const StateSet& states) {
  StateSet out(net.num_states());
  for (TransitionIndex ti : net.receives_of(a)) {
    const Transition& t = net.transition(ti);
    if (states.contains(t.from)) out.insert(t.from);
  }
  return out;
}

EdgeCertificate make_certificate(const BroadcastNetwork& net, std::size_t arity, std::size_t sender_component,
                                 TransitionIndex send, bool drop_sender_source) {
  const Transition& t = net.transition(send);
  EdgeCertificate cert;
  cert.message = t.action.message;
  cert.sender_component = sender_component;
  cert.sender_from = t.from;
  cert.sender_to = t.to;
  cert.drop_sender_source = drop_sender_source;
  cert.gens.assign(arity, net.empty_set());
  cert.kills.assign(arity, net.empty_set());
  return cert;
}

EdgeResult is_edge(const BroadcastNetwork& net, const SetTuple& from, const EdgeCertificate& cert) {
  const std::size_t m = from.arity();
  const std::size_t n = net.num_states();
  if (cert.gens.size() != m || cert.kills.size() != m) {
    return EdgeRejection{0, 0, "certificate arity does not match the vertex"};
  }
  if (cert.sender_component >= m) return EdgeRejection{0, cert.sender_component, "sender component out of range"};
  if (cert.message.index >= net.num_messages() || cert.sender_from.index >= n || cert.sender_to.index >= n) {
    return EdgeRejection{0, cert.sender_component, "unknown message or state"};
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (from[i].universe() != n || cert.gens[i].universe() != n || cert.kills[i].universe() != n) {
      return EdgeRejection{0, i, "set over the wrong state universe"};
    }
  }

  const std::size_t j = cert.sender_component;
  const Transition send{cert.sender_from, Action{ActionKind::kSend, cert.message}, cert.sender_to};
  if (!net.find_transition(send)) return EdgeRejection{1, j, "not a send transition: " + to_string(net, send)};
  if (!from[j].contains(cert.sender_from)) {
    return EdgeRejection{1, j, "sender source " + net.state_name(cert.sender_from) + " not in component"};
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (!cert.gens[i].is_subset_of(post_receives(net, cert.message, from[i]))) {
      return EdgeRejection{2, i, "Gen not contained in the receive successors"};
    }
    if (!cert.kills[i].is_subset_of(enabled_receives(net, cert.message, from[i]))) {
      return EdgeRejection{2, i, "Kill not contained in the receive-enabled states"};
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (StateId q : cert.kills[i].members()) {
      if (!post_receives(net, cert.message, StateSet(n, {q})).intersects(cert.gens[i])) {
        return EdgeRejection{3, i, "killed state " + net.state_name(q) + " has no receive successor in Gen"};
      }
    }
  }

  SetTuple next = from;
  for (std::size_t i = 0; i < m; ++i) {
    StateSet base = from[i];
    if (i == j && cert.drop_sender_source) base.erase(cert.sender_from);
    base -= cert.kills[i];
    base |= cert.gens[i];
    if (i == j) base.insert(cert.sender_to);
    next[i] = std::move(base);
  }
  return next;
}

std::vector<SetTuple> replay_path(const BroadcastNetwork& net, const SetTuple& from,
                                  const std::vector<EdgeCertificate>& path) {
  std::vector<SetTuple> vertices{from};
  vertices.reserve(path.size() + 1);
  for (std::size_t k = 0; k < path.size(); ++k) {
    EdgeResult r = is_edge(net, vertices.back(), path[k]);
    if (auto* rej = std::get_if<EdgeRejection>(&r)) {
      throw InvalidPath("edge " + std::to_string(k) + " rejected (condition " + std::to_string(rej->condition) +
                        ", component " + std::to_string(rej->component) + "): " + rej->detail);
    }
    vertices.push_back(std::move(std::get<SetTuple>(r)));
  }
  return vertices;
}

// ---------------------------------------------------------------------------
// Explicit search.

namespace {

struct ComponentOption {
  StateSet result;
  StateSet gen;
  StateSet kill;
  bool drop = false;
};

// All distinct successor sets of one component under message a, with one
// representative (Gen, Kill[, drop]) each. For the sender component pass the
// send's endpoints.
std::vector<ComponentOption> component_options(const BroadcastNetwork& net, MessageId a, const StateSet& s,
                                               std::optional<std::pair<StateId, StateId>> send) {
  const std::size_t n = net.num_states();
  const auto post = post_receives(net, a, s).members();
  const auto enabled = enabled_receives(net, a, s).members();
  std::vector<StateSet> succ_of;
  succ_of.reserve(enabled.size());
  for (StateId q : enabled) succ_of.push_back(post_receives(net, a, StateSet(n, {q})));

  std::map<std::vector<StateId>, std::size_t> seen;
  std::vector<ComponentOption> out;
  const std::uint64_t gen_count = std::uint64_t{1} << post.size();
  const std::uint64_t kill_count = std::uint64_t{1} << enabled.size();
  for (std::uint64_t gm = 0; gm < gen_count; ++gm) {
    StateSet gen(n);
    for (std::size_t b = 0; b < post.size(); ++b) {
      if ((gm >> b) & 1U) gen.insert(post[b]);
    }
    for (std::uint64_t km = 0; km < kill_count; ++km) {
      StateSet kill(n);
      bool ok = true;
      for (std::size_t b = 0; b < enabled.size() && ok; ++b) {
        if ((km >> b) & 1U) {
          kill.insert(enabled[b]);
          ok = succ_of[b].intersects(gen);
        }
      }
      if (!ok) continue;
      for (int drop = 0; drop < (send ? 2 : 1); ++drop) {
        StateSet result = s;
        if (drop) result.erase(send->first);
        result -= kill;
        result |= gen;
        if (send) result.insert(send->second);
        if (seen.emplace(result.members(), out.size()).second) out.push_back({result, gen, kill, drop != 0});
      }
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<EdgeCertificate>> find_cycle_explicit(const BroadcastNetwork& net,
                                                                const std::vector<StateId>& seeds,
                                                                const ExplicitCaps& caps) {
  const std::size_t n = net.num_states();
  const std::size_t m = seeds.size();
  if (n > caps.max_states || m > caps.max_arity) {
    throw CapExceeded("explicit search limited to " + std::to_string(caps.max_states) + " states and arity " +
                      std::to_string(caps.max_arity));
  }
  const SetTuple start = SetTuple::singletons(seeds, n);

  struct Node {
    SetTuple vertex;
    std::size_t parent;
    EdgeCertificate via;
  };
  std::vector<Node> nodes;
  std::unordered_map<SetTuple, std::size_t, SetTupleHash> index;
  nodes.push_back({start, 0, {}});
  index.emplace(start, 0);
  std::deque<std::size_t> queue{0};

  auto path_to = [&](std::size_t node, EdgeCertificate last) {
    std::vector<EdgeCertificate> path{std::move(last)};
    while (node != 0) {
      path.push_back(nodes[node].via);
      node = nodes[node].parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const SetTuple vertex = nodes[cur].vertex;

    for (std::size_t j = 0; j < m; ++j) {
      for (StateId s : vertex[j].members()) {
        for (TransitionIndex ti : net.sends_from(s)) {
          const Transition& send = net.transition(ti);
          const MessageId a = send.action.message;
          std::vector<std::vector<ComponentOption>> options(m);
          for (std::size_t i = 0; i < m; ++i) {
            options[i] = component_options(net, a, vertex[i],
                                           i == j ? std::optional(std::pair(send.from, send.to)) : std::nullopt);
          }
          // Odometer over the product of per-component options.
          std::vector<std::size_t> pick(m, 0);
          while (true) {
            SetTuple next(m, n);
            EdgeCertificate cert = make_certificate(net, m, j, ti);
            for (std::size_t i = 0; i < m; ++i) {
              const ComponentOption& o = options[i][pick[i]];
              next[i] = o.result;
              cert.gens[i] = o.gen;
              cert.kills[i] = o.kill;
              if (i == j) cert.drop_sender_source = o.drop;
            }
            if (next == start) return path_to(cur, std::move(cert));
            if (!index.contains(next)) {
              if (nodes.size() >= caps.node_budget) throw CapExceeded("explicit search exceeded its node budget");
              index.emplace(next, nodes.size());
              nodes.push_back({std::move(next), cur, std::move(cert)});
              queue.push_back(nodes.size() - 1);
            }
            std::size_t d = 0;
            while (d < m && ++pick[d] == options[d].size()) pick[d++] = 0;
            if (d == m) break;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Normal form.

namespace {

bool is_below_all(const std::vector<SetTuple>& v, std::size_t lo, std::size_t hi, bool growing) {
  for (std::size_t k = lo; k + 1 <= hi; ++k) {
    if (growing ? !v[k].is_below(v[k + 1]) : !v[k + 1].is_below(v[k])) return false;
  }
  return true;
}

EdgeCertificate without_deletions(EdgeCertificate cert) {
  for (auto& k : cert.kills) k -= k;
  cert.drop_sender_source = false;
  return cert;
}

}  // namespace

NormalPath normalize_path(const BroadcastNetwork& net, const std::vector<EdgeCertificate>& path,
                          const SetTuple& from) {
  const std::vector<SetTuple> vertices = replay_path(net, from, path);
  const std::size_t len = path.size();
  NormalPath out;
  if (len == 0) return out;

  // Already in normal form: keep the edges, only strip deletions from the
  // growing part (they are no-ops there).
  std::size_t peak = 0;
  while (peak < len && vertices[peak].is_below(vertices[peak + 1])) ++peak;
  if (is_below_all(vertices, peak, len, false)) {
    out.edges = path;
    for (std::size_t k = 0; k < peak; ++k) out.edges[k] = without_deletions(path[k]);
    out.peak = peak;
    replay_path(net, from, out.edges);
    return out;
  }

  // Growing replay of every edge.
  SetTuple top = from;
  for (const EdgeCertificate& e : path) {
    EdgeCertificate grown = without_deletions(e);
    top = std::get<SetTuple>(is_edge(net, top, grown));
    out.edges.push_back(std::move(grown));
  }
  out.peak = len;

  // Surplus (state, component) pairs, grouped by the index of their last
  // occurrence along the original path.
  const SetTuple& target = vertices.back();
  const std::size_t m = from.arity();
  std::map<std::size_t, SetTuple> groups;
  for (std::size_t i = 0; i < m; ++i) {
    for (StateId x : (top[i] - target[i]).members()) {
      std::size_t last = 0;
      for (std::size_t k = 0; k <= len; ++k) {
        if (vertices[k][i].contains(x)) last = k;
      }
      auto [it, fresh] = groups.try_emplace(last, m, net.num_states());
      it->second[i].insert(x);
    }
  }
  for (auto& [k, group] : groups) {
    const EdgeCertificate& e = path[k];
    EdgeCertificate del = e;
    for (std::size_t i = 0; i < m; ++i) del.kills[i] = e.kills[i] & group[i];
    del.drop_sender_source = e.drop_sender_source && group[e.sender_component].contains(e.sender_from);
    out.edges.push_back(std::move(del));
  }

  const auto replayed = replay_path(net, from, out.edges);
  if (!(replayed.back() == target) || !is_below_all(replayed, 0, out.peak, true) ||
      !is_below_all(replayed, out.peak, out.edges.size(), false)) {
    throw InvalidPath("normal-form reconstruction failed");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic witnesses.

std::vector<EdgeCertificate> SymbolicWitness::path() const {
  std::vector<EdgeCertificate> p = increasing;
  p.insert(p.end(), decreasing.begin(), decreasing.end());
  return p;
}

SymbolicWitness extract_cycle_from_gfp(const BroadcastNetwork& net, const FixedPointTrace& trace) {
  const SetTuple& apex = trace.fixed_point();
  if (!is_nontrivial(net, apex)) throw TrivialFixedPoint("fixed point has no internal send transition");
  const std::size_t m = apex.arity();
  const SetTuple seed_tuple = SetTuple::singletons(trace.seeds, net.num_states());

  SymbolicWitness w;
  w.seeds = trace.seeds;
  w.apex = apex;

  const ClosureTrace up = saturate(net, ClosureDirection::kPost, apex, seed_tuple);
  if (!(up.result == apex)) throw InvalidWitness("post-closure of the seeds does not reach the fixed point");
  for (const Insertion& ins : up.insertions) {
    if (!ins.witness) {
      w.increasing.push_back(make_certificate(net, m, ins.component, ins.reason));
    } else {
      EdgeCertificate cert = make_certificate(net, m, ins.witness->component, ins.witness->send);
      cert.gens[ins.component].insert(ins.state);
      w.increasing.push_back(std::move(cert));
    }
  }

  const ClosureTrace down = saturate(net, ClosureDirection::kPre, apex, seed_tuple);
  if (!(down.result == apex)) throw InvalidWitness("pre-closure of the seeds does not reach the fixed point");
  for (auto it = down.insertions.rbegin(); it != down.insertions.rend(); ++it) {
    const Insertion& ins = *it;
    if (!ins.witness) {
      w.decreasing.push_back(make_certificate(net, m, ins.component, ins.reason, /*drop_sender_source=*/true));
    } else {
      EdgeCertificate cert = make_certificate(net, m, ins.witness->component, ins.witness->send);
      cert.kills[ins.component].insert(ins.state);
      cert.gens[ins.component].insert(net.transition(ins.reason).to);
      w.decreasing.push_back(std::move(cert));
    }
  }

  if (w.length() == 0) {
    for (std::size_t j = 0; j < m && w.increasing.empty(); ++j) {
      for (TransitionIndex ti = 0; ti < net.transitions().size(); ++ti) {
        const Transition& t = net.transition(ti);
        if (t.is_send() && apex[j].contains(t.from) && apex[j].contains(t.to)) {
          w.increasing.push_back(make_certificate(net, m, j, ti));
          break;
        }
      }
    }
  }
  return w;
}

bool validate_witness(const BroadcastNetwork& net, const SymbolicWitness& witness, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (witness.length() == 0) return fail("witness has length 0");
  for (StateId s : witness.seeds) {
    if (s.index >= net.num_states()) return fail("seed out of range");
  }
  const SetTuple seed_tuple = SetTuple::singletons(witness.seeds, net.num_states());
  try {
    const auto up = replay_path(net, seed_tuple, witness.increasing);
    if (!is_below_all(up, 0, up.size() - 1, true)) return fail("increasing part shrinks a component");
    if (!(up.back() == witness.apex)) return fail("increasing part does not end at the apex");
    const auto down = replay_path(net, witness.apex, witness.decreasing);
    if (!is_below_all(down, 0, down.size() - 1, false)) return fail("decreasing part grows a component");
    if (!(down.back() == seed_tuple)) return fail("decreasing part does not return to the seeds");
  } catch (const InvalidPath& e) {
    return fail(e.what());
  }
  return true;
}

// ---------------------------------------------------------------------------
// Concrete computations.

bool apply_step(const BroadcastNetwork& net, Configuration& config, const ConcreteStep& step) {
  const std::size_t k = config.size();
  if (step.sender >= k || step.sender_transition >= net.transitions().size()) return false;
  const Transition& send = net.transition(step.sender_transition);
  if (!send.is_send() || send.action.message != step.message || send.from != config[step.sender]) return false;
  std::int64_t prev = -1;
  for (const auto& [client, ti] : step.receivers) {
    if (client >= k || static_cast<std::int64_t>(client) <= prev || client == step.sender) return false;
    prev = client;
    if (ti >= net.transitions().size()) return false;
    const Transition& r = net.transition(ti);
    if (!r.is_receive() || r.action.message != step.message || r.from != config[client]) return false;
  }
  config[step.sender] = send.to;
  for (const auto& [client, ti] : step.receivers) config[client] = net.transition(ti).to;
  return true;
}

std::optional<Configuration> replay_computation(const BroadcastNetwork& net, const ConcreteComputation& comp) {
  Configuration c = comp.start;
  for (StateId s : c) {
    if (s.index >= net.num_states()) return std::nullopt;
  }
  for (const ConcreteStep& step : comp.steps) {
    if (!apply_step(net, c, step)) return std::nullopt;
  }
  return c;
}

bool validate_computation(const BroadcastNetwork& net, const ConcreteComputation& comp) {
  return replay_computation(net, comp).has_value();
}

std::size_t predicted_clients(std::size_t arity, std::size_t num_states, std::size_t length) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t block = 1;
  for (std::size_t t = 0; t < length; ++t) {
    if (num_states != 0 && block > kMax / num_states) return kMax;
    block *= num_states;
  }
  if (arity != 0 && block > kMax / arity) return kMax;
  return block * arity;
}

namespace {

// Bookkeeping for concretize(): clients of each block grouped by state.
class BlockPool {
 public:
  BlockPool(std::size_t blocks, std::size_t states) : at_(blocks, std::vector<std::vector<std::uint32_t>>(states)) {}

  std::vector<std::uint32_t>& at(std::size_t block, StateId s) { return at_[block][s.index]; }
  std::size_t blocks() const { return at_.size(); }
  std::size_t states() const { return at_.empty() ? 0 : at_[0].size(); }

 private:
  std::vector<std::vector<std::vector<std::uint32_t>>> at_;
};

ConcreteComputation drop_idle(ConcreteComputation comp, std::size_t blocks, std::size_t block_size) {
  std::vector<bool> moved(comp.start.size(), false);
  for (const auto& step : comp.steps) {
    moved[step.sender] = true;
    for (const auto& [c, t] : step.receivers) moved[c] = true;
  }
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = b * block_size;
    if (std::none_of(moved.begin() + static_cast<std::ptrdiff_t>(lo),
                     moved.begin() + static_cast<std::ptrdiff_t>(lo + block_size), [](bool x) { return x; })) {
      moved[lo] = true;
    }
  }
  std::vector<std::uint32_t> remap(moved.size(), 0);
  Configuration start;
  for (std::size_t c = 0; c < moved.size(); ++c) {
    if (!moved[c]) continue;
    remap[c] = static_cast<std::uint32_t>(start.size());
    start.push_back(comp.start[c]);
  }
  comp.start = std::move(start);
  for (auto& step : comp.steps) {
    step.sender = remap[step.sender];
    for (auto& r : step.receivers) r.first = remap[r.first];
  }
  return comp;
}

}  // namespace

ConcreteComputation concretize(const BroadcastNetwork& net, const SymbolicWitness& witness,
                               const ConcretizeOptions& options) {
  if (witness.length() == 0) throw InvalidWitness("witness has length 0");
  std::string why;
  if (!validate_witness(net, witness, &why)) throw InvalidWitness(why);

  const std::size_t nq = net.num_states();
  const std::size_t m = witness.seeds.size();
  const std::vector<EdgeCertificate> path = witness.path();
  const std::size_t len = path.size();
  const std::size_t total = predicted_clients(m, nq, len);
  if (total > options.cap_clients || total > std::numeric_limits<std::uint32_t>::max()) {
    throw CapExceeded("concretization needs " +
                      (total == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                        : std::to_string(total)) +
                      " clients, cap is " + std::to_string(options.cap_clients));
  }
  const std::size_t block_size = total / m;
  const auto vertices = replay_path(net, SetTuple::singletons(witness.seeds, nq), path);

  ConcreteComputation comp;
  comp.start.resize(total);
  BlockPool pool(m, nq);
  for (std::size_t i = 0; i < m; ++i) {
    auto& clients = pool.at(i, witness.seeds[i]);
    // Descending, so the lowest-numbered client is taken first.
    for (std::size_t c = block_size; c-- > 0;) {
      const auto idx = static_cast<std::uint32_t>(i * block_size + c);
      comp.start[idx] = witness.seeds[i];
      clients.push_back(idx);
    }
  }
  Configuration config = comp.start;

  // Per-edge multiplier |Q|^(len - (t+1)).
  std::vector<std::size_t> quota(len, 1);
  for (std::size_t t = len; t-- > 1;) quota[t - 1] = quota[t] * nq;

  for (std::size_t t = 0; t < len; ++t) {
    const EdgeCertificate& e = path[t];
    const SetTuple& before = vertices[t];
    const std::size_t k = quota[t];
    const std::size_t j = e.sender_component;
    const TransitionIndex send_ti =
        *net.find_transition({e.sender_from, Action{ActionKind::kSend, e.message}, e.sender_to});

    // Clients still in the pool have not moved during this edge; arrivals are
    // collected separately and merged back at the end.
    BlockPool arrivals(m, nq);
    auto take = [&](std::size_t block, StateId s) {
      auto& v = pool.at(block, s);
      if (v.empty()) throw InvalidWitness("ran out of clients while concretizing edge " + std::to_string(t));
      const std::uint32_t c = v.back();
      v.pop_back();
      return c;
    };
    auto move = [&](std::size_t block, std::uint32_t client, StateId to) {
      config[client] = to;
      arrivals.at(block, to).push_back(client);
    };

    // Phase 1: k sends along s !a s'; the first carries all Gen receives.
    std::vector<ConcreteStep> sends(k);
    for (auto& step : sends) {
      step.message = e.message;
      step.sender = take(j, e.sender_from);
      step.sender_transition = send_ti;
      move(j, step.sender, e.sender_to);
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (StateId q : e.gens[i].members()) {
        if (i == j && q == e.sender_to) continue;
        std::optional<TransitionIndex> via;
        for (TransitionIndex ri : net.receives_into(q)) {
          const Transition& r = net.transition(ri);
          if (r.action.message == e.message && before[i].contains(r.from)) {
            via = ri;
            break;
          }
        }
        if (!via) throw InvalidWitness("Gen state without a receive source");
        const StateId p = net.transition(*via).from;
        for (std::size_t c = 0; c < k; ++c) {
          const std::uint32_t client = take(i, p);
          sends.front().receivers.emplace_back(client, *via);
          move(i, client, q);
        }
      }
    }

    // Phase 2: vacate killed states and, if requested, the sender source,
    // using only clients that have not moved yet.
    std::vector<std::pair<std::uint32_t, TransitionIndex>> cleanup;
    for (std::size_t i = 0; i < m; ++i) {
      for (StateId p : e.kills[i].members()) {
        std::optional<TransitionIndex> via;
        for (TransitionIndex ri : net.receives_from(p)) {
          const Transition& r = net.transition(ri);
          if (r.action.message == e.message && e.gens[i].contains(r.to)) {
            via = ri;
            break;
          }
        }
        if (!via) throw InvalidWitness("killed state without a receive into Gen");
        auto& rest = pool.at(i, p);
        for (std::uint32_t client : rest) {
          cleanup.emplace_back(client, *via);
          move(i, client, net.transition(*via).to);
        }
        rest.clear();
      }
    }
    std::vector<ConcreteStep> drops;
    if (e.drop_sender_source && e.sender_from != e.sender_to) {
      auto& rest = pool.at(j, e.sender_from);
      for (std::uint32_t client : rest) {
        ConcreteStep step;
        step.message = e.message;
        step.sender = client;
        step.sender_transition = send_ti;
        move(j, client, e.sender_to);
        drops.push_back(std::move(step));
      }
      rest.clear();
    }
    // Cleanup receives ride on the first dropping send, else on the last
    // send of phase 1.
    ConcreteStep& carrier = drops.empty() ? sends.back() : drops.front();
    carrier.receivers.insert(carrier.receivers.end(), cleanup.begin(), cleanup.end());

    for (auto* batch : {&sends, &drops}) {
      for (auto& step : *batch) {
        std::sort(step.receivers.begin(), step.receivers.end());
        comp.steps.push_back(std::move(step));
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t q = 0; q < nq; ++q) {
        const StateId s{static_cast<std::uint32_t>(q)};
        auto& dst = pool.at(i, s);
        const auto& src = arrivals.at(i, s);
        dst.insert(dst.end(), src.begin(), src.end());
      }
    }
  }

  if (config != comp.start) throw InvalidWitness("concretized computation does not return to its start");
  if (options.drop_idle_clients) return drop_idle(std::move(comp), m, block_size);
  return comp;
}

}  // namespace bnlive
