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

#include "bnlive/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "bnlive/error.hpp"

namespace bnlive {

namespace {

struct ConfigHash {
  std::size_t operator()(const Configuration& c) const {
    std::size_t h = c.size();
    for (StateId s : c) h = h * 1000003U + s.index;
    return h;
  }
};

using Mask = std::uint64_t;

Mask final_mask(const BroadcastNetwork& net, const Configuration& c) {
  Mask m = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (net.finals().contains(c[i])) m |= Mask{1} << i;
  }
  return m;
}

Mask participant_mask(const std::vector<std::uint32_t>& p) {
  Mask m = 0;
  for (auto i : p) m |= Mask{1} << i;
  return m;
}

// The k-client configuration graph reachable from I^k.
class ConfigGraph {
 public:
  struct Edge {
    std::size_t to;
    Mask participants;
    ConcreteStep step;
  };

  ConfigGraph(const BroadcastNetwork& net, std::size_t k, std::size_t cap) : net_(net) {
    if (k == 0) throw std::invalid_argument("client count must be at least 1");
    if (k > 64) throw std::invalid_argument("at most 64 clients are supported");
    const auto initials = net.initials().members();
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      Configuration c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = initials[pick[i]];
      add(std::move(c), std::nullopt, cap);
      std::size_t d = 0;
      while (d < k && ++pick[d] == initials.size()) pick[d++] = 0;
      if (d == k) break;
    }
    for (std::size_t cur = 0; cur < configs_.size(); ++cur) {
      for (Successor& s : step_successors(net_, configs_[cur])) {
        const std::size_t to = add(std::move(s.config), std::pair(cur, s.step), cap);
        edges_[cur].push_back({to, participant_mask(s.participants), std::move(s.step)});
      }
    }
    compute_sccs();
  }

  std::size_t size() const { return configs_.size(); }
  const Configuration& config(std::size_t i) const { return configs_[i]; }
  const std::vector<Edge>& edges(std::size_t i) const { return edges_[i]; }
  std::size_t scc(std::size_t i) const { return scc_[i]; }
  /// Lies on a cycle of length >= 1.
  bool cyclic(std::size_t i) const { return cyclic_scc_[scc_[i]]; }

  ConcreteComputation prefix_to(std::size_t node) const {
    ConcreteComputation comp;
    std::vector<ConcreteStep> rev;
    while (parent_[node]) {
      rev.push_back(parent_[node]->second);
      node = parent_[node]->first;
    }
    comp.start = configs_[node];
    comp.steps.assign(rev.rbegin(), rev.rend());
    return comp;
  }

  /// Shortest cycle from `node` back to itself inside its SCC.
  ConcreteComputation cycle_at(std::size_t node) const {
    std::unordered_map<std::size_t, std::pair<std::size_t, const Edge*>> parent;
    std::deque<std::size_t> queue{node};
    const Edge* closing = nullptr;
    std::size_t closing_from = node;
    while (!queue.empty() && !closing) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (const Edge& e : edges_[cur]) {
        if (e.to == node) {
          closing = &e;
          closing_from = cur;
          break;
        }
        if (scc_[e.to] != scc_[node] || parent.contains(e.to)) continue;
        parent.emplace(e.to, std::pair(cur, &e));
        queue.push_back(e.to);
      }
    }
    ConcreteComputation comp;
    comp.start = configs_[node];
    std::vector<ConcreteStep> rev{closing->step};
    for (std::size_t cur = closing_from; cur != node;) {
      const auto& [prev, edge] = parent.at(cur);
      rev.push_back(edge->step);
      cur = prev;
    }
    comp.steps.assign(rev.rbegin(), rev.rend());
    return comp;
  }

 private:
  std::size_t add(Configuration c, std::optional<std::pair<std::size_t, ConcreteStep>> via, std::size_t cap) {
    auto it = index_.find(c);
    if (it != index_.end()) return it->second;
    if (configs_.size() >= cap) throw CapExceeded("oracle exceeded " + std::to_string(cap) + " configurations");
    const std::size_t id = configs_.size();
    index_.emplace(c, id);
    configs_.push_back(std::move(c));
    edges_.emplace_back();
    parent_.push_back(std::move(via));
    return id;
  }

  // Iterative Tarjan.
  void compute_sccs() {
    const std::size_t n = configs_.size();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    scc_.assign(n, 0);
    std::size_t counter = 0;
    for (std::size_t root = 0; root < n; ++root) {
      if (index[root] != kUnset) continue;
      std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
      while (!call.empty()) {
        auto& [v, next] = call.back();
        if (next == 0) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
        }
        if (next < edges_[v].size()) {
          const std::size_t w = edges_[v][next++].to;
          if (index[w] == kUnset) {
            call.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          const std::size_t id = cyclic_scc_.size();
          std::size_t members = 0;
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            scc_[w] = id;
            ++members;
          } while (w != v);
          bool self_loop = false;
          for (const Edge& e : edges_[v]) self_loop |= e.to == v;
          cyclic_scc_.push_back(members > 1 || self_loop);
        }
        const std::size_t done = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      }
    }
  }

  const BroadcastNetwork& net_;
  std::vector<Configuration> configs_;
  std::unordered_map<Configuration, std::size_t, ConfigHash> index_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::optional<std::pair<std::size_t, ConcreteStep>>> parent_;
  std::vector<std::size_t> scc_;
  std::vector<bool> cyclic_scc_;
};

// Search over (configuration, moved, seen) from (c, {}, F(c)) for a return to c
// with moved a subset of seen. Returns the cycle if found.
std::optional<ConcreteComputation> good_cycle_at(const BroadcastNetwork& net, const ConfigGraph& g, std::size_t c,
                                                 std::size_t cap) {
  using Key = std::tuple<std::size_t, Mask, Mask>;
  struct Via {
    Key prev;
    const ConfigGraph::Edge* edge;
  };
  const Key start{c, 0, final_mask(net, g.config(c))};
  std::map<Key, std::optional<Via>> parent{{start, std::nullopt}};
  std::deque<Key> queue{start};
  while (!queue.empty()) {
    const Key cur = queue.front();
    queue.pop_front();
    const auto [node, moved, seen] = cur;
    for (const ConfigGraph::Edge& e : g.edges(node)) {
      if (g.scc(e.to) != g.scc(c)) continue;
      const Mask moved2 = moved | e.participants;
      const Mask seen2 = seen | final_mask(net, g.config(e.to));
      if (e.to == c && (moved2 & ~seen2) == 0) {
        ConcreteComputation comp;
        comp.start = g.config(c);
        std::vector<ConcreteStep> rev{e.step};
        for (Key k = cur; parent.at(k);) {
          const Via& via = *parent.at(k);
          rev.push_back(via.edge->step);
          k = via.prev;
        }
        comp.steps.assign(rev.rbegin(), rev.rend());
        return comp;
      }
      const Key next{e.to, moved2, seen2};
      if (parent.contains(next)) continue;
      if (parent.size() >= cap) throw CapExceeded("good-cycle search exceeded " + std::to_string(cap) + " triples");
      parent.emplace(next, Via{cur, &e});
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Successor> step_successors(const BroadcastNetwork& net, const Configuration& c) {
  const std::size_t k = c.size();
  std::vector<Successor> out;
  std::set<std::pair<Configuration, std::vector<std::uint32_t>>> seen;
  for (std::size_t sender = 0; sender < k; ++sender) {
    for (TransitionIndex si : net.sends_from(c[sender])) {
      const Transition& send = net.transition(si);
      const MessageId a = send.action.message;
      // Per-client receive options; index 0 of each list means idle.
      std::vector<std::vector<std::optional<TransitionIndex>>> options(k);
      for (std::size_t j = 0; j < k; ++j) {
        options[j].push_back(std::nullopt);
        if (j == sender) continue;
        for (TransitionIndex ri : net.receives_from(c[j])) {
          if (net.transition(ri).action.message == a) options[j].push_back(ri);
        }
      }
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        Successor s;
        s.config = c;
        s.config[sender] = send.to;
        s.step.message = a;
        s.step.sender = static_cast<std::uint32_t>(sender);
        s.step.sender_transition = si;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == sender) {
            s.participants.push_back(static_cast<std::uint32_t>(j));
          } else if (const auto& r = options[j][pick[j]]) {
            s.config[j] = net.transition(*r).to;
            s.participants.push_back(static_cast<std::uint32_t>(j));
            s.step.receivers.emplace_back(static_cast<std::uint32_t>(j), *r);
          }
        }
        if (seen.emplace(s.config, s.participants).second) out.push_back(std::move(s));
        std::size_t d = 0;
        while (d < k && ++pick[d] == options[d].size()) pick[d++] = 0;
        if (d == k) break;
      }
    }
  }
  return out;
}

std::vector<Configuration> bounded_reach_configs(const BroadcastNetwork& net, std::size_t k, std::size_t cap) {
  const ConfigGraph g(net, k, cap);
  std::vector<Configuration> out;
  out.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.config(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Lasso> find_lasso(const BroadcastNetwork& net, std::size_t k,
                                const std::function<bool(const Configuration&)>& accept, std::size_t cap) {
  const ConfigGraph g(net, k, cap);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.cyclic(i) && accept(g.config(i))) return Lasso{g.prefix_to(i), g.cycle_at(i)};
  }
  return std::nullopt;
}

bool oracle_liveness(const BroadcastNetwork& net, std::size_t k, std::size_t cap) {
  return find_lasso(
             net, k, [&](const Configuration& c) { return support(net, c).intersects(net.finals()); }, cap)
      .has_value();
}

std::optional<Lasso> find_good_lasso(const BroadcastNetwork& net, std::size_t k, std::size_t cap) {
  const ConfigGraph g(net, k, cap);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g.cyclic(i)) continue;
    if (auto cycle = good_cycle_at(net, g, i, cap)) return Lasso{g.prefix_to(i), std::move(*cycle)};
  }
  return std::nullopt;
}

bool oracle_fair(const BroadcastNetwork& net, std::size_t k, std::size_t cap) {
  return find_good_lasso(net, k, cap).has_value();
}

bool is_good_cycle(const BroadcastNetwork& net, const ConcreteComputation& cycle) {
  if (cycle.steps.empty()) return false;
  Configuration c = cycle.start;
  std::vector<bool> moved(c.size(), false), seen(c.size(), false);
  auto mark_seen = [&] {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (net.finals().contains(c[i])) seen[i] = true;
    }
  };
  mark_seen();
  for (const ConcreteStep& step : cycle.steps) {
    if (!apply_step(net, c, step)) return false;
    moved[step.sender] = true;
    for (const auto& [client, t] : step.receivers) moved[client] = true;
    mark_seen();
  }
  if (c != cycle.start) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (moved[i] && !seen[i]) return false;
  }
  return true;
}

}  // namespace bnlive
