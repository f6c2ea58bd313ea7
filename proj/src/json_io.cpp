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

#include "bnlive/json_io.hpp"

#include <algorithm>

#include "bnlive/error.hpp"

namespace bnlive {

using nlohmann::json;

namespace {

json names(const BroadcastNetwork& net, const StateSet& set) {
  json out = json::array();
  set.for_each([&](StateId s) { out.push_back(net.state_name(s)); });
  return out;
}

StateId state_named(const BroadcastNetwork& net, const json& j) {
  if (!j.is_string()) throw Error("expected a state name, got " + j.dump());
  auto s = net.find_state(j.get<std::string>());
  if (!s) throw Error("unknown state '" + j.get<std::string>() + "'");
  return *s;
}

MessageId message_named(const BroadcastNetwork& net, const json& j) {
  if (!j.is_string()) throw Error("expected a message name, got " + j.dump());
  auto m = net.find_message(j.get<std::string>());
  if (!m) throw Error("unknown message '" + j.get<std::string>() + "'");
  return *m;
}

StateSet set_named(const BroadcastNetwork& net, const json& j) {
  if (!j.is_array()) throw Error("expected a list of state names");
  StateSet out(net.num_states());
  for (const auto& e : j) out.insert(state_named(net, e));
  return out;
}

TransitionIndex transition_for(const BroadcastNetwork& net, StateId from, ActionKind kind, MessageId msg, StateId to) {
  auto t = net.find_transition({from, Action{kind, msg}, to});
  if (!t) throw Error("no such transition: " + to_string(net, {from, Action{kind, msg}, to}));
  return *t;
}

}  // namespace

json certificate_to_json(const BroadcastNetwork& net, const EdgeCertificate& cert) {
  json gens = json::array();
  json kills = json::array();
  for (const auto& g : cert.gens) gens.push_back(names(net, g));
  for (const auto& k : cert.kills) kills.push_back(names(net, k));
  return {{"message", net.message_name(cert.message)},
          {"sender_component", cert.sender_component},
          {"sender_from", net.state_name(cert.sender_from)},
          {"sender_to", net.state_name(cert.sender_to)},
          {"drop_sender_source", cert.drop_sender_source},
          {"gens", std::move(gens)},
          {"kills", std::move(kills)}};
}

EdgeCertificate certificate_from_json(const BroadcastNetwork& net, std::size_t arity, const json& j) {
  try {
    EdgeCertificate cert;
    cert.message = message_named(net, j.at("message"));
    cert.sender_component = j.at("sender_component").get<std::size_t>();
    cert.sender_from = state_named(net, j.at("sender_from"));
    cert.sender_to = state_named(net, j.at("sender_to"));
    cert.drop_sender_source = j.at("drop_sender_source").get<bool>();
    for (const auto& g : j.at("gens")) cert.gens.push_back(set_named(net, g));
    for (const auto& k : j.at("kills")) cert.kills.push_back(set_named(net, k));
    if (cert.gens.size() != arity || cert.kills.size() != arity) throw Error("certificate arity mismatch");
    return cert;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

json computation_to_json(const BroadcastNetwork& net, const ConcreteComputation& comp) {
  json start = json::array();
  for (StateId s : comp.start) start.push_back(net.state_name(s));
  json steps = json::array();
  for (const ConcreteStep& step : comp.steps) {
    const Transition& send = net.transition(step.sender_transition);
    json receivers = json::object();
    for (const auto& [client, ti] : step.receivers) {
      const Transition& r = net.transition(ti);
      receivers[std::to_string(client)] = {net.state_name(r.from), net.state_name(r.to)};
    }
    steps.push_back({{"msg", net.message_name(step.message)},
                     {"sender", step.sender},
                     {"sender_move", {net.state_name(send.from), net.state_name(send.to)}},
                     {"receivers", std::move(receivers)}});
  }
  return {{"start", std::move(start)}, {"steps", std::move(steps)}};
}

ConcreteComputation computation_from_json(const BroadcastNetwork& net, const json& j) {
  try {
    ConcreteComputation comp;
    for (const auto& s : j.at("start")) comp.start.push_back(state_named(net, s));
    for (const auto& js : j.at("steps")) {
      ConcreteStep step;
      step.message = message_named(net, js.at("msg"));
      step.sender = js.at("sender").get<std::uint32_t>();
      const auto& mv = js.at("sender_move");
      step.sender_transition =
          transition_for(net, state_named(net, mv.at(0)), ActionKind::kSend, step.message, state_named(net, mv.at(1)));
      for (const auto& [key, move] : js.at("receivers").items()) {
        const auto client = static_cast<std::uint32_t>(std::stoul(key));
        step.receivers.emplace_back(client, transition_for(net, state_named(net, move.at(0)), ActionKind::kReceive,
                                                           step.message, state_named(net, move.at(1))));
      }
      std::sort(step.receivers.begin(), step.receivers.end());
      comp.steps.push_back(std::move(step));
    }
    return comp;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed computation: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(std::string("malformed computation: ") + e.what());
  }
}

json witness_to_json(const BroadcastNetwork& net, const SymbolicWitness& witness,
                     const std::optional<ConcreteComputation>& concrete) {
  json seeds = json::array();
  for (StateId s : witness.seeds) seeds.push_back(net.state_name(s));
  json apex = json::array();
  for (const auto& c : witness.apex.components()) apex.push_back(names(net, c));
  json inc = json::array();
  json dec = json::array();
  for (const auto& c : witness.increasing) inc.push_back(certificate_to_json(net, c));
  for (const auto& c : witness.decreasing) dec.push_back(certificate_to_json(net, c));
  json out = {{"seeds", std::move(seeds)},
              {"apex", std::move(apex)},
              {"increasing", std::move(inc)},
              {"decreasing", std::move(dec)}};
  if (concrete) out["concrete"] = computation_to_json(net, *concrete);
  return out;
}

WitnessDocument witness_from_json(const BroadcastNetwork& net, const json& j) {
  try {
    WitnessDocument doc;
    for (const auto& s : j.at("seeds")) doc.witness.seeds.push_back(state_named(net, s));
    std::vector<StateSet> apex;
    for (const auto& c : j.at("apex")) apex.push_back(set_named(net, c));
    doc.witness.apex = SetTuple(std::move(apex));
    const std::size_t m = doc.witness.seeds.size();
    if (doc.witness.apex.arity() != m) throw Error("apex arity differs from the number of seeds");
    for (const auto& c : j.at("increasing")) doc.witness.increasing.push_back(certificate_from_json(net, m, c));
    for (const auto& c : j.at("decreasing")) doc.witness.decreasing.push_back(certificate_from_json(net, m, c));
    if (j.contains("concrete")) doc.concrete = computation_from_json(net, j.at("concrete"));
    return doc;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed witness: ") + e.what());
  }
}

json report_to_json(const RunReport& report) {
  json out = {{"problem", report.fair ? "fair" : "liveness"},
              {"verdict", report.verdict == Answer::kYes ? "YES" : "NO"},
              {"timings_ms",
               {{"parse", report.parse_ms},
                {"coverability", report.stats.coverability_ms},
                {"fixed_point", report.stats.fixed_point_ms},
                {"witness", report.stats.witness_ms},
                {"total", report.total_ms}}},
              {"iterations", report.stats.kleene_steps},
              {"seeds", report.stats.seed_count},
              {"concretization", report.concretization}};
  out["witness_path"] = report.witness_path ? json(*report.witness_path) : json(nullptr);
  return out;
}

}  // namespace bnlive
