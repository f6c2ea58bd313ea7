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

#ifndef BNLIVE_JSON_IO_HPP_
#define BNLIVE_JSON_IO_HPP_

#include <optional>
#include <string>

#include "json.hpp"

#include "bnlive/liveness.hpp"
#include "bnlive/witness.hpp"

// JSON encodings of witnesses and run reports. States and messages are
// written by name so documents can be checked against the network text.
//
// Witness document:
//   { "seeds": [state], "apex": [[state]], "increasing": [cert], "decreasing": [cert],
//     "concrete"?: { "start": [state],
//                    "steps": [{ "msg", "sender", "sender_move": [from, to],
//                                "receivers": { "<client>": [from, to] } }] } }
//   cert = { "message", "sender_component", "sender_from", "sender_to",
//            "drop_sender_source", "gens": [[state]], "kills": [[state]] }
// Client and component indices are 0-based.

namespace bnlive {

nlohmann::json certificate_to_json(const BroadcastNetwork& net, const EdgeCertificate& cert);
EdgeCertificate certificate_from_json(const BroadcastNetwork& net, std::size_t arity, const nlohmann::json& j);

nlohmann::json computation_to_json(const BroadcastNetwork& net, const ConcreteComputation& comp);
ConcreteComputation computation_from_json(const BroadcastNetwork& net, const nlohmann::json& j);

nlohmann::json witness_to_json(const BroadcastNetwork& net, const SymbolicWitness& witness,
                               const std::optional<ConcreteComputation>& concrete = std::nullopt);

struct WitnessDocument {
  SymbolicWitness witness;
  std::optional<ConcreteComputation> concrete;
};

/// Throws Error on unknown names or malformed structure.
WitnessDocument witness_from_json(const BroadcastNetwork& net, const nlohmann::json& j);

/// Run report printed by `bnlive check --json`.
struct RunReport {
  Answer verdict = Answer::kNo;
  bool fair = false;
  double parse_ms = 0;
  VerdictStats stats;
  double total_ms = 0;
  std::optional<std::string> witness_path;
  /// "skipped", "ok" or "capped".
  std::string concretization = "skipped";
};

nlohmann::json report_to_json(const RunReport& report);

}  // namespace bnlive

#endif  // BNLIVE_JSON_IO_HPP_
