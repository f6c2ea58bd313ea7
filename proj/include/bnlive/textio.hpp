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

#ifndef BNLIVE_TEXTIO_HPP_
#define BNLIVE_TEXTIO_HPP_

#include <string>
#include <string_view>

#include "bnlive/model.hpp"

namespace bnlive {

/// Parses the line-oriented network format:
///
///   network <name>                 # optional
///   messages <id>+
///   states <id>+
///   initial <id>+
///   final <id>*
///   trans <state> (!|?)<message> <state>
///
/// `#` starts a comment. Declarations may repeat and accumulate.
/// Throws SyntaxError, or ModelError carrying the offending line.
BroadcastNetwork parse_network(std::string_view text);

/// Reads and parses a file. Throws Error if the file cannot be read.
BroadcastNetwork load_network(const std::string& path);

/// Canonical text: sections in fixed order, entries in id order.
/// parse_network(serialize_network(net)) == net.
std::string serialize_network(const BroadcastNetwork& net);

}  // namespace bnlive

#endif  // BNLIVE_TEXTIO_HPP_
