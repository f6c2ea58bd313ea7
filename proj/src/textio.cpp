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

#include "bnlive/textio.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "bnlive/error.hpp"

namespace bnlive {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  for (char c : s) {
    if (!alpha(c) && !digit(c)) return false;
  }
  return true;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

void check_identifier(const std::string& id, std::size_t line) {
  if (!is_identifier(id)) throw SyntaxError(line, "invalid identifier '" + id + "'");
}

void append_ids(const std::vector<std::string>& tokens, std::size_t line, std::vector<std::string>& names,
                std::vector<std::size_t>& lines) {
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    check_identifier(tokens[i], line);
    names.push_back(tokens[i]);
    lines.push_back(line);
  }
}

}  // namespace

BroadcastNetwork parse_network(std::string_view text) {
  NetworkSpec spec;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0];

    if (kw == "network") {
      if (have_header) throw SyntaxError(line_no, "duplicate 'network' header");
      if (tokens.size() != 2) throw SyntaxError(line_no, "expected 'network <name>'");
      check_identifier(tokens[1], line_no);
      spec.name = tokens[1];
      have_header = true;
    } else if (kw == "messages" || kw == "states" || kw == "initial") {
      if (tokens.size() < 2) throw SyntaxError(line_no, "'" + kw + "' needs at least one identifier");
      if (kw == "messages") {
        append_ids(tokens, line_no, spec.messages, spec.message_lines);
      } else if (kw == "states") {
        append_ids(tokens, line_no, spec.states, spec.state_lines);
      } else {
        append_ids(tokens, line_no, spec.initials, spec.initial_lines);
      }
    } else if (kw == "final") {
      append_ids(tokens, line_no, spec.finals, spec.final_lines);
    } else if (kw == "trans") {
      if (tokens.size() != 4) throw SyntaxError(line_no, "expected 'trans <state> (!|?)<message> <state>'");
      const std::string& act = tokens[2];
      if (act.size() < 2 || (act[0] != '!' && act[0] != '?')) {
        throw SyntaxError(line_no, "action must be !<message> or ?<message>, got '" + act + "'");
      }
      NetworkSpec::RawTransition t;
      t.from = tokens[1];
      t.kind = act[0] == '!' ? ActionKind::kSend : ActionKind::kReceive;
      t.message = act.substr(1);
      t.to = tokens[3];
      t.line = line_no;
      check_identifier(t.from, line_no);
      check_identifier(t.message, line_no);
      check_identifier(t.to, line_no);
      spec.transitions.push_back(std::move(t));
    } else {
      throw SyntaxError(line_no, "unknown declaration '" + kw + "'");
    }
  }
  return validate_network(spec);
}

BroadcastNetwork load_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::string serialize_network(const BroadcastNetwork& net) {
  std::string out;
  auto section = [&](const char* kw, const std::vector<std::string>& names) {
    out += kw;
    for (const auto& n : names) {
      out += ' ';
      out += n;
    }
    out += '\n';
  };
  auto names_of = [&](const StateSet& set) {
    std::vector<std::string> names;
    set.for_each([&](StateId s) { names.push_back(net.state_name(s)); });
    return names;
  };

  if (!net.name().empty()) out += "network " + net.name() + "\n";
  if (net.num_messages() > 0) section("messages", net.message_names());
  section("states", net.state_names());
  section("initial", names_of(net.initials()));
  section("final", names_of(net.finals()));
  for (const Transition& t : net.transitions()) out += "trans " + to_string(net, t) + "\n";
  return out;
}

}  // namespace bnlive
