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

#ifndef BNLIVE_IDS_HPP_
#define BNLIVE_IDS_HPP_

#include <compare>
#include <cstdint>
#include <functional>

namespace bnlive {

/// Dense index into a network's state table.
struct StateId {
  std::uint32_t index = 0;
  friend auto operator<=>(const StateId&, const StateId&) = default;
};

/// Dense index into a network's message alphabet.
struct MessageId {
  std::uint32_t index = 0;
  friend auto operator<=>(const MessageId&, const MessageId&) = default;
};

}  // namespace bnlive

template <>
struct std::hash<bnlive::StateId> {
  std::size_t operator()(bnlive::StateId s) const noexcept { return s.index; }
};

#endif  // BNLIVE_IDS_HPP_
