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

#ifndef BNLIVE_GENERATE_HPP_
#define BNLIVE_GENERATE_HPP_

#include <cstddef>
#include <cstdint>

#include "bnlive/model.hpp"

namespace bnlive {

struct GenParams {
  std::size_t states = 3;
  std::size_t messages = 2;
  /// Drawn transitions; duplicates are dropped, so the result may have fewer.
  std::size_t transitions = 6;
  /// Draw initial and final states at random instead of {q0} and {last}.
  bool random_marking = false;
};

/// Deterministic pseudo-random network for a seed. States q0.., messages m0..;
/// by default q0 is initial and the last state final. When transitions > 0 at
/// least one drawn transition is a send.
BroadcastNetwork random_network(const GenParams& params, std::uint64_t seed);

}  // namespace bnlive

#endif  // BNLIVE_GENERATE_HPP_
