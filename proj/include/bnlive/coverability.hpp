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

#ifndef BNLIVE_COVERABILITY_HPP_
#define BNLIVE_COVERABILITY_HPP_

#include "bnlive/model.hpp"

namespace bnlive {

/// Client states coverable from an initial configuration with some number of
/// clients. Least set R such that I is in R, send targets of R are in R, and
/// receive targets of R are in R whenever some state of R can send the
/// message.
StateSet reachable_states(const BroadcastNetwork& net);

}  // namespace bnlive

#endif  // BNLIVE_COVERABILITY_HPP_
