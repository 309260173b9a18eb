// Copyright 2026 The padlcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PADL_DEADLOCK_H_
#define PADL_DEADLOCK_H_

#include <optional>
#include <string>
#include <vector>

#include "padl/lts.h"

namespace padl {

enum class DeadlockNotion {
  kStrict,  // no outgoing transition at all
  kWeak,    // no visible label reachable through tau moves
};

// Reachable deadlocked states in ascending order. Semi-synchronous
// transitions count with their success continuation only.
std::vector<StateId> FindDeadlocks(const Lts& lts, DeadlockNotion notion);

// Labels along a shortest path from the initial state to `target`, tau
// written as "tau". Nullopt if `target` is unreachable.
std::optional<std::vector<std::string>> ShortestTrace(const Lts& lts, StateId target);

}  // namespace padl

#endif  // PADL_DEADLOCK_H_
