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

// Weak and strong bisimilarity by signature refinement.
//
// Every entry point resolves semi-synchronous transitions to their success
// continuation first. The weak variant never materializes the saturated
// transition relation: signatures are computed over tau-strongly-connected
// components, so Saturate() below is an independent path kept for callers
// and tests.

#ifndef PADL_EQUIVALENCE_H_
#define PADL_EQUIVALENCE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "padl/formula.h"
#include "padl/lts.h"
#include "padl/operators.h"

namespace padl {

struct EquivalenceResult {
  bool equivalent = false;
  // When distinct: holds at the first initial state and fails at the second.
  FormulaPtr formula;
  // Witness when equivalent: block of every reachable state of each operand,
  // numbered as in ResolveSemisync(operand). States with equal blocks are
  // related.
  std::vector<std::uint32_t> first_blocks;
  std::vector<std::uint32_t> second_blocks;
  std::size_t rounds = 0;
};

// Weak transition relation: a tau edge to every state of the tau closure,
// including the state itself, and an `a` edge for every tau* a tau* path.
Lts Saturate(const Lts& lts);

EquivalenceResult WeakBisimCheck(const Lts& first, const Lts& second);
EquivalenceResult StrongBisimCheck(const Lts& first, const Lts& second);
// WeakBisimCheck(Relabel(first, map), second).
EquivalenceResult WeakBisimUpToRelabeling(const Lts& first, const Lts& second,
                                          const LabelMap& map);

// Quotient under weak bisimilarity with tau self-loops removed.
Lts Minimize(const Lts& lts);

}  // namespace padl

#endif  // PADL_EQUIVALENCE_H_
