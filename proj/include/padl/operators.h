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

// Static operators of the process calculus over Lts values. Label sets and
// maps are keyed by name so operands may use unrelated label tables.

#ifndef PADL_OPERATORS_H_
#define PADL_OPERATORS_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "padl/lts.h"

namespace padl {

using LabelSet = std::set<std::string>;
using LabelMap = std::map<std::string, std::string>;

// Product with synchronization on `sync`. Labels outside `sync` interleave.
// A label in `sync` fires only jointly; the joint move stays
// semi-synchronous if either side was, so a later party can still refuse it.
// Where one side offers a semi-synchronous `a` in `sync` and the other side
// has no `a` at all, the exception label fires and moves that side alone to
// its failure continuation. If `pairs` is given it receives the operand
// states of every product state.
Lts Parallel(const Lts& left, const Lts& right, const LabelSet& sync,
             std::size_t state_limit = kDefaultStateLimit,
             std::vector<std::pair<StateId, StateId>>* pairs = nullptr);

// Renames labels in `hidden` to tau. A hidden semi-synchronous transition
// becomes an ordinary tau move to its success continuation: once invisible,
// no context can refuse it.
Lts Hide(const Lts& lts, const LabelSet& hidden);

// Hides every label outside `visible`. The exception label of a kept
// semi-synchronous transition stays with it.
Lts KeepOnly(const Lts& lts, const LabelSet& visible);

// Applies `map` to transition and exception labels. Throws
// std::invalid_argument if tau is mapped or two distinct labels would
// collide.
Lts Relabel(const Lts& lts, const LabelMap& map);

}  // namespace padl

#endif  // PADL_OPERATORS_H_
