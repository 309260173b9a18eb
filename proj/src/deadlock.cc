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

#include "padl/deadlock.h"

#include <algorithm>
#include <deque>

namespace padl {
namespace {

std::vector<bool> Reachable(const Lts& lts) {
  std::vector<bool> seen(lts.num_states(), false);
  std::deque<StateId> queue{lts.initial};
  seen[lts.initial] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (const Transition& t : lts.transitions[s]) {
      if (!seen[t.target]) {
        seen[t.target] = true;
        queue.push_back(t.target);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<StateId> FindDeadlocks(const Lts& lts, DeadlockNotion notion) {
  const std::size_t n = lts.num_states();
  std::vector<bool> live(n, false);
  if (notion == DeadlockNotion::kStrict) {
    for (StateId s = 0; s < n; ++s) live[s] = !lts.transitions[s].empty();
  } else {
    // Backward closure over tau edges from states offering a visible label.
    std::vector<std::vector<StateId>> tau_pred(n);
    std::deque<StateId> queue;
    for (StateId s = 0; s < n; ++s) {
      for (const Transition& t : lts.transitions[s]) {
        if (t.label == kTau) {
          tau_pred[t.target].push_back(s);
        } else if (!live[s]) {
          live[s] = true;
          queue.push_back(s);
        }
      }
    }
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      for (StateId p : tau_pred[s]) {
        if (!live[p]) {
          live[p] = true;
          queue.push_back(p);
        }
      }
    }
  }
  std::vector<bool> reach = Reachable(lts);
  std::vector<StateId> out;
  for (StateId s = 0; s < n; ++s) {
    if (reach[s] && !live[s]) out.push_back(s);
  }
  return out;
}

std::optional<std::vector<std::string>> ShortestTrace(const Lts& lts, StateId target) {
  std::vector<StateId> parent(lts.num_states(), kNoState);
  std::vector<LabelId> via(lts.num_states(), kTau);
  std::vector<bool> seen(lts.num_states(), false);
  std::deque<StateId> queue{lts.initial};
  seen[lts.initial] = true;
  while (!queue.empty() && !seen[target]) {
    StateId s = queue.front();
    queue.pop_front();
    for (const Transition& t : lts.transitions[s]) {
      if (!seen[t.target]) {
        seen[t.target] = true;
        parent[t.target] = s;
        via[t.target] = t.label;
        queue.push_back(t.target);
      }
    }
  }
  if (!seen[target]) return std::nullopt;
  std::vector<std::string> trace;
  for (StateId s = target; s != lts.initial; s = parent[s]) {
    trace.push_back(lts.label_name(via[s]));
  }
  std::reverse(trace.begin(), trace.end());
  return trace;
}

}  // namespace padl
