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

#ifndef PADL_TESTS_BISIM_ORACLE_H_
#define PADL_TESTS_BISIM_ORACLE_H_

#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "padl/formula.h"
#include "padl/lts.h"

namespace padl::testing {

// Reference: greatest fixpoint of the transfer conditions over all pairs,
// strong steps on one side answered by weak steps on the other.
class Oracle {
 public:
  Oracle(const Lts& a, const Lts& b, Modality m) : a_(a), b_(b), m_(m) {}

  std::vector<std::vector<bool>> Relation() const {
    const std::size_t n = a_.num_states(), k = b_.num_states();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(k, true));
    bool changed = true;
    while (changed) {
      changed = false;
      for (StateId s = 0; s < n; ++s) {
        for (StateId t = 0; t < k; ++t) {
          if (r[s][t] && !(Answers(a_, s, b_, t, r, false) && Answers(b_, t, a_, s, r, true))) {
            r[s][t] = false;
            changed = true;
          }
        }
      }
    }
    return r;
  }

  bool Related() const { return Relation()[a_.initial][b_.initial]; }

  // Transfer conditions of `blocks` as a relation between the two LTSs.
  bool IsBisimulation(const std::vector<std::uint32_t>& first,
                      const std::vector<std::uint32_t>& second) const {
    std::vector<std::vector<bool>> r(a_.num_states(), std::vector<bool>(b_.num_states()));
    for (StateId s = 0; s < a_.num_states(); ++s) {
      for (StateId t = 0; t < b_.num_states(); ++t) r[s][t] = first[s] == second[t];
    }
    for (StateId s = 0; s < a_.num_states(); ++s) {
      for (StateId t = 0; t < b_.num_states(); ++t) {
        if (r[s][t] && !(Answers(a_, s, b_, t, r, false) && Answers(b_, t, a_, s, r, true))) {
          return false;
        }
      }
    }
    return r[a_.initial][b_.initial];
  }

 private:
  static std::set<StateId> Tau(const Lts& l, std::set<StateId> from) {
    std::deque<StateId> q(from.begin(), from.end());
    while (!q.empty()) {
      StateId s = q.front();
      q.pop_front();
      for (const Transition& tr : l.transitions[s]) {
        if (l.label_name(tr.label) == kTauName && from.insert(tr.target).second) {
          q.push_back(tr.target);
        }
      }
    }
    return from;
  }

  std::set<StateId> Answer(const Lts& l, StateId s, const std::string& a) const {
    std::set<StateId> out;
    if (m_ == Modality::kStrong) {
      for (const Transition& tr : l.transitions[s]) {
        if (l.label_name(tr.label) == a) out.insert(tr.target);
      }
      return out;
    }
    if (a == kTauName) return Tau(l, {s});
    for (StateId u : Tau(l, {s})) {
      for (const Transition& tr : l.transitions[u]) {
        if (l.label_name(tr.label) == a) out.insert(tr.target);
      }
    }
    return Tau(l, out);
  }

  bool Answers(const Lts& p, StateId s, const Lts& q, StateId t,
               const std::vector<std::vector<bool>>& r, bool flipped) const {
    for (const Transition& tr : p.transitions[s]) {
      bool ok = false;
      for (StateId u : Answer(q, t, p.label_name(tr.label))) {
        if (flipped ? r[u][tr.target] : r[tr.target][u]) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  const Lts a_;
  const Lts b_;
  Modality m_;
};

// Inserts a tau step after a random transition: a.P becomes a.tau.P.
inline Lts TauVariant(const Lts& l, std::mt19937& rng) {
  Lts out = l;
  std::vector<std::pair<StateId, std::size_t>> edges;
  for (StateId s = 0; s < l.num_states(); ++s) {
    for (std::size_t i = 0; i < l.transitions[s].size(); ++i) edges.emplace_back(s, i);
  }
  if (edges.empty()) return out;
  auto [s, i] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
  StateId mid = out.AddState();
  StateId target = out.transitions[s][i].target;
  out.transitions[s][i].target = mid;
  out.Add(mid, kTauName, target);
  return out;
}

}  // namespace padl::testing

#endif  // PADL_TESTS_BISIM_ORACLE_H_
