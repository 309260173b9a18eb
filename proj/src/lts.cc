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

#include "padl/lts.h"

#include <algorithm>
#include <deque>
#include <set>

namespace padl {

bool IsExceptionLabel(std::string_view name) {
  return name.size() > kExceptionSuffix.size() &&
         name.substr(name.size() - kExceptionSuffix.size()) == kExceptionSuffix;
}

LabelTable::LabelTable() {
  names_.emplace_back(kTauName);
  index_.emplace(std::string(kTauName), kTau);
}

LabelId LabelTable::Intern(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  LabelId id = static_cast<LabelId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(std::string(name), id);
  return id;
}

std::optional<LabelId> LabelTable::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Lts::num_transitions() const {
  std::size_t n = 0;
  for (const auto& out : transitions) n += out.size();
  return n;
}

StateId Lts::AddState(std::uint8_t flag_bits) {
  transitions.emplace_back();
  flags.push_back(flag_bits);
  return static_cast<StateId>(transitions.size() - 1);
}

void Lts::Add(StateId from, std::string_view label, StateId to) {
  transitions[from].push_back({labels.Intern(label), to, kTau, kNoState});
}

void Lts::AddSemisync(StateId from, std::string_view label, StateId ok,
                      std::string_view exc_label, StateId exc) {
  transitions[from].push_back({labels.Intern(label), ok, labels.Intern(exc_label), exc});
}

bool Lts::HasFlag(std::uint8_t bit) const {
  return std::any_of(flags.begin(), flags.end(), [&](std::uint8_t f) { return f & bit; });
}

void Lts::CheckWellFormed() const {
  const std::size_t n = num_states();
  if (n == 0 || initial >= n) throw std::logic_error("initial state out of range");
  if (flags.size() != n) throw std::logic_error("flag vector size mismatch");
  for (const auto& out : transitions) {
    for (const Transition& t : out) {
      if (t.target >= n || t.label >= labels.size()) {
        throw std::logic_error("transition target or label out of range");
      }
      if (t.semisync() && (t.exc_target >= n || t.exc_label >= labels.size())) {
        throw std::logic_error("exception continuation out of range");
      }
    }
  }
}

StateLimitExceeded::StateLimitExceeded(std::size_t limit, std::size_t states,
                                       std::size_t transitions)
    : std::runtime_error("state limit of " + std::to_string(limit) + " exceeded after " +
                         std::to_string(states) + " states and " +
                         std::to_string(transitions) + " transitions"),
      limit_(limit),
      states_(states),
      transitions_(transitions) {}

Lts ResolveSemisync(const Lts& lts) {
  Lts out = lts;
  for (auto& row : out.transitions) {
    for (Transition& t : row) {
      t.exc_label = kTau;
      t.exc_target = kNoState;
    }
  }
  return Canonicalize(out);
}

Lts Canonicalize(const Lts& lts) {
  std::vector<StateId> renum(lts.num_states(), kNoState);
  std::vector<StateId> order;
  std::deque<StateId> queue;
  auto visit = [&](StateId s) {
    if (renum[s] != kNoState) return;
    renum[s] = static_cast<StateId>(order.size());
    order.push_back(s);
    queue.push_back(s);
  };
  visit(lts.initial);
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (const Transition& t : lts.transitions[s]) {
      visit(t.target);
      if (t.semisync()) visit(t.exc_target);
    }
  }
  Lts out;
  for (StateId s : order) out.AddState(lts.flags[s]);
  out.initial = 0;
  for (StateId s : order) {
    for (const Transition& t : lts.transitions[s]) {
      Transition n;
      n.label = out.labels.Intern(lts.label_name(t.label));
      n.target = renum[t.target];
      if (t.semisync()) {
        n.exc_label = out.labels.Intern(lts.label_name(t.exc_label));
        n.exc_target = renum[t.exc_target];
      }
      out.transitions[renum[s]].push_back(n);
    }
  }
  return out;
}

bool Identical(const Lts& a, const Lts& b) {
  if (a.num_states() != b.num_states() || a.initial != b.initial) return false;
  for (StateId s = 0; s < a.num_states(); ++s) {
    const auto& ra = a.transitions[s];
    const auto& rb = b.transitions[s];
    if (ra.size() != rb.size()) return false;
    for (std::size_t i = 0; i < ra.size(); ++i) {
      const Transition& x = ra[i];
      const Transition& y = rb[i];
      if (x.target != y.target || x.exc_target != y.exc_target ||
          a.label_name(x.label) != b.label_name(y.label)) {
        return false;
      }
      if (x.semisync() && a.label_name(x.exc_label) != b.label_name(y.exc_label)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::string> VisibleLabels(const Lts& lts) {
  std::set<std::string> names;
  for (const auto& row : lts.transitions) {
    for (const Transition& t : row) {
      if (t.label != kTau) names.insert(lts.label_name(t.label));
      if (t.semisync() && t.exc_label != kTau) names.insert(lts.label_name(t.exc_label));
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace padl
