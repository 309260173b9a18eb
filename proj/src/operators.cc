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

#include "padl/operators.h"

#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace padl {
namespace {

// Per-operand view of the labels in product-table terms.
struct Side {
  const Lts* lts;
  std::vector<LabelId> to_product;  // operand label -> product label
  std::vector<bool> synced;         // operand label is in the sync set
};

Side MakeSide(const Lts& lts, LabelTable* product, const LabelSet& sync) {
  Side s{&lts, {}, {}};
  for (LabelId l = 0; l < lts.labels.size(); ++l) {
    s.to_product.push_back(product->Intern(lts.label_name(l)));
    s.synced.push_back(l != kTau && sync.count(lts.label_name(l)) > 0);
  }
  return s;
}

Lts MapLabels(const Lts& lts, const std::function<LabelId(LabelId, LabelTable*)>& f,
              bool degrade_hidden_semisync) {
  Lts out;
  out.initial = lts.initial;
  out.flags = lts.flags;
  out.transitions.resize(lts.num_states());
  for (StateId s = 0; s < lts.num_states(); ++s) {
    for (const Transition& t : lts.transitions[s]) {
      Transition n = t;
      n.label = f(t.label, &out.labels);
      if (t.semisync()) {
        if (degrade_hidden_semisync && n.label == kTau) {
          n.exc_label = kTau;
          n.exc_target = kNoState;
        } else {
          n.exc_label = f(t.exc_label, &out.labels);
        }
      }
      out.transitions[s].push_back(n);
    }
  }
  return out;
}

}  // namespace

Lts Parallel(const Lts& left, const Lts& right, const LabelSet& sync,
             std::size_t state_limit, std::vector<std::pair<StateId, StateId>>* pairs) {
  Lts out;
  if (pairs) pairs->clear();
  Side l = MakeSide(left, &out.labels, sync);
  Side r = MakeSide(right, &out.labels, sync);

  std::unordered_map<std::uint64_t, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  std::size_t edges = 0;
  auto state = [&](StateId a, StateId b) -> StateId {
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto [it, fresh] = ids.emplace(key, static_cast<StateId>(out.num_states()));
    if (fresh) {
      if (out.num_states() >= state_limit) {
        throw StateLimitExceeded(state_limit, out.num_states(), edges);
      }
      out.AddState(left.flags[a] | right.flags[b]);
      queue.emplace_back(a, b);
      if (pairs) pairs->emplace_back(a, b);
    }
    return it->second;
  };
  auto emit = [&](StateId from, Transition t) {
    out.transitions[from].push_back(t);
    ++edges;
  };

  out.initial = state(left.initial, right.initial);
  // Scratch: for each product label, the right transitions that carry it.
  std::unordered_map<LabelId, std::vector<const Transition*>> right_by_label;

  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    const StateId from = ids.at((static_cast<std::uint64_t>(a) << 32) | b);
    const auto& lt = left.transitions[a];
    const auto& rt = right.transitions[b];

    right_by_label.clear();
    for (const Transition& u : rt) {
      if (r.synced[u.label]) right_by_label[r.to_product[u.label]].push_back(&u);
    }
    std::unordered_map<LabelId, bool> left_offers;
    for (const Transition& t : lt) {
      if (l.synced[t.label]) left_offers[l.to_product[t.label]] = true;
    }

    for (const Transition& t : lt) {
      const LabelId pl = l.to_product[t.label];
      if (!l.synced[t.label]) {
        Transition n{pl, state(t.target, b), kTau, kNoState};
        if (t.semisync()) {
          n.exc_label = l.to_product[t.exc_label];
          n.exc_target = state(t.exc_target, b);
        }
        emit(from, n);
        continue;
      }
      auto it = right_by_label.find(pl);
      if (it == right_by_label.end()) {
        if (t.semisync()) {
          emit(from, {l.to_product[t.exc_label], state(t.exc_target, b), kTau, kNoState});
        }
        continue;
      }
      for (const Transition* u : it->second) {
        Transition n{pl, state(t.target, u->target), kTau, kNoState};
        if (t.semisync() || u->semisync()) {
          StateId ea = t.semisync() ? t.exc_target : a;
          StateId eb = u->semisync() ? u->exc_target : b;
          n.exc_label = t.semisync() ? l.to_product[t.exc_label] : r.to_product[u->exc_label];
          n.exc_target = state(ea, eb);
        }
        emit(from, n);
      }
    }
    for (const Transition& u : rt) {
      const LabelId pl = r.to_product[u.label];
      if (!r.synced[u.label]) {
        Transition n{pl, state(a, u.target), kTau, kNoState};
        if (u.semisync()) {
          n.exc_label = r.to_product[u.exc_label];
          n.exc_target = state(a, u.exc_target);
        }
        emit(from, n);
      } else if (u.semisync() && !left_offers.count(pl)) {
        emit(from, {r.to_product[u.exc_label], state(a, u.exc_target), kTau, kNoState});
      }
    }
  }
  return out;
}

Lts Hide(const Lts& lts, const LabelSet& hidden) {
  if (hidden.empty()) return lts;
  return MapLabels(
      lts,
      [&](LabelId l, LabelTable* table) -> LabelId {
        const std::string& n = lts.label_name(l);
        return (l == kTau || hidden.count(n)) ? kTau : table->Intern(n);
      },
      /*degrade_hidden_semisync=*/true);
}

Lts KeepOnly(const Lts& lts, const LabelSet& visible) {
  Lts out;
  out.initial = lts.initial;
  out.flags = lts.flags;
  out.transitions.resize(lts.num_states());
  for (StateId s = 0; s < lts.num_states(); ++s) {
    for (const Transition& t : lts.transitions[s]) {
      Transition n = t;
      const std::string& name = lts.label_name(t.label);
      bool keep = t.label != kTau && visible.count(name);
      n.label = keep ? out.labels.Intern(name) : kTau;
      if (t.semisync()) {
        if (keep) {
          n.exc_label = out.labels.Intern(lts.label_name(t.exc_label));
        } else {
          n.exc_label = kTau;
          n.exc_target = kNoState;
        }
      }
      out.transitions[s].push_back(n);
    }
  }
  return out;
}

Lts Relabel(const Lts& lts, const LabelMap& map) {
  if (map.count(std::string(kTauName))) {
    throw std::invalid_argument("tau cannot be relabeled");
  }
  // Injectivity over the labels that occur, including the unmapped ones a
  // new name could collide with.
  std::unordered_map<std::string, std::string> preimage;
  auto image = [&](const std::string& n) {
    auto it = map.find(n);
    return it == map.end() ? n : it->second;
  };
  std::vector<bool> used(lts.labels.size(), false);
  for (const auto& row : lts.transitions) {
    for (const Transition& t : row) {
      used[t.label] = true;
      if (t.semisync()) used[t.exc_label] = true;
    }
  }
  for (LabelId l = 1; l < lts.labels.size(); ++l) {
    if (!used[l]) continue;
    const std::string& n = lts.label_name(l);
    std::string img = image(n);
    if (img == kTauName) throw std::invalid_argument("label '" + n + "' mapped to tau");
    auto [it, fresh] = preimage.emplace(img, n);
    if (!fresh && it->second != n) {
      throw std::invalid_argument("relabeling is not injective: '" + it->second +
                                  "' and '" + n + "' both map to '" + img + "'");
    }
  }
  return MapLabels(
      lts,
      [&](LabelId l, LabelTable* table) -> LabelId {
        return l == kTau ? kTau : table->Intern(image(lts.label_name(l)));
      },
      /*degrade_hidden_semisync=*/false);
}

}  // namespace padl
