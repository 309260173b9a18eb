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

#include "padl/equivalence.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace padl {
namespace {

using Edge = std::pair<LabelId, StateId>;

// Plain transition graph over a shared label table; semi-synchronous
// transitions already resolved.
struct Graph {
  LabelTable labels;
  std::vector<std::vector<Edge>> out;
  std::size_t size() const { return out.size(); }
};

// Appends `lts` to `g` and returns the offset of its states.
StateId Append(Graph& g, const Lts& lts) {
  const StateId base = static_cast<StateId>(g.out.size());
  g.out.resize(g.out.size() + lts.num_states());
  for (StateId s = 0; s < lts.num_states(); ++s) {
    auto& row = g.out[base + s];
    for (const Transition& t : lts.transitions[s]) {
      row.emplace_back(g.labels.Intern(lts.label_name(t.label)), base + t.target);
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return base;
}

std::uint64_t Pair(LabelId a, std::uint32_t block) {
  return (static_cast<std::uint64_t>(a) << 32) | block;
}

template <typename T>
void SortUnique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

class Refiner {
 public:
  Refiner(const Graph& g, Modality m) : g_(g), modality_(m) {
    if (m == Modality::kWeak) ComputeTauComponents();
  }

  void Run() {
    history_.assign(1, std::vector<std::uint32_t>(g_.size(), 0));
    std::size_t count = g_.size() == 0 ? 0 : 1;
    while (true) {
      std::vector<std::uint32_t> next = Round(history_.back());
      std::size_t next_count = 0;
      for (std::uint32_t b : next) next_count = std::max<std::size_t>(next_count, b + 1);
      history_.push_back(std::move(next));
      if (next_count == count) break;
      count = next_count;
    }
  }

  const std::vector<std::uint32_t>& blocks() const { return history_.back(); }
  std::size_t rounds() const { return history_.size() - 1; }

  // Holds on the final-round block of `x` and fails on that of `y`.
  FormulaPtr Distinguish(StateId x, StateId y) {
    std::size_t k = 1;
    while (history_[k][x] == history_[k][y]) ++k;
    const auto key = std::make_tuple(k, history_[k][x], history_[k][y]);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const std::vector<std::uint32_t>& prev = history_[k - 1];
    FormulaPtr result;
    for (int side = 0; side < 2 && !result; ++side) {
      const StateId p = side == 0 ? x : y;
      const StateId q = side == 0 ? y : x;
      for (LabelId a : LabelOrder()) {
        std::vector<StateId> ps = Successors(p, a);
        std::vector<StateId> qs = Successors(q, a);
        std::set<std::uint32_t> q_blocks;
        for (StateId t : qs) q_blocks.insert(prev[t]);
        auto witness = std::find_if(ps.begin(), ps.end(),
                                    [&](StateId t) { return q_blocks.count(prev[t]) == 0; });
        if (witness == ps.end()) continue;
        std::vector<FormulaPtr> conjuncts;
        for (std::uint32_t c : q_blocks) {
          StateId rep = *std::find_if(qs.begin(), qs.end(), [&](StateId t) { return prev[t] == c; });
          conjuncts.push_back(Distinguish(*witness, rep));
        }
        FormulaPtr f = Formula::Diamond(g_.labels.name(a), Formula::And(std::move(conjuncts)));
        result = side == 0 ? f : Formula::Not(f);
        break;
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  // Strong successors, or tau* a tau* successors (tau*: the closure itself).
  std::vector<StateId> Successors(StateId s, LabelId a) const {
    std::vector<StateId> out;
    if (modality_ == Modality::kStrong) {
      for (const auto& [l, t] : g_.out[s]) {
        if (l == a) out.push_back(t);
      }
      SortUnique(out);
      return out;
    }
    std::vector<StateId> start = TauClosure({s});
    if (a == kTau) return start;
    for (StateId u : start) {
      for (const auto& [l, t] : g_.out[u]) {
        if (l == a) out.push_back(t);
      }
    }
    return TauClosure(out);
  }

 private:
  std::vector<LabelId> LabelOrder() const {
    std::vector<LabelId> order;
    for (LabelId a = 1; a < g_.labels.size(); ++a) order.push_back(a);
    order.push_back(kTau);
    return order;
  }

  std::vector<StateId> TauClosure(std::vector<StateId> seeds) const {
    std::vector<bool> seen(g_.size(), false);
    std::deque<StateId> queue;
    for (StateId s : seeds) {
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
    std::vector<StateId> out;
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      out.push_back(s);
      for (const auto& [l, t] : g_.out[s]) {
        if (l == kTau && !seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Iterative Tarjan over tau edges; components come out sinks first.
  void ComputeTauComponents() {
    const std::size_t n = g_.size();
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    component_.assign(n, kUnset);
    std::uint32_t counter = 0;
    std::vector<std::pair<StateId, std::size_t>> frames;
    for (StateId root = 0; root < n; ++root) {
      if (index[root] != kUnset) continue;
      frames.emplace_back(root, 0);
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        auto& [s, pos] = frames.back();
        const auto& row = g_.out[s];
        bool descended = false;
        while (pos < row.size()) {
          const auto [l, t] = row[pos++];
          if (l != kTau) continue;
          if (index[t] == kUnset) {
            index[t] = low[t] = counter++;
            stack.push_back(t);
            on_stack[t] = true;
            frames.emplace_back(t, 0);
            descended = true;
            break;
          }
          if (on_stack[t]) low[s] = std::min(low[s], index[t]);
        }
        if (descended) continue;
        const StateId done = s;
        frames.pop_back();
        if (low[done] == index[done]) {
          const auto c = static_cast<std::uint32_t>(members_.size());
          members_.emplace_back();
          StateId w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component_[w] = c;
            members_.back().push_back(w);
          } while (w != done);
        }
        if (!frames.empty()) {
          StateId parent = frames.back().first;
          low[parent] = std::min(low[parent], low[done]);
        }
      }
    }
    tau_succ_.assign(members_.size(), {});
    for (std::uint32_t c = 0; c < members_.size(); ++c) {
      for (StateId s : members_[c]) {
        for (const auto& [l, t] : g_.out[s]) {
          if (l == kTau && component_[t] != c) tau_succ_[c].push_back(component_[t]);
        }
      }
      SortUnique(tau_succ_[c]);
    }
  }

  std::vector<std::uint32_t> Round(const std::vector<std::uint32_t>& blocks) const {
    const std::size_t n = g_.size();
    std::vector<std::vector<std::uint64_t>> sigs(n);
    if (modality_ == Modality::kStrong) {
      for (StateId s = 0; s < n; ++s) {
        for (const auto& [l, t] : g_.out[s]) sigs[s].push_back(Pair(l, blocks[t]));
        SortUnique(sigs[s]);
      }
    } else {
      const std::size_t m = members_.size();
      // Blocks reachable by tau*, then (a, block) pairs reachable by tau* a tau*.
      std::vector<std::vector<std::uint32_t>> reach(m);
      for (std::uint32_t c = 0; c < m; ++c) {
        for (StateId s : members_[c]) reach[c].push_back(blocks[s]);
        for (std::uint32_t d : tau_succ_[c]) {
          reach[c].insert(reach[c].end(), reach[d].begin(), reach[d].end());
        }
        SortUnique(reach[c]);
      }
      std::vector<std::vector<std::uint64_t>> weak(m);
      for (std::uint32_t c = 0; c < m; ++c) {
        auto& w = weak[c];
        for (std::uint32_t b : reach[c]) w.push_back(Pair(kTau, b));
        for (StateId s : members_[c]) {
          for (const auto& [l, t] : g_.out[s]) {
            if (l == kTau) continue;
            for (std::uint32_t b : reach[component_[t]]) w.push_back(Pair(l, b));
          }
        }
        for (std::uint32_t d : tau_succ_[c]) w.insert(w.end(), weak[d].begin(), weak[d].end());
        SortUnique(w);
      }
      for (StateId s = 0; s < n; ++s) sigs[s] = weak[component_[s]];
    }
    std::map<std::pair<std::uint32_t, std::vector<std::uint64_t>>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n);
    for (StateId s = 0; s < n; ++s) {
      auto key = std::make_pair(blocks[s], std::move(sigs[s]));
      auto [it, inserted] = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
      next[s] = it->second;
    }
    return next;
  }

  const Graph& g_;
  Modality modality_;
  std::vector<std::vector<std::uint32_t>> history_;
  std::vector<std::uint32_t> component_;
  std::vector<std::vector<StateId>> members_;
  std::vector<std::vector<std::uint32_t>> tau_succ_;
  std::map<std::tuple<std::size_t, std::uint32_t, std::uint32_t>, FormulaPtr> memo_;
};

EquivalenceResult Check(const Lts& first, const Lts& second, Modality m) {
  const Lts a = ResolveSemisync(first);
  const Lts b = ResolveSemisync(second);
  Graph g;
  const StateId base_a = Append(g, a);
  const StateId base_b = Append(g, b);
  Refiner refiner(g, m);
  refiner.Run();
  const auto& blocks = refiner.blocks();
  EquivalenceResult result;
  result.rounds = refiner.rounds();
  const StateId x = base_a + a.initial;
  const StateId y = base_b + b.initial;
  result.equivalent = blocks[x] == blocks[y];
  if (result.equivalent) {
    result.first_blocks.assign(blocks.begin() + base_a, blocks.begin() + base_b);
    result.second_blocks.assign(blocks.begin() + base_b, blocks.end());
  } else {
    result.formula = refiner.Distinguish(x, y);
  }
  return result;
}

}  // namespace

Lts Saturate(const Lts& lts) {
  const Lts resolved = ResolveSemisync(lts);
  Graph g;
  Append(g, resolved);
  Refiner refiner(g, Modality::kWeak);
  Lts out;
  for (StateId s = 0; s < resolved.num_states(); ++s) out.AddState(resolved.flags[s]);
  out.initial = resolved.initial;
  for (LabelId a = 0; a < g.labels.size(); ++a) out.labels.Intern(g.labels.name(a));
  for (StateId s = 0; s < resolved.num_states(); ++s) {
    for (LabelId a = 0; a < g.labels.size(); ++a) {
      for (StateId t : refiner.Successors(s, a)) out.transitions[s].push_back({a, t});
    }
  }
  return out;
}

EquivalenceResult WeakBisimCheck(const Lts& first, const Lts& second) {
  return Check(first, second, Modality::kWeak);
}

EquivalenceResult StrongBisimCheck(const Lts& first, const Lts& second) {
  return Check(first, second, Modality::kStrong);
}

EquivalenceResult WeakBisimUpToRelabeling(const Lts& first, const Lts& second,
                                          const LabelMap& map) {
  return WeakBisimCheck(Relabel(first, map), second);
}

Lts Minimize(const Lts& lts) {
  const Lts resolved = ResolveSemisync(lts);
  Graph g;
  Append(g, resolved);
  Refiner refiner(g, Modality::kWeak);
  refiner.Run();
  const auto& blocks = refiner.blocks();
  std::uint32_t count = 0;
  for (std::uint32_t b : blocks) count = std::max(count, b + 1);
  Lts out;
  for (std::uint32_t b = 0; b < count; ++b) out.AddState();
  for (StateId s = 0; s < resolved.num_states(); ++s) out.flags[blocks[s]] |= resolved.flags[s];
  out.initial = blocks[resolved.initial];
  std::vector<std::set<Edge>> rows(count);
  for (StateId s = 0; s < resolved.num_states(); ++s) {
    for (const auto& [l, t] : g.out[s]) {
      if (l == kTau && blocks[s] == blocks[t]) continue;
      rows[blocks[s]].emplace(l, blocks[t]);
    }
  }
  for (std::uint32_t b = 0; b < count; ++b) {
    for (const auto& [l, t] : rows[b]) out.Add(b, g.labels.name(l), t);
  }
  return Canonicalize(out);
}

}  // namespace padl
