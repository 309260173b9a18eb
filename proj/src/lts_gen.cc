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

#include "padl/lts_gen.h"

#include <deque>
#include <tuple>
#include <unordered_map>

#include "padl/expr_eval.h"

namespace padl {
namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Value>& v) const {
    std::size_t h = v.size();
    for (Value x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

// (equation, node, parameter values, success values) with node never an
// invocation.
struct ProcState {
  int eq = 0;
  const Process* node = nullptr;
  std::vector<Value> params;
  std::vector<Value> success;
};

class Explorer {
 public:
  Explorer(const ProcessTable& table, std::size_t limit) : table_(table), limit_(limit) {
    for (size_t i = 0; i < table.equations.size(); ++i) {
      eq_index_[table.equations[i].name] = static_cast<int>(i);
      Number(table.equations[i].body);
    }
    for (const Equation& eq : table.equations) CollectSuccess(eq.body);
  }

  Lts Run(const Invocation& init) {
    auto it = eq_index_.find(init.equation);
    if (it == eq_index_.end()) throw GenerationError("unknown equation '" + init.equation + "'");
    lts_.initial = Intern(Enter(it->second, init.args, {}));
    while (!queue_.empty()) {
      StateId id = queue_.front();
      queue_.pop_front();
      ProcState s = states_[id];
      Expand(id, s, s.node);
    }
    return std::move(lts_);
  }

 private:
  void Number(const Process& p) {
    node_id_[&p] = static_cast<Value>(node_id_.size());
    for (const Process& c : p.children) Number(c);
  }

  void CollectSuccess(const Process& p) {
    if (p.kind == Process::Kind::kPrefix && table_.semisync.count(p.success_var) &&
        !success_slot_.count(p.success_var)) {
      int slot = static_cast<int>(success_slot_.size());
      success_slot_[p.success_var] = slot;
    }
    for (const Process& c : p.children) CollectSuccess(c);
  }

  VarLookup Lookup(const ProcState& s) const {
    return [this, &s](const Expr& leaf) -> std::optional<Value> {
      if (leaf.kind == Expr::Kind::kSuccess) {
        auto it = success_slot_.find(leaf.name);
        if (it == success_slot_.end()) return std::nullopt;
        return s.success[it->second];
      }
      const Equation& eq = table_.equations[s.eq];
      for (size_t i = 0; i < eq.params.size(); ++i) {
        if (eq.params[i].name == leaf.name) return s.params[i];
      }
      auto c = table_.constants.find(leaf.name);
      if (c != table_.constants.end()) return c->second;
      return std::nullopt;
    };
  }

  // Activation of equation `eq` with `args`, unfolded to a non-invoke node.
  ProcState Enter(int eq, std::vector<Value> args,
                  std::vector<std::pair<int, std::vector<Value>>> chain) {
    for (;;) {
      const Equation& e = table_.equations[eq];
      if (args.size() != e.params.size()) {
        throw GenerationError("'" + e.name + "' invoked with wrong arity");
      }
      for (size_t i = 0; i < args.size(); ++i) {
        const TypeSpec& t = e.params[i].type;
        if (args[i] < t.lo || args[i] > t.hi) {
          throw GenerationError("value " + std::to_string(args[i]) + " for '" +
                                e.params[i].name + "' of '" + e.name + "' is outside " +
                                std::to_string(t.lo) + ".." + std::to_string(t.hi));
        }
      }
      for (const auto& [ceq, cargs] : chain) {
        if (ceq == eq && cargs == args) {
          throw GenerationError("unguarded recursion through '" + e.name + "'");
        }
      }
      chain.emplace_back(eq, args);
      ProcState s{eq, &e.body, std::move(args),
                  std::vector<Value>(success_slot_.size(), 0)};
      if (e.body.kind != Process::Kind::kInvoke) return s;
      std::tie(eq, args) = Call(s, e.body);
    }
  }

  std::pair<int, std::vector<Value>> Call(const ProcState& s, const Process& invoke) {
    auto it = eq_index_.find(invoke.name);
    if (it == eq_index_.end()) throw GenerationError("unknown equation '" + invoke.name + "'");
    std::vector<Value> args;
    try {
      for (const Expr& a : invoke.args) args.push_back(Evaluate(a, Lookup(s)));
    } catch (const EvalError& err) {
      throw GenerationError(err.what());
    }
    return {it->second, std::move(args)};
  }

  // Successor state reached by continuing with `next` from `s`.
  ProcState Continue(const ProcState& s, const Process& next) {
    if (next.kind != Process::Kind::kInvoke) {
      ProcState n = s;
      n.node = &next;
      return n;
    }
    auto [eq, args] = Call(s, next);
    return Enter(eq, std::move(args), {});
  }

  StateId Intern(const ProcState& s) {
    std::vector<Value> key;
    key.reserve(2 + s.params.size() + s.success.size());
    key.push_back(s.eq);
    key.push_back(node_id_.at(s.node));
    key.insert(key.end(), s.params.begin(), s.params.end());
    key.insert(key.end(), s.success.begin(), s.success.end());
    auto [it, fresh] = ids_.emplace(std::move(key), static_cast<StateId>(states_.size()));
    if (fresh) {
      if (states_.size() >= limit_) {
        throw StateLimitExceeded(limit_, states_.size(), lts_.num_transitions());
      }
      states_.push_back(s);
      lts_.AddState();
      queue_.push_back(it->second);
    }
    return it->second;
  }

  void Expand(StateId from, const ProcState& s, const Process* node, int depth = 0) {
    if (depth > 10000) throw GenerationError("unguarded recursion through a choice branch");
    switch (node->kind) {
      case Process::Kind::kStop:
        return;
      case Process::Kind::kInvoke: {
        // Only reachable for an invocation directly inside a choice branch.
        auto [eq, args] = Call(s, *node);
        ProcState entered = Enter(eq, std::move(args), {});
        Expand(from, entered, entered.node, depth + 1);
        return;
      }
      case Process::Kind::kChoice:
        for (const Process& branch : node->children) {
          if (branch.guard) {
            Value g;
            try {
              g = Evaluate(*branch.guard, Lookup(s));
            } catch (const EvalError& err) {
              throw GenerationError(err.what());
            }
            if (!g) continue;
          }
          Expand(from, s, &branch, depth + 1);
        }
        return;
      case Process::Kind::kPrefix: {
        const std::string label = table_.owner + "." + node->name;
        auto slot = success_slot_.find(node->success_var);
        if (slot == success_slot_.end()) {
          StateId to = Intern(Continue(s, node->continuation()));
          lts_.Add(from, label, to);
          return;
        }
        ProcState ok = s;
        ok.success[slot->second] = 1;
        ProcState exc = s;
        exc.success[slot->second] = 0;
        StateId to_ok = Intern(Continue(ok, node->continuation()));
        StateId to_exc = Intern(Continue(exc, node->continuation()));
        lts_.AddSemisync(from, label, to_ok, label + std::string(kExceptionSuffix), to_exc);
        return;
      }
    }
  }

  const ProcessTable& table_;
  std::size_t limit_;
  std::map<std::string, int> eq_index_;
  std::unordered_map<const Process*, Value> node_id_;
  std::map<std::string, int> success_slot_;
  std::unordered_map<std::vector<Value>, StateId, VectorHash> ids_;
  std::vector<ProcState> states_;
  std::deque<StateId> queue_;
  Lts lts_;
};

}  // namespace

Invocation InitialInvocation(const ProcessTable& table) {
  if (table.equations.empty()) throw GenerationError("no equations");
  const Equation& first = table.equations.front();
  Invocation inv{first.name, {}};
  for (const Param& p : first.params) {
    if (!p.init) throw GenerationError("'" + p.name + "' has no initial value");
    try {
      inv.args.push_back(Evaluate(*p.init, [&](const Expr& leaf) -> std::optional<Value> {
        auto it = table.constants.find(leaf.name);
        if (leaf.kind != Expr::Kind::kVar || it == table.constants.end()) return std::nullopt;
        return it->second;
      }));
    } catch (const EvalError& err) {
      throw GenerationError(err.what());
    }
  }
  return inv;
}

Lts GenerateLts(const ProcessTable& table, const Invocation& initial, std::size_t state_limit) {
  return Explorer(table, state_limit).Run(initial);
}

}  // namespace padl
