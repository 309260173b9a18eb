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

#include "padl/validate.h"

#include <algorithm>
#include <regex>
#include <set>
#include <stdexcept>

#include "padl/expr_eval.h"

namespace padl {

const Instance& ValidatedArchitecture::instance(const std::string& aei) const {
  const Instance* inst = ast_.FindInstance(aei);
  if (!inst) throw std::out_of_range("unknown AEI '" + aei + "'");
  return *inst;
}

const AetDef& ValidatedArchitecture::aet_of(const std::string& aei) const {
  return *ast_.FindAet(instance(aei).aet);
}

const InteractionDecl* ValidatedArchitecture::FindInteraction(const Endpoint& e) const {
  const Instance* inst = ast_.FindInstance(e.aei);
  if (!inst) return nullptr;
  return ast_.FindAet(inst->aet)->FindInteraction(e.interaction);
}

const InteractionDecl& ValidatedArchitecture::interaction(const Endpoint& e) const {
  const InteractionDecl* d = FindInteraction(e);
  if (!d) throw std::out_of_range("unknown interaction '" + e.Dotted() + "'");
  return *d;
}

const std::vector<Value>& ValidatedArchitecture::aet_args(const std::string& aei) const {
  auto it = aet_args_.find(aei);
  if (it == aet_args_.end()) throw std::out_of_range("unknown AEI '" + aei + "'");
  return it->second;
}

bool ValidatedArchitecture::IsArchitectural(const Endpoint& e) const {
  return std::find(ast_.archi_interactions.begin(), ast_.archi_interactions.end(), e) !=
         ast_.archi_interactions.end();
}

int AttachNo(const ValidatedArchitecture& arch, const Endpoint& endpoint) {
  if (!arch.FindInteraction(endpoint)) {
    throw std::out_of_range("unknown endpoint '" + endpoint.Dotted() + "'");
  }
  int n = 0;
  for (const Attachment& a : arch.attachments()) {
    if (a.from == endpoint || a.to == endpoint) ++n;
  }
  return n;
}

namespace {

using Scope = std::map<std::string, TypeSpec>;

const char* KindName(DataKind k) { return k == DataKind::kBool ? "boolean" : "int"; }

class Checker {
 public:
  explicit Checker(const ArchiDescription& ast) : ast_(ast) {}

  Diagnostics Run(std::map<std::string, std::vector<Value>>* aet_args) {
    CheckArchiParams();
    std::set<std::string> aet_names;
    for (const AetDef& aet : ast_.aets) {
      if (!aet_names.insert(aet.name).second) {
        Error(aet.location, "E_DUP_NAME", "element type '" + aet.name + "' declared twice");
      }
      CheckAet(aet);
    }
    CheckInstances(aet_args);
    CheckAttachments();
    CheckArchiInteractions();
    return std::move(diags_);
  }

 private:
  void Error(SourceLocation loc, std::string code, std::string msg) {
    diags_.push_back({Severity::kError, loc, std::move(code), std::move(msg)});
  }

  // Returns nullopt when a diagnostic was already emitted for `e`.
  std::optional<DataKind> TypeOf(const Expr& e, const Scope& scope, const AetDef* aet) {
    switch (e.kind) {
      case Expr::Kind::kBool:
        return DataKind::kBool;
      case Expr::Kind::kInt:
        return DataKind::kInt;
      case Expr::Kind::kVar: {
        auto it = scope.find(e.name);
        if (it == scope.end()) {
          Error(e.location, "E_UNKNOWN_VAR", "unknown variable '" + e.name + "'");
          return std::nullopt;
        }
        return it->second.kind;
      }
      case Expr::Kind::kSuccess: {
        const InteractionDecl* d = aet ? aet->FindInteraction(e.name) : nullptr;
        if (!d) {
          Error(e.location, "E_UNKNOWN_INTERACTION",
                "'" + e.name + ".success' does not name an interaction of this type");
          return std::nullopt;
        }
        // Asynchronous inputs become semi-synchronous once their queue is inserted.
        bool semisync = d->synchronicity == Synchronicity::kSsync ||
                        (d->synchronicity == Synchronicity::kAsync &&
                         d->direction == Direction::kInput);
        if (!semisync) {
          Error(e.location, "E_SUCCESS_NON_SSYNC",
                "'" + e.name + "' is not semi-synchronous and has no success variable");
          return std::nullopt;
        }
        return DataKind::kBool;
      }
      case Expr::Kind::kUnary: {
        auto t = TypeOf(e.operands[0], scope, aet);
        DataKind want = e.op == "not" ? DataKind::kBool : DataKind::kInt;
        if (t && *t != want) {
          Error(e.location, "E_TYPE",
                "operator '" + e.op + "' expects " + KindName(want) + " operand");
          return std::nullopt;
        }
        return t ? std::optional<DataKind>(want) : std::nullopt;
      }
      case Expr::Kind::kBinary: {
        auto l = TypeOf(e.operands[0], scope, aet);
        auto r = TypeOf(e.operands[1], scope, aet);
        if (!l || !r) return std::nullopt;
        const std::string& op = e.op;
        if (op == "and" || op == "or") {
          if (*l != DataKind::kBool || *r != DataKind::kBool) {
            Error(e.location, "E_TYPE", "operator '" + op + "' expects boolean operands");
            return std::nullopt;
          }
          return DataKind::kBool;
        }
        if (op == "=" || op == "!=") {
          if (*l != *r) {
            Error(e.location, "E_TYPE", "operands of '" + op + "' have different types");
            return std::nullopt;
          }
          return DataKind::kBool;
        }
        if (*l != DataKind::kInt || *r != DataKind::kInt) {
          Error(e.location, "E_TYPE", "operator '" + op + "' expects int operands");
          return std::nullopt;
        }
        return (op == "+" || op == "-") ? DataKind::kInt : DataKind::kBool;
      }
    }
    return std::nullopt;
  }

  void CheckType(const Param& p) {
    if (p.type.kind != DataKind::kInt) return;
    if (!p.type.bounded) {
      Error(p.location, "E_UNBOUNDED_INT",
            "parameter '" + p.name + "' needs a bounded range, e.g. int(0..3)");
    } else if (p.type.lo > p.type.hi) {
      Error(p.location, "E_UNBOUNDED_INT", "parameter '" + p.name + "' has an empty range");
    }
  }

  // Checks a value of kind `k` (possibly constant) against formal `p`.
  void CheckAgainst(const Param& p, const Expr& actual, std::optional<DataKind> k,
                    const std::string& what) {
    if (!k) return;
    if (*k != p.type.kind) {
      Error(actual.location, "E_PARAM_TYPE",
            what + " for '" + p.name + "' must be " + KindName(p.type.kind));
      return;
    }
    if (p.type.kind == DataKind::kInt && p.type.bounded) {
      try {
        Value v = Evaluate(actual, [&](const Expr& leaf) { return Constant(leaf); });
        if (v < p.type.lo || v > p.type.hi) {
          Error(actual.location, "E_PARAM_TYPE",
                what + " " + std::to_string(v) + " for '" + p.name + "' is outside " +
                    std::to_string(p.type.lo) + ".." + std::to_string(p.type.hi));
        }
      } catch (const EvalError&) {
        // Not constant; the range is enforced during state exploration.
      }
    }
  }

  std::optional<Value> Constant(const Expr& leaf) const {
    if (leaf.kind != Expr::Kind::kVar) return std::nullopt;
    auto it = archi_values_.find(leaf.name);
    if (it == archi_values_.end()) return std::nullopt;
    return it->second;
  }

  void CheckArchiParams() {
    std::set<std::string> seen;
    for (const Param& p : ast_.params) {
      if (!seen.insert(p.name).second) {
        Error(p.location, "E_DUP_NAME", "parameter '" + p.name + "' declared twice");
      }
      CheckType(p);
      if (!p.init) {
        Error(p.location, "E_MISSING_DEFAULT",
              "architectural parameter '" + p.name + "' needs a value");
        continue;
      }
      auto k = TypeOf(*p.init, archi_scope_, nullptr);
      CheckAgainst(p, *p.init, k, "value");
      archi_scope_[p.name] = p.type;
      try {
        archi_values_[p.name] =
            Evaluate(*p.init, [&](const Expr& leaf) { return Constant(leaf); });
      } catch (const EvalError& err) {
        Error(p.init->location, "E_UNKNOWN_VAR", err.what());
      }
    }
  }

  void CheckAet(const AetDef& aet) {
    Scope aet_scope;
    for (const Param& p : aet.params) {
      if (aet_scope.count(p.name)) {
        Error(p.location, "E_DUP_NAME", "parameter '" + p.name + "' declared twice");
      }
      CheckType(p);
      if (p.init) CheckAgainst(p, *p.init, TypeOf(*p.init, Scope{}, &aet), "default");
      aet_scope[p.name] = p.type;
    }

    std::set<std::string> seen;
    for (const InteractionDecl& d : aet.interactions) {
      if (!seen.insert(d.name).second) {
        Error(d.location, "E_DUP_NAME",
              "interaction '" + d.name + "' declared twice in '" + aet.name + "'");
      }
      if (d.dep_on) {
        if (d.direction != Direction::kOutput || d.multiplicity != Multiplicity::kOr) {
          Error(d.location, "E_DEP_INVALID", "DEP is allowed only on output or-interactions");
        }
        const InteractionDecl* in = aet.FindInteraction(*d.dep_on);
        if (!in || in->direction != Direction::kInput ||
            in->multiplicity != Multiplicity::kOr) {
          Error(d.location, "E_DEP_INVALID",
                "'" + *d.dep_on + "' is not an input or-interaction of '" + aet.name + "'");
        }
      }
    }

    std::set<std::string> eq_names;
    std::set<std::string> actions;
    for (size_t i = 0; i < aet.equations.size(); ++i) {
      const Equation& eq = aet.equations[i];
      if (!eq_names.insert(eq.name).second) {
        Error(eq.location, "E_DUP_NAME", "equation '" + eq.name + "' defined twice");
      }
      Scope scope = aet_scope;
      for (const Param& p : eq.params) {
        if (scope.count(p.name)) {
          Error(p.location, "E_DUP_NAME", "parameter '" + p.name + "' shadows another name");
        }
        CheckType(p);
        if (p.init) {
          CheckAgainst(p, *p.init, TypeOf(*p.init, aet_scope, &aet), "initial value");
        } else if (i == 0) {
          Error(p.location, "E_MISSING_DEFAULT",
                "parameter '" + p.name + "' of initial equation '" + eq.name +
                    "' needs an initial value");
        }
      }
      for (const Param& p : eq.params) scope[p.name] = p.type;
      CheckBody(eq.body, scope, aet, &actions);
    }

    for (const InteractionDecl& d : aet.interactions) {
      if (!actions.count(d.name)) {
        Error(d.location, "E_INTERACTION_UNUSED",
              "interaction '" + d.name + "' never occurs in the behavior of '" +
                  aet.name + "'");
      }
    }
  }

  void CheckBody(const Process& p, const Scope& scope, const AetDef& aet,
                 std::set<std::string>* actions) {
    switch (p.kind) {
      case Process::Kind::kStop:
        return;
      case Process::Kind::kPrefix:
        actions->insert(p.name);
        CheckBody(p.continuation(), scope, aet, actions);
        return;
      case Process::Kind::kInvoke: {
        const Equation* target = aet.FindEquation(p.name);
        if (!target) {
          Error(p.location, "E_UNKNOWN_EQUATION", "unknown equation '" + p.name + "'");
          for (const Expr& a : p.args) TypeOf(a, scope, &aet);
          return;
        }
        if (target->params.size() != p.args.size()) {
          Error(p.location, "E_INVOKE_ARITY",
                "'" + p.name + "' expects " + std::to_string(target->params.size()) +
                    " argument(s), got " + std::to_string(p.args.size()));
          return;
        }
        for (size_t i = 0; i < p.args.size(); ++i) {
          CheckAgainst(target->params[i], p.args[i], TypeOf(p.args[i], scope, &aet),
                       "argument");
        }
        return;
      }
      case Process::Kind::kChoice:
        for (const Process& branch : p.children) {
          if (branch.guard) {
            auto k = TypeOf(*branch.guard, scope, &aet);
            if (k && *k != DataKind::kBool) {
              Error(branch.guard->location, "E_GUARD_TYPE", "guard must be boolean");
            }
          }
          if (branch.kind == Process::Kind::kInvoke) {
            Error(branch.location, "E_UNGUARDED_BRANCH",
                  "choice branch must start with an action, 'stop' or 'choice'");
          }
          CheckBody(branch, scope, aet, actions);
        }
        return;
    }
  }

  void CheckInstances(std::map<std::string, std::vector<Value>>* aet_args) {
    static const std::regex kReserved("(IAQ|OAQ)_[0-9]+");
    std::set<std::string> seen;
    for (const Instance& inst : ast_.instances) {
      if (!seen.insert(inst.name).second) {
        Error(inst.location, "E_DUP_NAME", "instance '" + inst.name + "' declared twice");
      }
      if (std::regex_match(inst.name, kReserved)) {
        Error(inst.location, "E_RESERVED_NAME",
              "instance name '" + inst.name + "' is reserved for implicit queues");
      }
      const AetDef* aet = ast_.FindAet(inst.aet);
      if (!aet) {
        Error(inst.location, "E_UNKNOWN_AET", "unknown element type '" + inst.aet + "'");
        continue;
      }
      if (inst.args.size() > aet->params.size()) {
        Error(inst.location, "E_PARAM_ARITY",
              "'" + aet->name + "' takes " + std::to_string(aet->params.size()) +
                  " parameter(s), got " + std::to_string(inst.args.size()));
        continue;
      }
      std::vector<Value> values;
      for (size_t i = 0; i < aet->params.size(); ++i) {
        const Param& formal = aet->params[i];
        const Expr* actual = i < inst.args.size() ? &inst.args[i]
                             : formal.init        ? &*formal.init
                                                  : nullptr;
        if (!actual) {
          Error(inst.location, "E_MISSING_DEFAULT",
                "no value for parameter '" + formal.name + "' of '" + aet->name + "'");
          continue;
        }
        auto k = TypeOf(*actual, archi_scope_, nullptr);
        size_t before = diags_.size();
        CheckAgainst(formal, *actual, k, "value");
        if (!k || diags_.size() != before) continue;
        try {
          values.push_back(
              Evaluate(*actual, [&](const Expr& leaf) { return Constant(leaf); }));
        } catch (const EvalError& err) {
          Error(actual->location, "E_UNKNOWN_VAR", err.what());
        }
      }
      (*aet_args)[inst.name] = std::move(values);
    }
  }

  const InteractionDecl* Resolve(const Endpoint& e) {
    const Instance* inst = ast_.FindInstance(e.aei);
    if (!inst) {
      Error(e.location, "E_UNKNOWN_AEI", "unknown instance '" + e.aei + "'");
      return nullptr;
    }
    const AetDef* aet = ast_.FindAet(inst->aet);
    if (!aet) return nullptr;  // already reported
    const InteractionDecl* d = aet->FindInteraction(e.interaction);
    if (!d) {
      Error(e.location, "E_UNKNOWN_INTERACTION",
            "'" + e.interaction + "' is not an interaction of '" + e.aei + "'");
    }
    return d;
  }

  void CheckAttachments() {
    std::map<Endpoint, int> uni_uses;
    std::set<std::pair<Endpoint, Endpoint>> seen;
    for (const Attachment& a : ast_.attachments) {
      const InteractionDecl* from = Resolve(a.from);
      const InteractionDecl* to = Resolve(a.to);
      if (!seen.insert({a.from, a.to}).second) {
        Error(a.location, "E_DUP_ATTACHMENT",
              "attachment from " + a.from.Dotted() + " to " + a.to.Dotted() +
                  " is declared twice");
      }
      if (a.from.aei == a.to.aei) {
        Error(a.location, "E_ATTACH_SELF",
              "attachment connects '" + a.from.aei + "' to itself");
      }
      if (!from || !to) continue;
      if (from->direction != Direction::kOutput || to->direction != Direction::kInput) {
        Error(a.location, "E_ATTACH_DIR",
              "attachments must go from an output to an input interaction (" +
                  a.from.Dotted() + " is " + ToString(from->direction) + ", " +
                  a.to.Dotted() + " is " + ToString(to->direction) + ")");
        continue;
      }
      if (from->multiplicity != Multiplicity::kUni && to->multiplicity != Multiplicity::kUni) {
        Error(a.location, "E_ANDOR_TO_NONUNI",
              "and-/or-interactions may only be attached to uni-interactions (" +
                  a.from.Dotted() + " to " + a.to.Dotted() + ")");
      }
      for (auto [e, d] : {std::pair{a.from, from}, std::pair{a.to, to}}) {
        if (d->multiplicity == Multiplicity::kUni && ++uni_uses[e] == 2) {
          Error(a.location, "E_UNI_FANOUT",
                "uni-interaction " + e.Dotted() + " occurs in more than one attachment");
        }
      }
    }

    // Clause 3 of the or-rewrite pairs each dependent output copy with an
    // input copy, so the two counts must agree per instance.
    for (const Instance& inst : ast_.instances) {
      const AetDef* aet = ast_.FindAet(inst.aet);
      if (!aet) continue;
      for (const InteractionDecl& d : aet->interactions) {
        if (!d.dep_on) continue;
        Endpoint o{inst.name, d.name, {}};
        Endpoint i{inst.name, *d.dep_on, {}};
        int no = 0, ni = 0;
        for (const Attachment& a : ast_.attachments) {
          no += (a.from == o) + (a.to == o);
          ni += (a.from == i) + (a.to == i);
        }
        if (no != ni) {
          Error(inst.location, "E_DEP_COUNT",
                o.Dotted() + " has " + std::to_string(no) + " attachment(s) but " +
                    i.Dotted() + " has " + std::to_string(ni));
        }
      }
    }
  }

  void CheckArchiInteractions() {
    std::set<Endpoint> seen;
    for (const Endpoint& e : ast_.archi_interactions) {
      if (!Resolve(e)) continue;
      if (!seen.insert(e).second) {
        Error(e.location, "E_DUP_NAME",
              "architectural interaction " + e.Dotted() + " listed twice");
      }
      for (const Attachment& a : ast_.attachments) {
        if (a.from == e || a.to == e) {
          Error(e.location, "E_ARCHI_ATTACHED",
                "architectural interaction " + e.Dotted() + " is also attached");
          break;
        }
      }
    }
  }

  const ArchiDescription& ast_;
  Scope archi_scope_;
  std::map<std::string, Value> archi_values_;
  Diagnostics diags_;
};

}  // namespace

ValidationResult Validate(ArchiDescription ast) {
  ValidationResult result;
  std::map<std::string, std::vector<Value>> aet_args;
  result.diagnostics = Checker(ast).Run(&aet_args);
  if (result.diagnostics.empty()) {
    ValidatedArchitecture arch;
    arch.ast_ = std::move(ast);
    arch.aet_args_ = std::move(aet_args);
    result.architecture = std::move(arch);
  }
  return result;
}

}  // namespace padl
