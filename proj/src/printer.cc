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

#include "padl/printer.h"

#include <sstream>

namespace padl {
namespace {

// Binding strength, loosest first.
enum Prec { kOr = 1, kAnd, kNot, kCmp, kAdd, kNeg, kAtom };

int PrecOf(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kUnary:
      return e.op == "not" ? kNot : kNeg;
    case Expr::Kind::kBinary:
      if (e.op == "or") return kOr;
      if (e.op == "and") return kAnd;
      if (e.op == "+" || e.op == "-") return kAdd;
      return kCmp;
    case Expr::Kind::kInt:
      return e.value < 0 ? kNeg : kAtom;
    default:
      return kAtom;
  }
}

void Emit(std::ostream& os, const Expr& e, int min_prec);

void EmitAt(std::ostream& os, const Expr& e, int min_prec) {
  if (PrecOf(e) < min_prec) {
    os << '(';
    Emit(os, e, 0);
    os << ')';
  } else {
    Emit(os, e, min_prec);
  }
}

void Emit(std::ostream& os, const Expr& e, int) {
  switch (e.kind) {
    case Expr::Kind::kBool:
      os << (e.value ? "true" : "false");
      return;
    case Expr::Kind::kInt:
      os << e.value;
      return;
    case Expr::Kind::kVar:
      os << e.name;
      return;
    case Expr::Kind::kSuccess:
      os << e.name << ".success";
      return;
    case Expr::Kind::kUnary:
      if (e.op == "not") {
        os << "not ";
        EmitAt(os, e.operands[0], kNot);
      } else {
        os << '-';
        // `--x` would lex as two minus signs anyway, but `-(-3)` reads better.
        EmitAt(os, e.operands[0], kAtom);
      }
      return;
    case Expr::Kind::kBinary: {
      int p = PrecOf(e);
      // Comparisons do not chain, so both sides must bind tighter.
      EmitAt(os, e.operands[0], p == kCmp ? kAdd : p);
      os << ' ' << e.op << ' ';
      EmitAt(os, e.operands[1], p == kCmp ? kAdd : p + 1);
      return;
    }
  }
}

std::string Indent(int n) { return std::string(2 * n, ' '); }

void EmitProcess(std::ostream& os, const Process& p, int depth) {
  switch (p.kind) {
    case Process::Kind::kStop:
      os << "stop";
      return;
    case Process::Kind::kInvoke:
      os << p.name << '(';
      for (size_t i = 0; i < p.args.size(); ++i) {
        if (i) os << ", ";
        os << PrintExpr(p.args[i]);
      }
      os << ')';
      return;
    case Process::Kind::kPrefix:
      os << p.name << " . ";
      EmitProcess(os, p.continuation(), depth);
      return;
    case Process::Kind::kChoice:
      os << "choice\n" << Indent(depth) << "{\n";
      for (size_t i = 0; i < p.children.size(); ++i) {
        const Process& b = p.children[i];
        os << Indent(depth + 1);
        if (b.guard) os << "cond(" << PrintExpr(*b.guard) << ") -> ";
        EmitProcess(os, b, depth + 2);
        os << (i + 1 < p.children.size() ? ",\n" : "\n");
      }
      os << Indent(depth) << '}';
      return;
  }
}

std::string TypeText(const TypeSpec& t) {
  if (t.kind == DataKind::kBool) return "boolean";
  if (!t.bounded) return "int";
  return "int(" + std::to_string(t.lo) + ".." + std::to_string(t.hi) + ")";
}

std::string ParamList(const std::vector<Param>& params) {
  if (params.empty()) return "void";
  std::string out;
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += TypeText(params[i].type) + " " + params[i].name;
    if (params[i].init) out += " := " + PrintExpr(*params[i].init);
  }
  return out;
}

void EmitEquations(std::ostream& os, const std::vector<Equation>& eqs, int depth) {
  for (size_t i = 0; i < eqs.size(); ++i) {
    const Equation& eq = eqs[i];
    os << Indent(depth) << eq.name << '(' << ParamList(eq.params) << "; void) =\n"
       << Indent(depth + 1);
    EmitProcess(os, eq.body, depth + 1);
    os << (i + 1 < eqs.size() ? ";\n" : "\n");
  }
}

void EmitInteractions(std::ostream& os, const std::vector<InteractionDecl>& all,
                      Direction dir) {
  std::vector<const InteractionDecl*> decls;
  for (const InteractionDecl& d : all) {
    if (d.direction == dir) decls.push_back(&d);
  }
  if (decls.empty()) {
    os << "    void\n";
    return;
  }
  for (size_t i = 0; i < decls.size();) {
    const InteractionDecl* head = decls[i];
    os << "    " << ToString(head->synchronicity) << ' ' << ToString(head->multiplicity)
       << ' ';
    size_t j = i;
    for (; j < decls.size() && decls[j]->synchronicity == head->synchronicity &&
           decls[j]->multiplicity == head->multiplicity;
         ++j) {
      if (j > i) os << ";\n      ";
      os << decls[j]->name;
      if (decls[j]->dep_on) os << " DEP " << *decls[j]->dep_on;
    }
    os << '\n';
    i = j;
  }
}

}  // namespace

std::string PrintExpr(const Expr& e) {
  std::ostringstream os;
  Emit(os, e, 0);
  return os.str();
}

std::string PrintProcess(const Process& p) {
  std::ostringstream os;
  EmitProcess(os, p, 0);
  return os.str();
}

std::string PrintEquations(const std::vector<Equation>& equations) {
  std::ostringstream os;
  EmitEquations(os, equations, 0);
  return os.str();
}

std::string PrettyPrint(const ArchiDescription& arch) {
  std::ostringstream os;
  os << "ARCHI_TYPE " << arch.name << '(' << ParamList(arch.params) << ")\n\n"
     << "ARCHI_BEHAVIOR\n\n";
  for (const AetDef& aet : arch.aets) {
    os << "ARCHI_ELEM_TYPE " << aet.name << '(' << ParamList(aet.params) << ")\n"
       << "  BEHAVIOR\n";
    EmitEquations(os, aet.equations, 2);
    os << "  INPUT_INTERACTIONS\n";
    EmitInteractions(os, aet.interactions, Direction::kInput);
    os << "  OUTPUT_INTERACTIONS\n";
    EmitInteractions(os, aet.interactions, Direction::kOutput);
    os << '\n';
  }
  os << "ARCHI_TOPOLOGY\n  ARCHI_ELEM_INSTANCES\n";
  for (size_t i = 0; i < arch.instances.size(); ++i) {
    const Instance& inst = arch.instances[i];
    os << "    " << inst.name << " : " << inst.aet << '(';
    for (size_t k = 0; k < inst.args.size(); ++k) {
      if (k) os << ", ";
      os << PrintExpr(inst.args[k]);
    }
    os << ')' << (i + 1 < arch.instances.size() ? ";\n" : "\n");
  }
  os << "  ARCHI_INTERACTIONS\n";
  if (arch.archi_interactions.empty()) os << "    void\n";
  for (size_t i = 0; i < arch.archi_interactions.size(); ++i) {
    os << "    " << arch.archi_interactions[i].Dotted()
       << (i + 1 < arch.archi_interactions.size() ? ";\n" : "\n");
  }
  os << "  ARCHI_ATTACHMENTS\n";
  if (arch.attachments.empty()) os << "    void\n";
  for (size_t i = 0; i < arch.attachments.size(); ++i) {
    const Attachment& a = arch.attachments[i];
    os << "    FROM " << a.from.Dotted() << " TO " << a.to.Dotted()
       << (i + 1 < arch.attachments.size() ? ";\n" : "\n");
  }
  os << "END\n";
  return os.str();
}

}  // namespace padl
