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

#include "padl/ast.h"

#include <algorithm>
#include <sstream>

namespace padl {

Expr Expr::Bool(bool b) {
  Expr e;
  e.kind = Kind::kBool;
  e.value = b ? 1 : 0;
  return e;
}

Expr Expr::Int(Value v) {
  Expr e;
  e.kind = Kind::kInt;
  e.value = v;
  return e;
}

Expr Expr::Var(std::string name) {
  Expr e;
  e.kind = Kind::kVar;
  e.name = std::move(name);
  return e;
}

Expr Expr::Success(std::string interaction) {
  Expr e;
  e.kind = Kind::kSuccess;
  e.name = std::move(interaction);
  return e;
}

Expr Expr::Unary(std::string op, Expr operand) {
  Expr e;
  e.kind = Kind::kUnary;
  e.op = std::move(op);
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::Binary(std::string op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::kBinary;
  e.op = std::move(op);
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

Process Process::Stop() { return Process{}; }

Process Process::Invoke(std::string equation, std::vector<Expr> args) {
  Process p;
  p.kind = Kind::kInvoke;
  p.name = std::move(equation);
  p.args = std::move(args);
  return p;
}

Process Process::Prefix(std::string action, Process continuation) {
  Process p;
  p.kind = Kind::kPrefix;
  p.success_var = action;
  p.name = std::move(action);
  p.children.push_back(std::move(continuation));
  return p;
}

Process Process::Choice(std::vector<Process> branches) {
  Process p;
  p.kind = Kind::kChoice;
  p.children = std::move(branches);
  return p;
}

const InteractionDecl* AetDef::FindInteraction(const std::string& n) const {
  auto it = std::find_if(interactions.begin(), interactions.end(),
                         [&](const InteractionDecl& d) { return d.name == n; });
  return it == interactions.end() ? nullptr : &*it;
}

const Equation* AetDef::FindEquation(const std::string& n) const {
  auto it = std::find_if(equations.begin(), equations.end(),
                         [&](const Equation& e) { return e.name == n; });
  return it == equations.end() ? nullptr : &*it;
}

const AetDef* ArchiDescription::FindAet(const std::string& n) const {
  auto it = std::find_if(aets.begin(), aets.end(),
                         [&](const AetDef& a) { return a.name == n; });
  return it == aets.end() ? nullptr : &*it;
}

const Instance* ArchiDescription::FindInstance(const std::string& n) const {
  auto it = std::find_if(instances.begin(), instances.end(),
                         [&](const Instance& i) { return i.name == n; });
  return it == instances.end() ? nullptr : &*it;
}

const char* ToString(Direction d) {
  return d == Direction::kInput ? "input" : "output";
}

const char* ToString(Multiplicity m) {
  switch (m) {
    case Multiplicity::kUni: return "UNI";
    case Multiplicity::kAnd: return "AND";
    case Multiplicity::kOr: return "OR";
  }
  return "?";
}

const char* ToString(Synchronicity s) {
  switch (s) {
    case Synchronicity::kSync: return "SYNC";
    case Synchronicity::kSsync: return "SSYNC";
    case Synchronicity::kAsync: return "ASYNC";
  }
  return "?";
}

std::string FormatDiagnostic(const Diagnostic& d, std::string_view file) {
  std::ostringstream os;
  os << file << ':' << d.location.line << ':' << d.location.column << ": "
     << (d.severity == Severity::kError ? "error" : "warning") << '['
     << d.code << "]: " << d.message;
  return os.str();
}

bool HasErrors(const Diagnostics& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

bool HasCode(const Diagnostics& diagnostics, std::string_view code) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [&](const Diagnostic& d) { return d.code == code; });
}

}  // namespace padl
