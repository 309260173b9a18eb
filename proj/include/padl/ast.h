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

// Abstract syntax of PADL architectural descriptions extended with
// SYNC/SSYNC/ASYNC interaction qualifiers.

#ifndef PADL_AST_H_
#define PADL_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padl/diagnostics.h"

namespace padl {

using Value = std::int64_t;

enum class DataKind { kBool, kInt };

struct TypeSpec {
  DataKind kind = DataKind::kBool;
  // Inclusive range; only meaningful for kInt. `bounded` is false for a bare
  // `int`, which validation rejects.
  bool bounded = true;
  Value lo = 0;
  Value hi = 1;

  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

struct Expr {
  enum class Kind {
    kBool,     // value
    kInt,      // value
    kVar,      // name
    kSuccess,  // name.success
    kUnary,    // op in {"not", "-"}, operands[0]
    kBinary,   // op, operands[0..1]
  };
  Kind kind = Kind::kBool;
  Value value = 0;
  std::string name;
  std::string op;
  std::vector<Expr> operands;
  SourceLocation location;

  static Expr Bool(bool b);
  static Expr Int(Value v);
  static Expr Var(std::string name);
  static Expr Success(std::string interaction);
  static Expr Unary(std::string op, Expr operand);
  static Expr Binary(std::string op, Expr lhs, Expr rhs);

  friend bool operator==(const Expr&, const Expr&) = default;
};

// A process body. Choice branches are themselves Process nodes carrying an
// optional guard.
struct Process {
  enum class Kind { kStop, kInvoke, kPrefix, kChoice };
  Kind kind = Kind::kStop;
  // Action name for kPrefix, equation name for kInvoke.
  std::string name;
  // Interaction whose `.success` variable a kPrefix sets. Equal to `name`
  // except after or-rewriting, where `a_2` still sets `a.success`.
  std::string success_var;
  std::vector<Expr> args;         // kInvoke
  std::vector<Process> children;  // kPrefix: the continuation; kChoice: branches
  std::optional<Expr> guard;      // set only on choice branches
  SourceLocation location;

  static Process Stop();
  static Process Invoke(std::string equation, std::vector<Expr> args);
  static Process Prefix(std::string action, Process continuation);
  static Process Choice(std::vector<Process> branches);

  const Process& continuation() const { return children.front(); }

  friend bool operator==(const Process&, const Process&) = default;
};

struct Param {
  std::string name;
  TypeSpec type;
  std::optional<Expr> init;
  SourceLocation location;

  friend bool operator==(const Param&, const Param&) = default;
};

struct Equation {
  std::string name;
  std::vector<Param> params;
  Process body;
  SourceLocation location;

  friend bool operator==(const Equation&, const Equation&) = default;
};

enum class Direction { kInput, kOutput };
enum class Multiplicity { kUni, kAnd, kOr };
enum class Synchronicity { kSync, kSsync, kAsync };

struct InteractionDecl {
  std::string name;
  Direction direction = Direction::kInput;
  Multiplicity multiplicity = Multiplicity::kUni;
  Synchronicity synchronicity = Synchronicity::kSync;
  std::optional<std::string> dep_on;
  SourceLocation location;

  friend bool operator==(const InteractionDecl&, const InteractionDecl&) = default;
};

struct AetDef {
  std::string name;
  std::vector<Param> params;
  std::vector<Equation> equations;
  std::vector<InteractionDecl> interactions;
  SourceLocation location;

  const InteractionDecl* FindInteraction(const std::string& n) const;
  const Equation* FindEquation(const std::string& n) const;

  friend bool operator==(const AetDef&, const AetDef&) = default;
};

struct Instance {
  std::string name;
  std::string aet;
  std::vector<Expr> args;
  SourceLocation location;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Endpoint {
  std::string aei;
  std::string interaction;
  SourceLocation location;

  std::string Dotted() const { return aei + "." + interaction; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint& a, const Endpoint& b) {
    if (auto c = a.aei <=> b.aei; c != 0) return c;
    return a.interaction <=> b.interaction;
  }
};

struct Attachment {
  Endpoint from;
  Endpoint to;
  SourceLocation location;

  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct ArchiDescription {
  std::string name;
  std::vector<Param> params;
  std::vector<AetDef> aets;
  std::vector<Instance> instances;
  std::vector<Endpoint> archi_interactions;
  std::vector<Attachment> attachments;

  const AetDef* FindAet(const std::string& n) const;
  const Instance* FindInstance(const std::string& n) const;

  friend bool operator==(const ArchiDescription&, const ArchiDescription&) = default;
};

const char* ToString(Direction d);
const char* ToString(Multiplicity m);
const char* ToString(Synchronicity s);

}  // namespace padl

#endif  // PADL_AST_H_
