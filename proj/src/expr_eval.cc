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

#include "padl/expr_eval.h"

namespace padl {

Value Evaluate(const Expr& e, const VarLookup& lookup) {
  switch (e.kind) {
    case Expr::Kind::kBool:
    case Expr::Kind::kInt:
      return e.value;
    case Expr::Kind::kVar:
    case Expr::Kind::kSuccess: {
      std::optional<Value> v = lookup ? lookup(e) : std::nullopt;
      if (!v) {
        throw EvalError("unbound name '" + e.name +
                        (e.kind == Expr::Kind::kSuccess ? ".success" : "") + "'");
      }
      return *v;
    }
    case Expr::Kind::kUnary: {
      Value v = Evaluate(e.operands[0], lookup);
      if (e.op == "not") return v ? 0 : 1;
      if (e.op == "-") return -v;
      break;
    }
    case Expr::Kind::kBinary: {
      // and/or short-circuit so guards like `n > 0 and x` stay total.
      if (e.op == "and") {
        return Evaluate(e.operands[0], lookup) && Evaluate(e.operands[1], lookup);
      }
      if (e.op == "or") {
        return Evaluate(e.operands[0], lookup) || Evaluate(e.operands[1], lookup);
      }
      Value a = Evaluate(e.operands[0], lookup);
      Value b = Evaluate(e.operands[1], lookup);
      if (e.op == "+") return a + b;
      if (e.op == "-") return a - b;
      if (e.op == "=") return a == b;
      if (e.op == "!=") return a != b;
      if (e.op == "<") return a < b;
      if (e.op == "<=") return a <= b;
      if (e.op == ">") return a > b;
      if (e.op == ">=") return a >= b;
      break;
    }
  }
  throw EvalError("unsupported operator '" + e.op + "'");
}

Value EvaluateConstant(const Expr& e) { return Evaluate(e, nullptr); }

}  // namespace padl
