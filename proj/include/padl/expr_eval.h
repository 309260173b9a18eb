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

#ifndef PADL_EXPR_EVAL_H_
#define PADL_EXPR_EVAL_H_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "padl/ast.h"

namespace padl {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resolves kVar and kSuccess leaves; nullopt means "unbound".
using VarLookup = std::function<std::optional<Value>(const Expr&)>;

// Booleans evaluate to 0/1. Throws EvalError on unbound names or operators
// outside the expression language.
Value Evaluate(const Expr& e, const VarLookup& lookup);

// Evaluates an expression with no free names.
Value EvaluateConstant(const Expr& e);

}  // namespace padl

#endif  // PADL_EXPR_EVAL_H_
