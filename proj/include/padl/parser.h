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

#ifndef PADL_PARSER_H_
#define PADL_PARSER_H_

#include <optional>
#include <string_view>
#include <vector>

#include "padl/ast.h"
#include "padl/diagnostics.h"

namespace padl {

struct ParseResult {
  std::optional<ArchiDescription> description;
  Diagnostics diagnostics;

  bool ok() const { return description.has_value(); }
};

// Parses a complete `ARCHI_TYPE ... END` description. Lexical and syntactic
// problems are reported as diagnostics; malformed input never throws.
ParseResult Parse(std::string_view source);

// Parses a `;`-separated sequence of behavioral equations, the body of a
// BEHAVIOR section. Returns nullopt and fills `diagnostics` on failure.
std::optional<std::vector<Equation>> ParseEquations(std::string_view source,
                                                    Diagnostics* diagnostics);

// Parses a single guard/argument expression.
std::optional<Expr> ParseExpression(std::string_view source,
                                    Diagnostics* diagnostics);

}  // namespace padl

#endif  // PADL_PARSER_H_
