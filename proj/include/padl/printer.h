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

// Canonical PADL text. Parsing the output yields an AST equal to the input.

#ifndef PADL_PRINTER_H_
#define PADL_PRINTER_H_

#include <string>
#include <vector>

#include "padl/ast.h"

namespace padl {

std::string PrettyPrint(const ArchiDescription& arch);
std::string PrintEquations(const std::vector<Equation>& equations);
std::string PrintProcess(const Process& p);
std::string PrintExpr(const Expr& e);

}  // namespace padl

#endif  // PADL_PRINTER_H_
