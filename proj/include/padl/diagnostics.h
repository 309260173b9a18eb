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

#ifndef PADL_DIAGNOSTICS_H_
#define PADL_DIAGNOSTICS_H_

#include <string>
#include <string_view>
#include <vector>

namespace padl {

enum class Severity { kError, kWarning };

// 1-based source position. Positions never take part in AST equality, so two
// descriptions that differ only in layout compare equal.
struct SourceLocation {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) {
    return true;
  }
};

struct Diagnostic {
  Severity severity = Severity::kError;
  SourceLocation location;
  std::string code;  // stable identifier, e.g. "E_ATTACH_DIR"
  std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

// Renders `file:line:col: severity[code]: message`.
std::string FormatDiagnostic(const Diagnostic& d, std::string_view file);

bool HasErrors(const Diagnostics& diagnostics);

// True if some diagnostic carries `code`.
bool HasCode(const Diagnostics& diagnostics, std::string_view code);

}  // namespace padl

#endif  // PADL_DIAGNOSTICS_H_
