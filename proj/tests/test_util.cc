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

#include "test_util.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "padl/parser.h"

namespace padl::testing {

std::string FixturePath(const std::string& name) {
  return std::string(PADL_FIXTURE_DIR) + "/" + name;
}

std::string ReadFixture(const std::string& name) {
  std::ifstream in(FixturePath(name));
  if (!in) {
    std::cerr << "cannot open fixture " << name << "\n";
    std::abort();
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ValidatedArchitecture LoadArchitecture(const std::string& source, const std::string& label) {
  ParseResult parsed = Parse(source);
  Diagnostics diags = parsed.diagnostics;
  if (parsed.ok()) {
    ValidationResult v = Validate(*parsed.description);
    if (v.ok()) return *v.architecture;
    diags = v.diagnostics;
  }
  for (const Diagnostic& d : diags) std::cerr << FormatDiagnostic(d, label) << "\n";
  std::abort();
}

ValidatedArchitecture LoadFixture(const std::string& name) {
  return LoadArchitecture(ReadFixture(name), name);
}

std::string ReplaceOnce(std::string text, const std::string& from, const std::string& to) {
  size_t pos = text.find(from);
  if (pos == std::string::npos) {
    std::cerr << "ReplaceOnce: '" << from << "' not found\n";
    std::abort();
  }
  return text.replace(pos, from.size(), to);
}

}  // namespace padl::testing
