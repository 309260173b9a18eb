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

#ifndef PADL_LTS_GEN_H_
#define PADL_LTS_GEN_H_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "padl/ast.h"
#include "padl/lts.h"

namespace padl {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything needed to explore one element's behavior.
struct ProcessTable {
  std::string owner;                       // label prefix, `owner.action`
  std::vector<Equation> equations;         // the first one is initial
  std::map<std::string, Value> constants;  // element-type parameters
  std::set<std::string> semisync;          // interactions with a success variable
};

struct Invocation {
  std::string equation;
  std::vector<Value> args;
};

// Invocation of the first equation with its declared initial values.
Invocation InitialInvocation(const ProcessTable& table);

// Exhaustive breadth-first exploration. States are numbered in discovery
// order. Success variables live for one equation activation: they start
// false on every invocation and are set by each semi-synchronous prefix.
// Throws GenerationError on unguarded recursion or out-of-range arguments,
// StateLimitExceeded past `state_limit` states.
Lts GenerateLts(const ProcessTable& table, const Invocation& initial,
                std::size_t state_limit = kDefaultStateLimit);

}  // namespace padl

#endif  // PADL_LTS_GEN_H_
