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

// Replacement of or-interactions by indexed uni-interactions.
//
// An or-interaction `a` attached l >= 2 times becomes a choice over the fresh
// actions a_1 .. a_l. When an output `o` depends on an input `i`, the index
// chosen for `i` is tracked along every path and `o` is replaced by the copy
// with the same index. Equations reached under different tracked indices are
// duplicated and named `Eq__i_j`.

#ifndef PADL_OR_REWRITE_H_
#define PADL_OR_REWRITE_H_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "padl/ast.h"

namespace padl {

class OrRewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OrInteractions {
  // Attachment count of every or-interaction; counts below 2 are left alone.
  std::map<std::string, int> attach_counts;
  // Dependent output -> input it depends on.
  std::map<std::string, std::string> dependences;
};

// Name of the k-th (1-based) fresh copy of `interaction`.
std::string IndexedName(const std::string& interaction, int k);

// Rewrites `equations`; the first equation stays first and keeps its name.
// Throws OrRewriteError if a dependent output can be reached before any
// index has been recorded for its input.
std::vector<Equation> OrRewrite(const std::vector<Equation>& equations,
                                const OrInteractions& ors);

}  // namespace padl

#endif  // PADL_OR_REWRITE_H_
