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

// Aldebaran (.aut) text format:
//
//   des (initial, ntrans, nstates)
//   (from, "label", to)
//
// Tau is written "i". A semi-synchronous transition is written as two lines,
// its label to the success continuation and its exception label to the
// failure one; reading such a file back yields two ordinary transitions.

#ifndef PADL_AUT_H_
#define PADL_AUT_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "padl/lts.h"

namespace padl {

class AutError : public std::runtime_error {
 public:
  AutError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

std::string WriteAut(const Lts& lts);

// Accepts `i`, `"i"`, `tau` and `"tau"` for tau. Throws AutError.
Lts ReadAut(std::string_view text);

// Graphviz digraph; exception branches are dashed and the initial state is
// drawn with a double circle.
std::string WriteDot(const Lts& lts, const std::string& name);

}  // namespace padl

#endif  // PADL_AUT_H_
