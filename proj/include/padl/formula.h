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

// Hennessy-Milner formulas used as distinguishing diagnostics.
//
//   f ::= tt | not f | f and ... and f | <a> f
//
// Under the weak modality <<a>> f holds when some tau* a tau* path reaches a
// state satisfying f, and <<tau>> f when some tau* path does (possibly the
// empty one).

#ifndef PADL_FORMULA_H_
#define PADL_FORMULA_H_

#include <memory>
#include <string>
#include <vector>

#include "padl/lts.h"

namespace padl {

enum class Modality { kWeak, kStrong };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { kTrue, kNot, kAnd, kDiamond };
  Kind kind = Kind::kTrue;
  std::string label;  // kDiamond
  std::vector<FormulaPtr> operands;

  static FormulaPtr True();
  static FormulaPtr Not(FormulaPtr f);
  // An empty conjunction is tt and a singleton is its member.
  static FormulaPtr And(std::vector<FormulaPtr> fs);
  static FormulaPtr Diamond(std::string label, FormulaPtr f);
};

std::string ToString(const Formula& f, Modality m);
std::size_t Depth(const Formula& f);

// Direct model checking on `lts`, semi-synchronous transitions taken to
// their success continuation.
bool Satisfies(const Lts& lts, StateId state, const Formula& f, Modality m);

}  // namespace padl

#endif  // PADL_FORMULA_H_
