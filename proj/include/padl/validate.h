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

#ifndef PADL_VALIDATE_H_
#define PADL_VALIDATE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padl/ast.h"
#include "padl/diagnostics.h"

namespace padl {

struct ValidationResult;

// An architecture that passed every static check. Only Validate() builds
// one, so holders may rely on all references resolving.
class ValidatedArchitecture {
 public:
  const ArchiDescription& description() const { return ast_; }
  const std::string& name() const { return ast_.name; }
  const std::vector<Instance>& instances() const { return ast_.instances; }
  const std::vector<Attachment>& attachments() const { return ast_.attachments; }

  const Instance& instance(const std::string& aei) const;
  const AetDef& aet_of(const std::string& aei) const;
  // Throws std::out_of_range for an unknown endpoint.
  const InteractionDecl& interaction(const Endpoint& e) const;
  const InteractionDecl* FindInteraction(const Endpoint& e) const;
  // AET parameter values of `aei` in declaration order, defaults applied.
  const std::vector<Value>& aet_args(const std::string& aei) const;
  bool IsArchitectural(const Endpoint& e) const;

 private:
  friend ValidationResult Validate(ArchiDescription ast);

  ArchiDescription ast_;
  std::map<std::string, std::vector<Value>> aet_args_;
};

struct ValidationResult {
  std::optional<ValidatedArchitecture> architecture;
  Diagnostics diagnostics;

  bool ok() const { return architecture.has_value(); }
};

// Runs every check and collects one diagnostic per violation. Exactly one
// of `architecture` and `diagnostics` is non-empty.
ValidationResult Validate(ArchiDescription ast);

// Number of attachments involving `endpoint`. Throws std::out_of_range if the
// endpoint does not name a declared interaction.
int AttachNo(const ValidatedArchitecture& arch, const Endpoint& endpoint);

}  // namespace padl

#endif  // PADL_VALIDATE_H_
