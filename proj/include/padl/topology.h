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

// Topological reduction of deadlock verification.
//
// The abstract flow graph has one vertex per declared instance and an edge
// between every attached pair. Cyclic unions are the nontrivial biconnected
// components, merged when they share a vertex. The remaining bridge edges
// are grouped into stars leaf-inward. Stars are checked for compatibility
// and cyclic unions for interoperability; when every condition holds the
// architecture is deadlock free iff some instance is.

#ifndef PADL_TOPOLOGY_H_
#define PADL_TOPOLOGY_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padl/deadlock.h"
#include "padl/elaboration.h"
#include "padl/equivalence.h"

namespace padl {

struct FlowGraph {
  std::vector<std::string> vertices;             // declaration order
  std::vector<std::pair<int, int>> edges;        // first < second, sorted
  std::vector<std::vector<int>> adjacency;       // sorted

  int index(const std::string& aei) const;  // -1 when absent
  std::vector<std::string> neighbors(const std::string& aei) const;
};

FlowGraph BuildFlowGraph(const ValidatedArchitecture& arch);

struct CyclicUnion {
  std::vector<std::string> members;   // declaration order
  std::vector<std::string> frontier;  // members with a neighbor outside
};

struct Star {
  std::string center;
  std::vector<std::string> border;  // declaration order
};

struct Decomposition {
  std::vector<std::vector<std::string>> components;
  std::vector<CyclicUnion> cyclic_unions;
  std::vector<Star> stars;
  // Instances with at least one bridge edge.
  std::vector<std::string> acyclic;

  // Index into cyclic_unions, or -1.
  int union_of(const std::string& aei) const;
};

Decomposition Decompose(const FlowGraph& graph);

std::string FlowGraphToDot(const std::string& name, const FlowGraph& graph,
                           const Decomposition& decomposition);

enum class Verdict { kHolds, kFails, kInconclusive };
const char* ToString(Verdict v);

enum class CheckKind { kCompatibility, kInteroperability };
const char* ToString(CheckKind k);

struct CheckRecord {
  CheckKind kind = CheckKind::kCompatibility;
  std::string subject;                // K, or the interoperating member
  std::vector<std::string> partners;  // {Cj}, or the cyclic union
  Verdict verdict = Verdict::kInconclusive;
  FormulaPtr formula;  // holds on the lhs, fails on the rhs
  std::string error;
  std::size_t lhs_states = 0;
  std::size_t rhs_states = 0;
  bool capacity_saturated = false;  // some queue was full in either operand
  double seconds = 0;
};

// Both sides of a check, before semi-synchronous resolution.
struct CheckOperands {
  Lts lhs;
  Lts rhs;
};

// Throws std::invalid_argument unless `partner` is attached to `center`.
CheckOperands CompatibilityOperands(const Elaboration& e, const std::string& center,
                                    const std::string& partner,
                                    std::size_t state_limit = kDefaultStateLimit);
CheckRecord CheckCompatibility(const Elaboration& e, const std::string& center,
                               const std::string& partner,
                               std::size_t state_limit = kDefaultStateLimit);

// Throws std::invalid_argument unless `member` is in `cycle` and the cycle
// has at least three instances.
CheckOperands InteroperabilityOperands(const Elaboration& e, const std::vector<std::string>& cycle,
                                       const std::string& member,
                                       std::size_t state_limit = kDefaultStateLimit);
CheckRecord CheckInteroperability(const Elaboration& e, const std::vector<std::string>& cycle,
                                  const std::string& member,
                                  std::size_t state_limit = kDefaultStateLimit);

struct VerifyOptions {
  std::size_t state_limit = kDefaultStateLimit;
  DeadlockNotion notion = DeadlockNotion::kWeak;  // direct check only
  int threads = 0;                                // 0: hardware concurrency
};

struct AeiStatus {
  std::string aei;
  Verdict deadlock_free = Verdict::kInconclusive;
  std::size_t states = 0;
};

struct ConditionRecord {
  std::string id;  // "1", "2a", "2b", "2c"
  std::string subject;
  std::vector<std::string> partners;
  Verdict verdict = Verdict::kInconclusive;
  std::vector<std::size_t> checks;  // indices into ReductionReport::checks
};

enum class Conclusion { kDeadlockFree, kDeadlockFound, kConditionsFailed, kInconclusive };
const char* ToString(Conclusion c);

struct ReductionReport {
  Decomposition decomposition;
  std::vector<AeiStatus> aeis;  // partially closed, without buffers
  std::vector<CheckRecord> checks;
  std::vector<ConditionRecord> conditions;
  Conclusion conclusion = Conclusion::kInconclusive;
  std::string witness;             // deadlock-free instance, or the first instance
  std::vector<std::string> trace;  // witness trace to its own deadlock
  double seconds = 0;
};

ReductionReport VerifyDeadlockByReduction(const Elaboration& e, const VerifyOptions& options = {});

struct DirectReport {
  Verdict deadlock_free = Verdict::kInconclusive;
  std::vector<std::string> trace;  // to the first deadlock found
  std::size_t states = 0;
  std::size_t transitions = 0;
  bool capacity_saturated = false;  // some queue was full in a reachable state
  std::string error;
  double seconds = 0;
};

// Whole-architecture semantics, partially closed with every buffer.
Lts ArchitectureSemantics(const Elaboration& e, std::size_t state_limit = kDefaultStateLimit);

// Whole-architecture semantics observed through the visible names of `aei`.
Lts ProjectedArchitecture(const Elaboration& e, const std::string& aei,
                          std::size_t state_limit = kDefaultStateLimit);

DirectReport VerifyDeadlockDirect(const Elaboration& e, const VerifyOptions& options = {});

struct ConformityReport {
  Verdict conformant = Verdict::kInconclusive;
  FormulaPtr formula;  // holds on the renamed refinement, fails on the original
  std::string error;
  std::size_t states = 0;
  std::size_t refined_states = 0;
  // Set when conformant and the original satisfies every reduction condition.
  std::optional<Conclusion> inherited;
};

// Renames each `#`-separated part of every label of `lts`: a dotted
// interaction is looked up first, then its instance name. Parts are then
// sorted so that labels compare independently of member order.
Lts RenameLinks(const Lts& lts, const LabelMap& rename);

ConformityReport CheckBehavioralConformity(const Elaboration& original, const Elaboration& refined,
                                           const LabelMap& rename,
                                           const VerifyOptions& options = {});

}  // namespace padl

#endif  // PADL_TOPOLOGY_H_
