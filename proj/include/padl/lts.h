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

// Finite labeled transition systems with semi-synchronous transitions.
//
// A semi-synchronous transition carries two continuations: `target` is taken
// when the partner is ready (success = true) and `exc_target` when it is not,
// in which case the move is observed as `exc_label`. Which of the two happens
// is decided only by parallel composition; ResolveSemisync() commits every
// remaining one to its `target` before analysis.

#ifndef PADL_LTS_H_
#define PADL_LTS_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace padl {

using StateId = std::uint32_t;
using LabelId = std::uint32_t;

inline constexpr LabelId kTau = 0;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr std::size_t kDefaultStateLimit = 1'000'000;

inline constexpr std::string_view kTauName = "tau";
inline constexpr std::string_view kExceptionSuffix = "_exception";

// Per-state flag bits, OR-ed through products.
inline constexpr std::uint8_t kFlagQueueFull = 1;

bool IsExceptionLabel(std::string_view name);

class LabelTable {
 public:
  LabelTable();

  LabelId Intern(std::string_view name);
  std::optional<LabelId> Find(std::string_view name) const;
  const std::string& name(LabelId id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, LabelId> index_;
};

struct Transition {
  LabelId label = kTau;
  StateId target = kNoState;
  LabelId exc_label = kTau;
  StateId exc_target = kNoState;

  bool semisync() const { return exc_target != kNoState; }

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct Lts {
  LabelTable labels;
  StateId initial = 0;
  std::vector<std::vector<Transition>> transitions;  // indexed by source state
  std::vector<std::uint8_t> flags;

  std::size_t num_states() const { return transitions.size(); }
  // A semi-synchronous transition counts once.
  std::size_t num_transitions() const;

  StateId AddState(std::uint8_t flag_bits = 0);
  void Add(StateId from, std::string_view label, StateId to);
  void AddSemisync(StateId from, std::string_view label, StateId ok,
                   std::string_view exc_label, StateId exc);

  const std::string& label_name(LabelId id) const { return labels.name(id); }
  bool IsVisible(LabelId id) const { return id != kTau; }
  bool HasFlag(std::uint8_t bit) const;

  // Throws std::logic_error when an index is out of range.
  void CheckWellFormed() const;
};

class StateLimitExceeded : public std::runtime_error {
 public:
  StateLimitExceeded(std::size_t limit, std::size_t states, std::size_t transitions);

  std::size_t limit() const { return limit_; }
  std::size_t states() const { return states_; }
  std::size_t transitions() const { return transitions_; }

 private:
  std::size_t limit_;
  std::size_t states_;
  std::size_t transitions_;
};

// Commits each semi-synchronous transition to its success continuation.
Lts ResolveSemisync(const Lts& lts);

// Drops unreachable states, renumbers in breadth-first order, and rebuilds the
// label table from the labels actually used.
Lts Canonicalize(const Lts& lts);

// Structural equality under the same state numbering, comparing label names.
bool Identical(const Lts& a, const Lts& b);

// Visible label names that occur on some transition, sorted.
std::vector<std::string> VisibleLabels(const Lts& lts);

}  // namespace padl

#endif  // PADL_LTS_H_
