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

// The padlcheck command line.
//
//   padlcheck check FILE    reduction and/or direct deadlock verification
//   padlcheck lts FILE      semantics of one instance or of the architecture
//   padlcheck graph FILE    abstract flow graph with its decomposition
//   padlcheck equiv A B     weak or strong bisimilarity of two AUT files
//
// Reports are built as JSON first; the text format is rendered from it.

#ifndef PADL_CLI_H_
#define PADL_CLI_H_

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "padl/deadlock.h"
#include "padl/elaboration.h"

namespace padl {

inline constexpr int kReportSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;        // deadlock, failed check, or distinct
inline constexpr int kExitUsage = 2;         // usage, input, or parse error
inline constexpr int kExitInconclusive = 3;  // a state limit was hit

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  int queue_capacity = kDefaultQueueCapacity;
  std::size_t state_limit = kDefaultStateLimit;
  DeadlockNotion notion = DeadlockNotion::kWeak;
  std::string mode = "reduce";  // reduce, direct, both
  std::string format;           // text or json; aut or dot for lts
  std::string out_path;         // empty: standard output
  std::string dot_path;         // check: flow graph export
  bool timings = true;
  int threads = 0;
  // lts
  std::string aei;  // empty: whole architecture
  std::string variant = "pc-wob";
  std::vector<std::string> context;
  std::vector<std::string> buffers;
  // equiv
  bool strong = false;
};

// Runs one command line; `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padl

#endif  // PADL_CLI_H_
