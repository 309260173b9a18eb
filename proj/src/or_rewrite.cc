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

#include "padl/or_rewrite.h"

#include <deque>
#include <set>
#include <utility>

namespace padl {
namespace {

// Tracked input -> index chosen most recently.
using Fi = std::map<std::string, int>;

class Rewriter {
 public:
  Rewriter(const std::vector<Equation>& equations, const OrInteractions& ors)
      : equations_(equations), ors_(ors) {
    for (const auto& [out, in] : ors.dependences) {
      if (Count(out) >= 2 && Count(in) >= 2) {
        tracked_outputs_[out] = in;
        tracked_inputs_.insert(in);
      }
    }
    for (const Equation& eq : equations) by_name_[eq.name] = &eq;
    ComputeExposed();
  }

  std::vector<Equation> Run() {
    if (equations_.empty()) return {};
    Request(equations_.front().name, {});
    for (std::size_t i = 1; i < equations_.size(); ++i) {
      if (exposed_[equations_[i].name].empty()) Request(equations_[i].name, {});
    }
    while (!pending_.empty()) {
      auto [name, fi] = pending_.front();
      pending_.pop_front();
      const Equation& eq = *by_name_.at(name);
      Equation out{CopyName(name, fi), eq.params, Rewrite(eq.body, fi), eq.location};
      done_.at(keys_index_.at({name, fi})) = std::move(out);
    }
    return done_;
  }

 private:
  int Count(const std::string& a) const {
    auto it = ors_.attach_counts.find(a);
    return it == ors_.attach_counts.end() ? 0 : it->second;
  }

  // Tracked inputs whose dependent output can be reached from the start of
  // an equation without passing the input first.
  void ComputeExposed() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Equation& eq : equations_) {
        std::set<std::string> found;
        Walk(eq.body, {}, &found);
        if (found != exposed_[eq.name]) {
          exposed_[eq.name] = std::move(found);
          changed = true;
        }
      }
    }
  }

  void Walk(const Process& p, std::set<std::string> blocked, std::set<std::string>* found) {
    switch (p.kind) {
      case Process::Kind::kStop:
        return;
      case Process::Kind::kInvoke:
        for (const std::string& i : exposed_[p.name]) {
          if (!blocked.count(i)) found->insert(i);
        }
        return;
      case Process::Kind::kPrefix: {
        auto out = tracked_outputs_.find(p.name);
        if (out != tracked_outputs_.end() && !blocked.count(out->second)) {
          found->insert(out->second);
        }
        if (tracked_inputs_.count(p.name)) blocked.insert(p.name);
        Walk(p.continuation(), std::move(blocked), found);
        return;
      }
      case Process::Kind::kChoice:
        for (const Process& b : p.children) Walk(b, blocked, found);
        return;
    }
  }

  static std::string CopyName(const std::string& eq, const Fi& fi) {
    std::string name = eq;
    for (const auto& [input, index] : fi) name += "__" + IndexedName(input, index);
    return name;
  }

  std::string Request(const std::string& eq, const Fi& fi) {
    Fi restricted;
    for (const auto& [input, index] : fi) {
      if (exposed_[eq].count(input)) restricted[input] = index;
    }
    auto key = std::make_pair(eq, restricted);
    if (!keys_index_.count(key)) {
      keys_index_[key] = done_.size();
      done_.emplace_back();
      pending_.push_back(key);
    }
    return CopyName(eq, restricted);
  }

  static Process Fresh(const Process& original, std::string action, Process continuation) {
    Process p = Process::Prefix(std::move(action), std::move(continuation));
    p.success_var = original.success_var;
    p.location = original.location;
    return p;
  }

  Process Rewrite(const Process& p, const Fi& fi) {
    switch (p.kind) {
      case Process::Kind::kStop:
        return p;
      case Process::Kind::kInvoke: {
        Process q = p;
        q.name = Request(p.name, fi);
        return q;
      }
      case Process::Kind::kPrefix: {
        const std::string& a = p.name;
        if (auto out = tracked_outputs_.find(a); out != tracked_outputs_.end()) {
          auto index = fi.find(out->second);
          if (index == fi.end()) {
            throw OrRewriteError("dependent output '" + a + "' is reachable before any '" +
                                 out->second + "' has been chosen");
          }
          return Fresh(p, IndexedName(a, index->second), Rewrite(p.continuation(), fi));
        }
        int l = Count(a);
        if (l < 2) return Fresh(p, a, Rewrite(p.continuation(), fi));
        std::vector<Process> branches;
        for (int j = 1; j <= l; ++j) {
          Fi next = fi;
          if (tracked_inputs_.count(a)) next[a] = j;
          branches.push_back(Fresh(p, IndexedName(a, j), Rewrite(p.continuation(), next)));
        }
        Process c = Process::Choice(std::move(branches));
        c.location = p.location;
        return c;
      }
      case Process::Kind::kChoice: {
        Process c = p;
        for (Process& b : c.children) {
          std::optional<Expr> guard = b.guard;
          b = Rewrite(b, fi);
          b.guard = std::move(guard);
        }
        return c;
      }
    }
    return p;
  }

  const std::vector<Equation>& equations_;
  const OrInteractions& ors_;
  std::map<std::string, std::string> tracked_outputs_;
  std::set<std::string> tracked_inputs_;
  std::map<std::string, const Equation*> by_name_;
  std::map<std::string, std::set<std::string>> exposed_;
  std::map<std::pair<std::string, Fi>, std::size_t> keys_index_;
  std::deque<std::pair<std::string, Fi>> pending_;
  std::vector<Equation> done_;
};

}  // namespace

std::string IndexedName(const std::string& interaction, int k) {
  return interaction + "_" + std::to_string(k);
}

std::vector<Equation> OrRewrite(const std::vector<Equation>& equations,
                                const OrInteractions& ors) {
  return Rewriter(equations, ors).Run();
}

}  // namespace padl
