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

#include "padl/topology.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "padl/operators.h"

namespace padl {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool Contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Runs every job, spreading them over at most `threads` workers.
void RunAll(const std::vector<std::function<void()>>& jobs, int threads) {
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, jobs.size());
  if (workers <= 1) {
    for (const auto& job : jobs) job();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) jobs[i]();
    });
  }
  for (std::thread& t : pool) t.join();
}

// Edge-based biconnected components by depth-first search.
std::vector<std::set<int>> BiconnectedComponents(const FlowGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::set<int>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int v : g.adjacency[u]) {
      if (v == parent) continue;
      if (disc[v] == -1) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::set<int> comp;
          std::pair<int, int> e;
          do {
            e = stack.back();
            stack.pop_back();
            comp.insert(e.first);
            comp.insert(e.second);
          } while (e != std::make_pair(u, v));
          out.push_back(std::move(comp));
        }
      } else if (disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] == -1) dfs(s, -1);
  }
  return out;
}

std::vector<std::string> Names(const FlowGraph& g, const std::set<int>& ids) {
  std::vector<std::string> out;
  for (int i : ids) out.push_back(g.vertices[i]);
  return out;
}

LabelSet Intersect(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

LabelSet Union(LabelSet a, const LabelSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

CheckRecord RunCheck(CheckKind kind, std::string subject, std::vector<std::string> partners,
                     const std::function<CheckOperands()>& build) {
  CheckRecord record;
  record.kind = kind;
  record.subject = std::move(subject);
  record.partners = std::move(partners);
  const auto start = Clock::now();
  try {
    CheckOperands ops = build();
    record.lhs_states = ops.lhs.num_states();
    record.rhs_states = ops.rhs.num_states();
    record.capacity_saturated = ops.lhs.HasFlag(kFlagQueueFull) || ops.rhs.HasFlag(kFlagQueueFull);
    EquivalenceResult r = WeakBisimCheck(ops.lhs, ops.rhs);
    record.verdict = r.equivalent ? Verdict::kHolds : Verdict::kFails;
    record.formula = r.formula;
  } catch (const StateLimitExceeded& ex) {
    record.verdict = Verdict::kInconclusive;
    record.error = ex.what();
  }
  record.seconds = SecondsSince(start);
  return record;
}

// Deadlock freedom of a resolved LTS, with a shortest trace to the earliest
// deadlock in breadth-first numbering.
Verdict DeadlockFreedom(const Lts& lts, DeadlockNotion notion, std::vector<std::string>* trace) {
  const Lts resolved = ResolveSemisync(lts);
  std::vector<StateId> dead = FindDeadlocks(resolved, notion);
  if (dead.empty()) return Verdict::kHolds;
  if (trace != nullptr) {
    StateId first = *std::min_element(dead.begin(), dead.end());
    *trace = ShortestTrace(resolved, first).value_or(std::vector<std::string>{});
  }
  return Verdict::kFails;
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int FlowGraph::index(const std::string& aei) const {
  auto it = std::find(vertices.begin(), vertices.end(), aei);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

std::vector<std::string> FlowGraph::neighbors(const std::string& aei) const {
  std::vector<std::string> out;
  int i = index(aei);
  if (i < 0) return out;
  for (int j : adjacency[i]) out.push_back(vertices[j]);
  return out;
}

FlowGraph BuildFlowGraph(const ValidatedArchitecture& arch) {
  FlowGraph g;
  for (const Instance& inst : arch.instances()) g.vertices.push_back(inst.name);
  g.adjacency.resize(g.vertices.size());
  std::set<std::pair<int, int>> edges;
  for (const Attachment& a : arch.attachments()) {
    int x = g.index(a.from.aei);
    int y = g.index(a.to.aei);
    if (x < 0 || y < 0 || x == y) continue;
    edges.emplace(std::min(x, y), std::max(x, y));
  }
  g.edges.assign(edges.begin(), edges.end());
  for (const auto& [x, y] : g.edges) {
    g.adjacency[x].push_back(y);
    g.adjacency[y].push_back(x);
  }
  for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
  return g;
}

int Decomposition::union_of(const std::string& aei) const {
  for (std::size_t i = 0; i < cyclic_unions.size(); ++i) {
    if (Contains(cyclic_unions[i].members, aei)) return static_cast<int>(i);
  }
  return -1;
}

Decomposition Decompose(const FlowGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  Decomposition d;

  // Connected components.
  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int c = static_cast<int>(d.components.size());
    std::set<int> members;
    std::vector<int> work = {s};
    comp[s] = c;
    while (!work.empty()) {
      int u = work.back();
      work.pop_back();
      members.insert(u);
      for (int v : g.adjacency[u]) {
        if (comp[v] == -1) {
          comp[v] = c;
          work.push_back(v);
        }
      }
    }
    d.components.push_back(Names(g, members));
  }

  // Nontrivial biconnected components, merged when they share a vertex.
  std::vector<std::set<int>> blocks;
  for (std::set<int>& b : BiconnectedComponents(g)) {
    if (b.size() >= 3) blocks.push_back(std::move(b));
  }
  std::vector<int> parent(blocks.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      for (int v : blocks[i]) {
        if (blocks[j].count(v)) {
          parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
          break;
        }
      }
    }
  }
  std::map<int, std::set<int>> merged;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    merged[find(static_cast<int>(i))].insert(blocks[i].begin(), blocks[i].end());
  }
  std::vector<int> union_of(n, -1);
  std::vector<std::set<int>> unions;
  for (auto& [root, members] : merged) unions.push_back(members);
  std::sort(unions.begin(), unions.end(),
            [](const std::set<int>& a, const std::set<int>& b) { return *a.begin() < *b.begin(); });
  for (std::size_t u = 0; u < unions.size(); ++u) {
    CyclicUnion cu;
    for (int v : unions[u]) union_of[v] = static_cast<int>(u);
    cu.members = Names(g, unions[u]);
    for (int v : unions[u]) {
      for (int w : g.adjacency[v]) {
        if (!unions[u].count(w)) {
          cu.frontier.push_back(g.vertices[v]);
          break;
        }
      }
    }
    d.cyclic_unions.push_back(std::move(cu));
  }

  // Bridge edges form a forest; peel it leaf-inward.
  std::vector<std::set<int>> forest(n);
  for (const auto& [x, y] : g.edges) {
    if (union_of[x] != -1 && union_of[x] == union_of[y]) continue;
    forest[x].insert(y);
    forest[y].insert(x);
  }
  for (int v = 0; v < n; ++v) {
    if (!forest[v].empty()) d.acyclic.push_back(g.vertices[v]);
  }
  std::map<int, std::set<int>> stars;
  auto center_rank = [&](int v) {
    return std::make_tuple(union_of[v] != -1 ? 1 : 0, static_cast<int>(g.adjacency[v].size()), -v);
  };
  while (true) {
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v) {
      if (forest[v].size() == 1) leaves.push_back(v);
    }
    if (leaves.empty()) break;
    for (int leaf : leaves) {
      if (forest[leaf].size() != 1) continue;
      int other = *forest[leaf].begin();
      int center = other, border = leaf;
      if (forest[other].size() == 1 && center_rank(leaf) > center_rank(other)) {
        center = leaf;
        border = other;
      }
      stars[center].insert(border);
      forest[leaf].erase(other);
      forest[other].erase(leaf);
    }
  }
  for (const auto& [center, border] : stars) {
    d.stars.push_back(Star{g.vertices[center], Names(g, border)});
  }
  return d;
}

std::string FlowGraphToDot(const std::string& name, const FlowGraph& g, const Decomposition& d) {
  std::ostringstream out;
  out << "graph " << Quote(name) << " {\n";
  out << "  node [shape=box];\n";
  std::set<std::string> clustered;
  for (std::size_t u = 0; u < d.cyclic_unions.size(); ++u) {
    const CyclicUnion& cu = d.cyclic_unions[u];
    out << "  subgraph cluster_" << u << " {\n";
    out << "    label=" << Quote("cyclic union " + std::to_string(u + 1)) << ";\n";
    out << "    style=dashed;\n";
    for (const std::string& m : cu.members) {
      out << "    " << Quote(m);
      if (Contains(cu.frontier, m)) out << " [style=bold, color=red]";
      out << ";\n";
      clustered.insert(m);
    }
    out << "  }\n";
  }
  for (const std::string& v : g.vertices) {
    if (!clustered.count(v)) out << "  " << Quote(v) << ";\n";
  }
  for (const auto& [x, y] : g.edges) {
    out << "  " << Quote(g.vertices[x]) << " -- " << Quote(g.vertices[y]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

const char* ToString(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kFails:
      return "fails";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "";
}

const char* ToString(CheckKind k) {
  return k == CheckKind::kCompatibility ? "compatibility" : "interoperability";
}

const char* ToString(Conclusion c) {
  switch (c) {
    case Conclusion::kDeadlockFree:
      return "deadlock_free";
    case Conclusion::kDeadlockFound:
      return "deadlock_found";
    case Conclusion::kConditionsFailed:
      return "conditions_failed";
    case Conclusion::kInconclusive:
      return "inconclusive";
  }
  return "";
}

CheckOperands CompatibilityOperands(const Elaboration& e, const std::string& center,
                                    const std::string& partner, std::size_t state_limit) {
  FlowGraph g = BuildFlowGraph(e.architecture());
  std::vector<std::string> border = g.neighbors(center);
  if (!Contains(border, partner)) {
    throw std::invalid_argument("'" + partner + "' is not attached to '" + center + "'");
  }
  const std::vector<std::string> all = e.instance_names();
  std::vector<std::string> star;
  for (const std::string& v : all) {
    if (v == center || Contains(border, v)) star.push_back(v);
  }
  Lts k = e.AeiSemantics(center, all, Closure::kPartial, {partner}, state_limit);
  Lts c = e.AeiSemantics(partner, star, Closure::kTotal, {center}, state_limit);
  LabelSet sync = Intersect(e.Names(center, {partner}).sync, e.Names(partner, {center}).sync);
  LabelSet hidden = Union(e.QueueInteractions(center, {partner}), e.Exceptions(center, {partner}));
  CheckOperands ops;
  ops.lhs = Hide(Parallel(k, c, sync, state_limit), hidden);
  ops.rhs = e.AeiSemantics(center, all, Closure::kPartial, {}, state_limit);
  return ops;
}

CheckRecord CheckCompatibility(const Elaboration& e, const std::string& center,
                               const std::string& partner, std::size_t state_limit) {
  return RunCheck(CheckKind::kCompatibility, center, {partner},
                  [&] { return CompatibilityOperands(e, center, partner, state_limit); });
}

CheckOperands InteroperabilityOperands(const Elaboration& e, const std::vector<std::string>& cycle,
                                       const std::string& member, std::size_t state_limit) {
  if (cycle.size() < 3) throw std::invalid_argument("a cycle has at least three instances");
  if (!Contains(cycle, member)) {
    throw std::invalid_argument("'" + member + "' is not a member of the cycle");
  }
  const std::vector<std::string> all = e.instance_names();
  SemanticsRequest req;
  req.subject = cycle;
  req.context = all;
  req.closure = Closure::kTotal;
  req.buffers_for = cycle;
  req.partially_closed = {member};
  req.state_limit = state_limit;
  std::vector<std::string> others;
  for (const std::string& c : cycle) {
    if (c != member) others.push_back(c);
  }
  LabelSet hidden = Union(e.QueueInteractions(member, others), e.Exceptions(member, others));
  CheckOperands ops;
  ops.lhs = Hide(KeepOnly(e.CompositeSemantics(req), e.Names(member, all).visible), hidden);
  ops.rhs = e.AeiSemantics(member, all, Closure::kPartial, {}, state_limit);
  return ops;
}

CheckRecord CheckInteroperability(const Elaboration& e, const std::vector<std::string>& cycle,
                                  const std::string& member, std::size_t state_limit) {
  return RunCheck(CheckKind::kInteroperability, member, cycle,
                  [&] { return InteroperabilityOperands(e, cycle, member, state_limit); });
}

ReductionReport VerifyDeadlockByReduction(const Elaboration& e, const VerifyOptions& options) {
  const auto start = Clock::now();
  ReductionReport report;
  const std::vector<std::string> all = e.instance_names();
  const FlowGraph g = BuildFlowGraph(e.architecture());
  report.decomposition = Decompose(g);
  const Decomposition& d = report.decomposition;

  report.aeis.resize(all.size());
  std::vector<std::vector<std::string>> traces(all.size());
  {
    std::vector<std::function<void()>> jobs;
    for (std::size_t i = 0; i < all.size(); ++i) {
      jobs.push_back([&, i] {
        AeiStatus& s = report.aeis[i];
        s.aei = all[i];
        try {
          Lts l = e.AeiSemantics(all[i], all, Closure::kPartial, {}, options.state_limit);
          s.states = l.num_states();
          s.deadlock_free = DeadlockFreedom(l, DeadlockNotion::kWeak, &traces[i]);
        } catch (const StateLimitExceeded&) {
          s.deadlock_free = Verdict::kInconclusive;
        }
      });
    }
    RunAll(jobs, options.threads);
  }
  auto status = [&](const std::string& aei) {
    return report.aeis[std::find(all.begin(), all.end(), aei) - all.begin()].deadlock_free;
  };

  // One job per condition; each yields its condition and the checks it ran.
  struct Outcome {
    ConditionRecord condition;
    std::vector<CheckRecord> checks;
  };
  std::vector<Outcome> outcomes;
  auto NewOutcome = [](std::string id, std::string subject, std::vector<std::string> partners) {
    Outcome o;
    o.condition.id = std::move(id);
    o.condition.subject = std::move(subject);
    o.condition.partners = std::move(partners);
    return o;
  };
  std::vector<std::function<void(Outcome&)>> work;
  for (const Star& star : d.stars) {
    for (const std::string& c : star.border) {
      outcomes.push_back(NewOutcome("1", star.center, {c}));
      work.push_back([&e, &options, center = star.center, c](Outcome& o) {
        o.checks.push_back(CheckCompatibility(e, center, c, options.state_limit));
        o.condition.verdict = o.checks.back().verdict;
      });
    }
  }
  // Tries candidates in order and stops at the first that interoperates.
  auto first_success = [&e, &options](std::vector<std::string> cycle,
                                      std::vector<std::string> candidates) {
    return [&e, &options, cycle, candidates](Outcome& o) {
      bool inconclusive = false;
      o.condition.verdict = Verdict::kFails;
      for (const std::string& c : candidates) {
        o.checks.push_back(CheckInteroperability(e, cycle, c, options.state_limit));
        if (o.checks.back().verdict == Verdict::kHolds) {
          o.condition.verdict = Verdict::kHolds;
          return;
        }
        if (o.checks.back().verdict == Verdict::kInconclusive) inconclusive = true;
      }
      if (inconclusive) o.condition.verdict = Verdict::kInconclusive;
    };
  };
  for (const CyclicUnion& cu : d.cyclic_unions) {
    if (cu.frontier.empty()) {
      outcomes.push_back(NewOutcome("2a", "", cu.members));
      work.push_back(first_success(cu.members, cu.members));
    }
    for (const std::string& f : cu.frontier) {
      outcomes.push_back(NewOutcome("2b", f, cu.members));
      work.push_back(first_success(cu.members, {f}));
    }
    bool frontier_free = false;
    for (const std::string& f : cu.frontier) frontier_free |= status(f) == Verdict::kHolds;
    std::vector<std::string> candidates;
    for (const std::string& m : cu.members) {
      if (!Contains(cu.frontier, m) && status(m) == Verdict::kHolds) candidates.push_back(m);
    }
    if (!frontier_free && !candidates.empty()) {
      outcomes.push_back(NewOutcome("2c", "", cu.members));
      work.push_back(first_success(cu.members, candidates));
    }
  }
  {
    std::vector<std::function<void()>> jobs;
    for (std::size_t i = 0; i < work.size(); ++i) {
      jobs.push_back([&, i] { work[i](outcomes[i]); });
    }
    RunAll(jobs, options.threads);
  }
  bool failed = false, inconclusive = false;
  for (Outcome& o : outcomes) {
    for (CheckRecord& c : o.checks) {
      o.condition.checks.push_back(report.checks.size());
      report.checks.push_back(std::move(c));
    }
    if (o.condition.subject.empty() && o.condition.checks.size() > 0) {
      o.condition.subject = report.checks[o.condition.checks.back()].subject;
    }
    failed |= o.condition.verdict == Verdict::kFails;
    inconclusive |= o.condition.verdict == Verdict::kInconclusive;
    report.conditions.push_back(std::move(o.condition));
  }

  if (failed) {
    report.conclusion = Conclusion::kConditionsFailed;
  } else if (inconclusive) {
    report.conclusion = Conclusion::kInconclusive;
  } else {
    report.conclusion = Conclusion::kInconclusive;
    bool all_fail = !all.empty();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (report.aeis[i].deadlock_free == Verdict::kHolds) {
        report.conclusion = Conclusion::kDeadlockFree;
        report.witness = all[i];
        break;
      }
      all_fail &= report.aeis[i].deadlock_free == Verdict::kFails;
    }
    if (report.conclusion != Conclusion::kDeadlockFree && all_fail) {
      report.conclusion = Conclusion::kDeadlockFound;
      report.witness = all.front();
      report.trace = traces.front();
    }
  }
  report.seconds = SecondsSince(start);
  return report;
}

Lts ArchitectureSemantics(const Elaboration& e, std::size_t state_limit) {
  SemanticsRequest req;
  req.subject = e.instance_names();
  req.context = req.subject;
  req.closure = Closure::kPartial;
  req.buffers_for = req.subject;
  req.state_limit = state_limit;
  return e.CompositeSemantics(req);
}

Lts ProjectedArchitecture(const Elaboration& e, const std::string& aei, std::size_t state_limit) {
  return KeepOnly(ArchitectureSemantics(e, state_limit), e.Names(aei, e.instance_names()).visible);
}

DirectReport VerifyDeadlockDirect(const Elaboration& e, const VerifyOptions& options) {
  const auto start = Clock::now();
  DirectReport report;
  try {
    Lts lts = ArchitectureSemantics(e, options.state_limit);
    report.states = lts.num_states();
    report.transitions = lts.num_transitions();
    report.capacity_saturated = lts.HasFlag(kFlagQueueFull);
    report.deadlock_free = DeadlockFreedom(lts, options.notion, &report.trace);
  } catch (const StateLimitExceeded& ex) {
    report.deadlock_free = Verdict::kInconclusive;
    report.error = ex.what();
  }
  report.seconds = SecondsSince(start);
  return report;
}

Lts RenameLinks(const Lts& lts, const LabelMap& rename) {
  auto rename_part = [&](const std::string& part) {
    std::string base = part, suffix;
    if (IsExceptionLabel(part)) {
      base = part.substr(0, part.size() - kExceptionSuffix.size());
      suffix = std::string(kExceptionSuffix);
    }
    if (auto it = rename.find(base); it != rename.end()) return it->second + suffix;
    const std::size_t dot = base.find('.');
    if (dot != std::string::npos) {
      if (auto it = rename.find(base.substr(0, dot)); it != rename.end()) {
        return it->second + base.substr(dot) + suffix;
      }
    }
    return part;
  };
  LabelMap map;
  for (LabelId id = 1; id < lts.labels.size(); ++id) {
    const std::string& name = lts.label_name(id);
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
      std::size_t hash = name.find('#', pos);
      parts.push_back(rename_part(name.substr(pos, hash - pos)));
      if (hash == std::string::npos) break;
      pos = hash + 1;
    }
    std::sort(parts.begin(), parts.end());
    std::string joined;
    for (const std::string& p : parts) joined += (joined.empty() ? "" : "#") + p;
    if (joined != name) map[name] = joined;
  }
  return Relabel(lts, map);
}

ConformityReport CheckBehavioralConformity(const Elaboration& original, const Elaboration& refined,
                                           const LabelMap& rename, const VerifyOptions& options) {
  ConformityReport report;
  try {
    Lts a = ArchitectureSemantics(original, options.state_limit);
    Lts b = ArchitectureSemantics(refined, options.state_limit);
    report.states = a.num_states();
    report.refined_states = b.num_states();
    EquivalenceResult r = WeakBisimCheck(RenameLinks(b, rename), RenameLinks(a, {}));
    report.conformant = r.equivalent ? Verdict::kHolds : Verdict::kFails;
    report.formula = r.formula;
  } catch (const StateLimitExceeded& ex) {
    report.conformant = Verdict::kInconclusive;
    report.error = ex.what();
  } catch (const std::invalid_argument& ex) {
    report.conformant = Verdict::kInconclusive;
    report.error = ex.what();
  }
  if (report.conformant == Verdict::kHolds) {
    ReductionReport r = VerifyDeadlockByReduction(original, options);
    if (r.conclusion == Conclusion::kDeadlockFree || r.conclusion == Conclusion::kDeadlockFound) {
      report.inherited = r.conclusion;
    }
  }
  return report;
}

}  // namespace padl
