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

#include "padl/elaboration.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "padl/or_rewrite.h"
#include "padl/parser.h"

namespace padl {
namespace {

constexpr const char* kArrive = "arrive";
constexpr const char* kDepart = "depart";

std::string Join(const std::vector<std::string>& v) {
  std::string s;
  for (const std::string& x : v) s += x + ",";
  return s;
}

std::vector<std::string> Sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool Contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Cascade position of an asynchronous interaction: input uni, input and,
// output uni, output and.
int CascadeRank(const InteractionDecl& d) {
  bool is_and = d.multiplicity == Multiplicity::kAnd;
  return (d.direction == Direction::kInput ? 0 : 2) + (is_and ? 1 : 0);
}

InteractionDecl QueueInteraction(const char* name, Direction dir) {
  InteractionDecl d;
  d.name = name;
  d.direction = dir;
  return d;
}

}  // namespace

const char* ToString(Closure c) {
  switch (c) {
    case Closure::kOpen:
      return "open";
    case Closure::kPartial:
      return "pc";
    case Closure::kTotal:
      return "tc";
  }
  return "?";
}

std::vector<Equation> QueueEquations(int capacity) {
  std::string cap = std::to_string(capacity);
  std::string text = "Queue(int(0.." + cap + ") n := 0; void) = choice { cond(n < " + cap +
                     ") -> arrive . Queue(n + 1), cond(n > 0) -> depart . Queue(n - 1) }";
  Diagnostics diags;
  auto eqs = ParseEquations(text, &diags);
  if (!eqs) throw std::logic_error("queue equations failed to parse");
  return *eqs;
}

OrInteractions OrInteractionsOf(const ValidatedArchitecture& arch, const std::string& aei) {
  OrInteractions ors;
  for (const InteractionDecl& d : arch.aet_of(aei).interactions) {
    if (d.multiplicity != Multiplicity::kOr) continue;
    ors.attach_counts[d.name] = AttachNo(arch, Endpoint{aei, d.name, {}});
    if (d.dep_on) ors.dependences[d.name] = *d.dep_on;
  }
  return ors;
}

Elaboration Elaborate(const ValidatedArchitecture& arch, int capacity) {
  if (capacity < 1) throw std::invalid_argument("queue capacity must be at least 1");
  Elaboration e;
  e.arch_ = &arch;
  e.capacity_ = capacity;

  // Or-rewriting: equations, interactions, and attachment endpoints.
  std::map<std::string, OrInteractions> ors;
  for (const Instance& inst : arch.instances()) {
    ors[inst.name] = OrInteractionsOf(arch, inst.name);
  }
  auto copies = [&](const std::string& aei, const std::string& interaction) {
    const auto& counts = ors.at(aei).attach_counts;
    auto it = counts.find(interaction);
    return it == counts.end() ? 0 : it->second;
  };
  std::vector<Attachment> rewritten;
  std::map<Endpoint, int> seen;
  auto rewrite_endpoint = [&](const Endpoint& ep) {
    Endpoint out = ep;
    int k = ++seen[Endpoint{ep.aei, ep.interaction, {}}];
    if (copies(ep.aei, ep.interaction) >= 2) out.interaction = IndexedName(ep.interaction, k);
    return out;
  };
  for (const Attachment& a : arch.attachments()) {
    rewritten.push_back({rewrite_endpoint(a.from), rewrite_endpoint(a.to), a.location});
  }

  // Rewritten interaction declarations per instance, with their original.
  struct Local {
    InteractionDecl decl;
    std::string original;
  };
  std::map<std::string, std::vector<Local>> locals;
  for (const Instance& inst : arch.instances()) {
    for (const InteractionDecl& d : arch.aet_of(inst.name).interactions) {
      int l = copies(inst.name, d.name);
      if (l < 2) {
        locals[inst.name].push_back({d, d.name});
        continue;
      }
      for (int k = 1; k <= l; ++k) {
        InteractionDecl c = d;
        c.name = IndexedName(d.name, k);
        c.multiplicity = Multiplicity::kUni;
        c.dep_on.reset();
        locals[inst.name].push_back({c, d.name});
      }
    }
  }
  // Queue planning in cascade order per owner.
  std::map<std::pair<std::size_t, bool>, std::string> queue_of;  // (attachment, is_input)
  int next_iaq = 0, next_oaq = 0;
  for (const Instance& inst : arch.instances()) {
    std::vector<std::pair<int, std::size_t>> order;  // (rank, local index)
    const auto& mine = locals.at(inst.name);
    for (std::size_t i = 0; i < mine.size(); ++i) {
      if (mine[i].decl.synchronicity == Synchronicity::kAsync) {
        order.emplace_back(CascadeRank(mine[i].decl), i);
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [rank, i] : order) {
      const InteractionDecl& d = mine[i].decl;
      bool input = d.direction == Direction::kInput;
      for (std::size_t a = 0; a < rewritten.size(); ++a) {
        const Endpoint& self = input ? rewritten[a].to : rewritten[a].from;
        const Endpoint& other = input ? rewritten[a].from : rewritten[a].to;
        if (self.aei != inst.name || self.interaction != d.name) continue;
        std::string name = input ? "IAQ_" + std::to_string(++next_iaq)
                                 : "OAQ_" + std::to_string(++next_oaq);
        queue_of[{a, input}] = name;
        e.queues_.push_back({name, inst.name, d.name, other});
      }
    }
  }

  // Augmented attachments.
  for (std::size_t a = 0; a < rewritten.size(); ++a) {
    const Attachment& att = rewritten[a];
    Endpoint src = att.from;
    if (auto q = queue_of.find({a, false}); q != queue_of.end()) {
      e.attachments_.push_back({src, Endpoint{q->second, kArrive, {}}, att.location});
      src = Endpoint{q->second, kDepart, {}};
    }
    if (auto q = queue_of.find({a, true}); q != queue_of.end()) {
      e.attachments_.push_back({src, Endpoint{q->second, kArrive, {}}, att.location});
      e.attachments_.push_back({Endpoint{q->second, kDepart, {}}, att.to, att.location});
    } else {
      e.attachments_.push_back({src, att.to, att.location});
    }
  }

  // Elements.
  for (const Instance& inst : arch.instances()) {
    Element el;
    el.name = inst.name;
    el.owner = inst.name;
    el.kind = ElementKind::kInstance;
    const AetDef& aet = arch.aet_of(inst.name);
    try {
      el.table.equations = OrRewrite(aet.equations, ors.at(inst.name));
    } catch (const OrRewriteError& err) {
      throw ElaborationError(inst.name + ": " + err.what());
    }
    el.table.owner = inst.name;
    const auto& args = arch.aet_args(inst.name);
    for (std::size_t i = 0; i < aet.params.size() && i < args.size(); ++i) {
      el.table.constants[aet.params[i].name] = args[i];
    }
    for (Local& l : locals.at(inst.name)) {
      InteractionDecl d = l.decl;
      if (d.synchronicity == Synchronicity::kAsync) {
        bool queued = std::any_of(e.queues_.begin(), e.queues_.end(), [&](const QueueElement& q) {
          return q.owner == inst.name && q.interaction == d.name;
        });
        if (queued) {
          d.synchronicity =
              d.direction == Direction::kInput ? Synchronicity::kSsync : Synchronicity::kSync;
        }
      }
      if (d.synchronicity == Synchronicity::kSsync) el.table.semisync.insert(l.original);
      el.interactions.push_back(d);
    }
    e.elements_.push_back(std::move(el));
  }
  for (const QueueElement& q : e.queues_) {
    Element el;
    el.name = q.name;
    el.owner = q.owner;
    el.kind = q.name.rfind("IAQ_", 0) == 0 ? ElementKind::kInputQueue : ElementKind::kOutputQueue;
    el.table.owner = q.name;
    el.table.equations = QueueEquations(capacity);
    el.interactions = {QueueInteraction(kArrive, Direction::kInput),
                       QueueInteraction(kDepart, Direction::kOutput)};
    e.elements_.push_back(std::move(el));
  }
  for (std::size_t i = 0; i < e.elements_.size(); ++i) e.element_index_[e.elements_[i].name] = i;

  // Links: attachments sharing an and-interaction form one group.
  auto is_and = [&](const Endpoint& ep) {
    for (const InteractionDecl& d : e.element(ep.aei).interactions) {
      if (d.name == ep.interaction) return d.multiplicity == Multiplicity::kAnd;
    }
    return false;
  };
  std::vector<std::size_t> parent(e.attachments_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::string, std::size_t> first_with_and;
  for (std::size_t a = 0; a < e.attachments_.size(); ++a) {
    for (const Endpoint* ep : {&e.attachments_[a].from, &e.attachments_[a].to}) {
      if (!is_and(*ep)) continue;
      auto [it, fresh] = first_with_and.emplace(ep->Dotted(), a);
      if (!fresh) parent[find(a)] = find(it->second);
    }
  }
  std::map<std::size_t, std::size_t> link_index;
  for (std::size_t a = 0; a < e.attachments_.size(); ++a) {
    std::size_t root = find(a);
    auto [it, fresh] = link_index.emplace(root, e.links_.size());
    if (fresh) e.links_.emplace_back();
    Link& link = e.links_[it->second];
    for (const Endpoint* ep : {&e.attachments_[a].from, &e.attachments_[a].to}) {
      bool dup = std::any_of(link.members.begin(), link.members.end(),
                             [&](const Endpoint& m) { return m.Dotted() == ep->Dotted(); });
      if (!dup) link.members.push_back(Endpoint{ep->aei, ep->interaction, {}});
    }
  }
  for (Link& link : e.links_) {
    std::stable_partition(link.members.begin(), link.members.end(), [&](const Endpoint& m) {
      for (const InteractionDecl& d : e.element(m.aei).interactions) {
        if (d.name == m.interaction) return d.direction == Direction::kOutput;
      }
      return false;
    });
    std::vector<std::string> parts;
    std::set<std::string> owners;
    for (const Endpoint& m : link.members) {
      parts.push_back(m.Dotted());
      owners.insert(e.element(m.aei).owner);
    }
    link.name = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) link.name += "#" + parts[i];
    link.internal = owners.size() == 1;
  }
  for (std::size_t i = 0; i < e.links_.size(); ++i) {
    for (const Endpoint& m : e.links_[i].members) {
      e.fresh_[m.Dotted()] = e.links_[i].name;
    }
  }
  return e;
}

const Element& Elaboration::element(const std::string& name) const {
  auto it = element_index_.find(name);
  if (it == element_index_.end()) throw std::out_of_range("unknown element '" + name + "'");
  return elements_[it->second];
}

std::vector<std::string> Elaboration::instance_names() const {
  std::vector<std::string> names;
  for (const Instance& inst : arch_->instances()) names.push_back(inst.name);
  return names;
}

bool Elaboration::IsSemisync(const Endpoint& ep) const {
  for (const InteractionDecl& d : element(ep.aei).interactions) {
    if (d.name == ep.interaction) return d.synchronicity == Synchronicity::kSsync;
  }
  return false;
}

NameSets Elaboration::Names(const std::string& aei,
                            const std::vector<std::string>& context) const {
  if (!arch_->description().FindInstance(aei)) {
    throw std::out_of_range("unknown instance '" + aei + "'");
  }
  NameSets n;
  for (const Link& link : links_) {
    std::vector<std::string> mine;
    bool faces_context = false;
    for (const Endpoint& m : link.members) {
      const std::string& owner = element(m.aei).owner;
      if (owner == aei) {
        mine.push_back(m.Dotted());
      } else if (Contains(context, owner)) {
        faces_context = true;
      }
    }
    if (mine.empty()) continue;
    for (const std::string& m : mine) {
      if (link.internal) {
        n.originally_async.push_back(m);
        n.phi_async[m] = link.name;
        n.visible.insert(link.name);
      } else {
        n.local.push_back(m);
        if (!faces_context) continue;
        n.attached.push_back(m);
        n.phi[m] = link.name;
        n.sync.insert(link.name);
        n.visible.insert(link.name);
      }
    }
  }
  for (const QueueElement& q : queues_) {
    if (q.owner != aei || element(q.name).kind != ElementKind::kInputQueue) continue;
    std::string exc = aei + "." + q.interaction + std::string(kExceptionSuffix);
    if (!Contains(n.originally_async, exc)) {
      n.originally_async.push_back(exc);
      n.visible.insert(exc);
    }
  }
  return n;
}

LabelSet Elaboration::QueueInteractions(const std::string& aei,
                                        const std::vector<std::string>& others) const {
  LabelSet h;
  for (const Link& link : links_) {
    bool own_queue = false, faces = false;
    for (const Endpoint& m : link.members) {
      const Element& el = element(m.aei);
      if (el.owner == aei && el.kind != ElementKind::kInstance) own_queue = true;
      if (el.owner != aei && Contains(others, el.owner)) faces = true;
    }
    if (own_queue && faces) h.insert(link.name);
  }
  return h;
}

LabelSet Elaboration::Exceptions(const std::string& aei,
                                 const std::vector<std::string>& others) const {
  LabelSet ex;
  auto side = [&](const std::string& owner) {
    if (owner == aei) return 0;
    return Contains(others, owner) ? 1 : -1;
  };
  for (const Link& link : links_) {
    bool mine = false, theirs = false;
    for (const Endpoint& m : link.members) {
      int s = side(element(m.aei).owner);
      mine |= s == 0;
      theirs |= s == 1;
    }
    if (!mine || !theirs) continue;
    for (const Endpoint& m : link.members) {
      if (side(element(m.aei).owner) >= 0 && IsSemisync(m)) {
        ex.insert(m.Dotted() + std::string(kExceptionSuffix));
      }
    }
  }
  for (const QueueElement& q : queues_) {
    if (element(q.name).kind != ElementKind::kInputQueue) continue;
    int s = side(q.owner);
    int p = side(q.partner.aei);
    if ((s == 0 && p == 1) || (s == 1 && p == 0)) {
      ex.insert(q.owner + "." + q.interaction + std::string(kExceptionSuffix));
    }
  }
  return ex;
}

const Lts& Elaboration::Base(const std::string& name, std::size_t state_limit) const {
  const std::string key = "base|" + name;
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return *it->second;
  }
  const Element& el = element(name);
  Lts lts = GenerateLts(el.table, InitialInvocation(el.table), state_limit);
  if (el.kind != ElementKind::kInstance) {
    const std::string arrive = name + "." + kArrive;
    for (StateId s = 0; s < lts.num_states(); ++s) {
      bool can_arrive = std::any_of(lts.transitions[s].begin(), lts.transitions[s].end(),
                                    [&](const Transition& t) { return lts.label_name(t.label) == arrive; });
      if (!can_arrive) lts.flags[s] |= kFlagQueueFull;
    }
  }
  auto entry = std::make_shared<const Lts>(Relabel(lts, fresh_));
  std::unique_lock lock(cache_->mutex);
  return *cache_->entries.emplace(key, std::move(entry)).first->second;
}

Lts Elaboration::AeiSemantics(const std::string& aei, const std::vector<std::string>& context,
                              Closure closure, const std::vector<std::string>& buffers_for,
                              std::size_t state_limit) const {
  NameSets names = Names(aei, context);
  const std::string key = "aei|" + aei + "|" + Join(Sorted(context)) + "|" + ToString(closure) +
                          "|" + Join(Sorted(buffers_for));
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) {
      if (it->second->num_states() > state_limit) {
        throw StateLimitExceeded(state_limit, it->second->num_states(),
                                 it->second->num_transitions());
      }
      return *it->second;
    }
  }
  Lts cur = Base(aei, state_limit);
  for (const QueueElement& q : queues_) {
    if (q.owner != aei || !Contains(buffers_for, q.partner.aei)) continue;
    const Lts& queue = Base(q.name, state_limit);
    bool input = element(q.name).kind == ElementKind::kInputQueue;
    const std::string internal = q.name + "." + (input ? kDepart : kArrive);
    LabelSet sync = {fresh_.at(internal)};
    cur = input ? Parallel(queue, cur, sync, state_limit) : Parallel(cur, queue, sync, state_limit);
  }
  if (closure == Closure::kPartial) cur = KeepOnly(cur, names.visible);
  if (closure == Closure::kTotal) cur = KeepOnly(cur, names.sync);
  auto entry = std::make_shared<const Lts>(std::move(cur));
  std::unique_lock lock(cache_->mutex);
  return *cache_->entries.emplace(key, std::move(entry)).first->second;
}

Lts Elaboration::CompositeSemantics(const SemanticsRequest& req) const {
  if (req.subject.empty()) throw std::invalid_argument("empty subject set");
  for (const std::string& p : req.partially_closed) {
    if (!Contains(req.subject, p)) {
      throw std::invalid_argument("'" + p + "' is not a member of the subject set");
    }
  }
  std::vector<LabelSet> syncs;
  Lts result;
  for (std::size_t k = 0; k < req.subject.size(); ++k) {
    const std::string& member = req.subject[k];
    Closure c = req.closure;
    if (c == Closure::kTotal && Contains(req.partially_closed, member)) c = Closure::kPartial;
    Lts lts = AeiSemantics(member, req.context, c, req.buffers_for, req.state_limit);
    LabelSet mine = Names(member, req.context).sync;
    if (k == 0) {
      result = std::move(lts);
    } else {
      LabelSet sync;
      for (const LabelSet& earlier : syncs) {
        for (const std::string& a : earlier) {
          if (mine.count(a)) sync.insert(a);
        }
      }
      result = Parallel(result, lts, sync, req.state_limit);
    }
    syncs.push_back(std::move(mine));
  }
  return result;
}

}  // namespace padl
