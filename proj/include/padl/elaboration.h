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

// Translation of a validated architecture into process-algebra semantics.
//
// Elaborate() or-rewrites every instance and inserts a bounded queue element
// for every attachment of an asynchronous interaction. The result knows the
// augmented topology and produces the interacting semantics of single
// instances and of instance sets under the open, partially closed, and
// totally closed variants.
//
// Fresh names do not depend on the context set: every maximal group of
// attached interactions has one name, the dotted names of its members joined
// by `#`, outputs first.

#ifndef PADL_ELABORATION_H_
#define PADL_ELABORATION_H_

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "padl/ast.h"
#include "padl/lts.h"
#include "padl/lts_gen.h"
#include "padl/operators.h"
#include "padl/or_rewrite.h"
#include "padl/validate.h"

namespace padl {

inline constexpr int kDefaultQueueCapacity = 2;

enum class ElementKind { kInstance, kInputQueue, kOutputQueue };

// A behavior-carrying vertex of the augmented topology.
struct Element {
  std::string name;
  std::string owner;  // the instance itself, or the instance a queue serves
  ElementKind kind = ElementKind::kInstance;
  ProcessTable table;
  // Interactions after or-rewriting and qualifier conversion.
  std::vector<InteractionDecl> interactions;
};

// Queue insertion bookkeeping.
struct QueueElement {
  std::string name;         // IAQ_k or OAQ_k
  std::string owner;        // instance whose asynchronous interaction it serves
  std::string interaction;  // that interaction, after or-rewriting
  Endpoint partner;         // endpoint the interaction was originally attached to
};

// A maximal set of attached interactions that synchronize under one name.
struct Link {
  std::vector<Endpoint> members;  // outputs first, then inputs
  std::string name;
  bool internal = false;  // all members belong to the same owner
};

enum class Closure { kOpen, kPartial, kTotal };

const char* ToString(Closure c);

// Bookkeeping for one instance with respect to a context set.
struct NameSets {
  std::vector<std::string> local;     // interactions of the instance and its queues facing out
  std::vector<std::string> attached;  // the subset attached to the context
  // Interactions joining the instance to its own queues, plus the exceptions
  // of inputs that became semi-synchronous.
  std::vector<std::string> originally_async;
  LabelMap phi;        // attached interaction -> fresh name
  LabelMap phi_async;  // originally asynchronous interaction -> fresh name
  LabelSet sync;       // phi(attached)
  LabelSet visible;    // phi(attached) and phi_async(originally_async)
};

struct SemanticsRequest {
  std::vector<std::string> subject;  // composition order
  std::vector<std::string> context;
  Closure closure = Closure::kPartial;
  std::vector<std::string> buffers_for;  // empty means without buffers
  // Members kept partially closed inside a totally closed composite.
  std::vector<std::string> partially_closed;
  std::size_t state_limit = kDefaultStateLimit;
};

class ElaborationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Elaboration {
 public:
  const ValidatedArchitecture& architecture() const { return *arch_; }
  int queue_capacity() const { return capacity_; }

  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(const std::string& name) const;
  const std::vector<QueueElement>& queues() const { return queues_; }
  // Attachments of the augmented topology, in derivation order.
  const std::vector<Attachment>& attachments() const { return attachments_; }
  const std::vector<Link>& links() const { return links_; }
  // Fresh name of every attached interaction, dotted -> name.
  const LabelMap& fresh_names() const { return fresh_; }
  // Original instance names, in declaration order.
  std::vector<std::string> instance_names() const;

  NameSets Names(const std::string& aei, const std::vector<std::string>& context) const;
  // H: fresh names of links between a queue of `aei` and an element of `others`.
  LabelSet QueueInteractions(const std::string& aei, const std::vector<std::string>& others) const;
  // E: exceptions raisable across the attachments between `aei` and `others`.
  LabelSet Exceptions(const std::string& aei, const std::vector<std::string>& others) const;

  // Interacting semantics of one instance; semi-synchronous transitions are
  // left unresolved so that later compositions can still raise exceptions.
  Lts AeiSemantics(const std::string& aei, const std::vector<std::string>& context,
                   Closure closure, const std::vector<std::string>& buffers_for,
                   std::size_t state_limit = kDefaultStateLimit) const;

  // Left-associated chain of member semantics over the accumulated pairwise
  // synchronization sets.
  Lts CompositeSemantics(const SemanticsRequest& request) const;

 private:
  friend Elaboration Elaborate(const ValidatedArchitecture& arch, int capacity);

  struct Cache {
    std::shared_mutex mutex;
    std::map<std::string, std::shared_ptr<const Lts>> entries;
  };

  const Lts& Base(const std::string& element, std::size_t state_limit) const;
  bool IsSemisync(const Endpoint& e) const;

  const ValidatedArchitecture* arch_ = nullptr;
  int capacity_ = kDefaultQueueCapacity;
  std::vector<Element> elements_;
  std::map<std::string, std::size_t> element_index_;
  std::vector<QueueElement> queues_;
  std::vector<Attachment> attachments_;
  std::vector<Link> links_;
  LabelMap fresh_;
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

// Or-rewrites every instance and inserts the asynchronous queues. `arch` must
// outlive the result. Throws std::invalid_argument if capacity < 1 and
// ElaborationError if an or-rewrite fails.
Elaboration Elaborate(const ValidatedArchitecture& arch, int capacity = kDefaultQueueCapacity);

// Or-interaction bookkeeping of one instance.
OrInteractions OrInteractionsOf(const ValidatedArchitecture& arch, const std::string& aei);

// Equations of the implicit queue element type for `capacity`.
std::vector<Equation> QueueEquations(int capacity);

}  // namespace padl

#endif  // PADL_ELABORATION_H_
