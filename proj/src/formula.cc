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

#include "padl/formula.h"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace padl {

FormulaPtr Formula::True() {
  static const FormulaPtr tt = std::make_shared<Formula>();
  return tt;
}

FormulaPtr Formula::Not(FormulaPtr f) {
  auto n = std::make_shared<Formula>();
  n->kind = Kind::kNot;
  n->operands.push_back(std::move(f));
  return n;
}

FormulaPtr Formula::And(std::vector<FormulaPtr> fs) {
  fs.erase(std::remove_if(fs.begin(), fs.end(),
                          [](const FormulaPtr& f) { return f->kind == Kind::kTrue; }),
           fs.end());
  if (fs.empty()) return True();
  if (fs.size() == 1) return fs.front();
  auto n = std::make_shared<Formula>();
  n->kind = Kind::kAnd;
  n->operands = std::move(fs);
  return n;
}

FormulaPtr Formula::Diamond(std::string label, FormulaPtr f) {
  auto n = std::make_shared<Formula>();
  n->kind = Kind::kDiamond;
  n->label = std::move(label);
  n->operands.push_back(std::move(f));
  return n;
}

std::string ToString(const Formula& f, Modality m) {
  switch (f.kind) {
    case Formula::Kind::kTrue:
      return "tt";
    case Formula::Kind::kNot:
      return "not " + ToString(*f.operands[0], m);
    case Formula::Kind::kAnd: {
      std::string out = "(";
      for (std::size_t i = 0; i < f.operands.size(); ++i) {
        if (i > 0) out += " and ";
        out += ToString(*f.operands[i], m);
      }
      return out + ")";
    }
    case Formula::Kind::kDiamond:
      if (m == Modality::kWeak) return "<<" + f.label + ">>" + ToString(*f.operands[0], m);
      return "<" + f.label + ">" + ToString(*f.operands[0], m);
  }
  return {};
}

std::size_t Depth(const Formula& f) {
  std::size_t d = 0;
  for (const FormulaPtr& g : f.operands) d = std::max(d, Depth(*g));
  return d + (f.kind == Formula::Kind::kDiamond ? 1 : 0);
}

namespace {

class Checker {
 public:
  Checker(const Lts& lts, Modality m) : lts_(lts), modality_(m) {
    const std::size_t n = lts.num_states();
    pred_.resize(n);
    for (StateId s = 0; s < n; ++s) {
      for (const Transition& t : lts.transitions[s]) {
        pred_[t.target].emplace_back(lts.label_name(t.label), s);
      }
    }
  }

  const std::vector<bool>& Sat(const Formula& f) {
    auto it = memo_.find(&f);
    if (it != memo_.end()) return it->second;
    const std::size_t n = lts_.num_states();
    std::vector<bool> out(n, false);
    switch (f.kind) {
      case Formula::Kind::kTrue:
        out.assign(n, true);
        break;
      case Formula::Kind::kNot: {
        const std::vector<bool>& in = Sat(*f.operands[0]);
        for (std::size_t s = 0; s < n; ++s) out[s] = !in[s];
        break;
      }
      case Formula::Kind::kAnd:
        out.assign(n, true);
        for (const FormulaPtr& g : f.operands) {
          const std::vector<bool>& in = Sat(*g);
          for (std::size_t s = 0; s < n; ++s) out[s] = out[s] && in[s];
        }
        break;
      case Formula::Kind::kDiamond: {
        std::vector<bool> target = Sat(*f.operands[0]);
        if (modality_ == Modality::kStrong) {
          out = Pre(target, f.label);
        } else if (f.label == kTauName) {
          out = TauBack(target);
        } else {
          out = TauBack(Pre(TauBack(target), f.label));
        }
        break;
      }
    }
    return memo_.emplace(&f, std::move(out)).first->second;
  }

 private:
  std::vector<bool> Pre(const std::vector<bool>& x, const std::string& label) const {
    std::vector<bool> out(x.size(), false);
    for (StateId t = 0; t < x.size(); ++t) {
      if (!x[t]) continue;
      for (const auto& [name, s] : pred_[t]) {
        if (name == label) out[s] = true;
      }
    }
    return out;
  }

  // States reaching `x` by zero or more tau steps.
  std::vector<bool> TauBack(std::vector<bool> x) const {
    std::deque<StateId> queue;
    for (StateId s = 0; s < x.size(); ++s) {
      if (x[s]) queue.push_back(s);
    }
    while (!queue.empty()) {
      StateId t = queue.front();
      queue.pop_front();
      for (const auto& [name, s] : pred_[t]) {
        if (name == kTauName && !x[s]) {
          x[s] = true;
          queue.push_back(s);
        }
      }
    }
    return x;
  }

  const Lts& lts_;
  Modality modality_;
  std::vector<std::vector<std::pair<std::string, StateId>>> pred_;
  std::map<const Formula*, std::vector<bool>> memo_;
};

}  // namespace

bool Satisfies(const Lts& lts, StateId state, const Formula& f, Modality m) {
  if (state >= lts.num_states()) throw std::out_of_range("state out of range");
  Checker checker(lts, m);
  return checker.Sat(f)[state];
}

}  // namespace padl
