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

#include "padl/equivalence.h"

#include <deque>
#include <random>
#include <set>

#include "bisim_oracle.h"
#include "gtest/gtest.h"
#include "padl/operators.h"
#include "random_lts.h"

namespace padl {
namespace {

using ::padl::testing::Oracle;
using ::padl::testing::RandomLabelName;
using ::padl::testing::RandomLts;
using ::padl::testing::RandomLtsOptions;
using ::padl::testing::TauVariant;

// Builds an LTS from "s label t" triples; state 0 is initial.
Lts Make(int states, const std::vector<std::tuple<int, std::string, int>>& edges) {
  Lts l;
  for (int i = 0; i < states; ++i) l.AddState();
  for (const auto& [s, a, t] : edges) l.Add(s, a, t);
  return l;
}

TEST(Weak, TauLawHoldsOnlyWeakly) {
  Lts a = Make(4, {{0, "a", 1}, {1, "tau", 2}, {2, "b", 3}});
  Lts b = Make(3, {{0, "a", 1}, {1, "b", 2}});
  EXPECT_TRUE(WeakBisimCheck(a, b).equivalent);
  EquivalenceResult strong = StrongBisimCheck(a, b);
  ASSERT_FALSE(strong.equivalent);
  EXPECT_TRUE(Satisfies(a, a.initial, *strong.formula, Modality::kStrong));
  EXPECT_FALSE(Satisfies(b, b.initial, *strong.formula, Modality::kStrong));
}

TEST(Weak, BranchingTimeDifferenceIsDetected) {
  Lts a = Make(4, {{0, "a", 1}, {1, "b", 2}, {1, "c", 3}});
  Lts b = Make(5, {{0, "a", 1}, {1, "b", 2}, {0, "a", 3}, {3, "c", 4}});
  EquivalenceResult r = WeakBisimCheck(a, b);
  ASSERT_FALSE(r.equivalent);
  ASSERT_NE(r.formula, nullptr);
  EXPECT_EQ(ToString(*r.formula, Modality::kWeak), "<<a>>(<<c>>tt and <<b>>tt)");
  EXPECT_TRUE(Satisfies(a, 0, *r.formula, Modality::kWeak));
  EXPECT_FALSE(Satisfies(b, 0, *r.formula, Modality::kWeak));
  EXPECT_EQ(Depth(*r.formula), 2u);
}

TEST(Weak, PreemptiveTauIsNotIgnored) {
  Lts a = Make(4, {{0, "tau", 1}, {1, "a", 2}, {0, "b", 3}});
  Lts b = Make(3, {{0, "a", 1}, {0, "b", 2}});
  EquivalenceResult r = WeakBisimCheck(a, b);
  ASSERT_FALSE(r.equivalent);
  EXPECT_TRUE(Satisfies(a, 0, *r.formula, Modality::kWeak));
  EXPECT_FALSE(Satisfies(b, 0, *r.formula, Modality::kWeak));
}

TEST(Weak, NegatedWitnessWhenSecondHasMore) {
  Lts a = Make(2, {{0, "a", 1}});
  Lts b = Make(3, {{0, "a", 1}, {0, "b", 2}});
  EquivalenceResult r = WeakBisimCheck(a, b);
  ASSERT_FALSE(r.equivalent);
  EXPECT_EQ(ToString(*r.formula, Modality::kWeak), "not <<b>>tt");
  EXPECT_TRUE(Satisfies(a, 0, *r.formula, Modality::kWeak));
}

TEST(Weak, TauCyclesCollapse) {
  Lts a = Make(3, {{0, "tau", 1}, {1, "tau", 0}, {1, "a", 2}});
  Lts b = Make(2, {{0, "a", 1}});
  EXPECT_TRUE(WeakBisimCheck(a, b).equivalent);
}

TEST(Weak, SemisyncResolvedToSuccess) {
  Lts a;
  a.AddState();
  a.AddState();
  a.AddState();
  a.AddSemisync(0, "a", 1, "a_exception", 2);
  a.Add(2, "boom", 2);
  EXPECT_TRUE(WeakBisimCheck(a, Make(2, {{0, "a", 1}})).equivalent);
}

TEST(Weak, UpToRelabeling) {
  Lts a = Make(3, {{0, "x", 1}, {1, "y", 2}});
  Lts b = Make(3, {{0, "a", 1}, {1, "b", 2}});
  EXPECT_FALSE(WeakBisimCheck(a, b).equivalent);
  EXPECT_TRUE(WeakBisimUpToRelabeling(a, b, {{"x", "a"}, {"y", "b"}}).equivalent);
  EXPECT_FALSE(WeakBisimUpToRelabeling(a, b, {{"x", "b"}, {"y", "a"}}).equivalent);
}

TEST(Saturate, AddsClosureEdges) {
  Lts s = Saturate(Make(3, {{0, "tau", 1}, {1, "a", 2}}));
  auto has = [&](StateId from, const std::string& a, StateId to) {
    for (const Transition& t : s.transitions[from]) {
      if (s.label_name(t.label) == a && t.target == to) return true;
    }
    return false;
  };
  EXPECT_TRUE(has(0, "tau", 0));
  EXPECT_TRUE(has(0, "tau", 1));
  EXPECT_TRUE(has(0, "a", 2));
  EXPECT_TRUE(has(2, "tau", 2));
  EXPECT_FALSE(has(1, "tau", 0));
}

TEST(Minimize, ChainOfTauCollapses) {
  Lts m = Minimize(Make(4, {{0, "tau", 1}, {1, "tau", 2}, {2, "a", 3}}));
  EXPECT_EQ(m.num_states(), 2u);
  EXPECT_EQ(m.num_transitions(), 1u);
}

TEST(Minimize, KeepsFlagsOfMembers) {
  Lts l = Make(3, {{0, "a", 1}, {1, "tau", 2}});
  l.flags[2] = kFlagQueueFull;
  Lts m = Minimize(l);
  EXPECT_TRUE(m.HasFlag(kFlagQueueFull));
}

// Randomized agreement with the oracle, formula soundness and the
// saturation path, over 1200 pairs. A third of the pairs are tau variants or
// minimizations so that both verdicts occur.
TEST(Property, AgreesWithOracle) {
  std::mt19937 rng(20260417);
  RandomLtsOptions opt;
  opt.max_states = 6;
  opt.num_labels = 2;
  int equivalent = 0, distinct = 0;
  for (int i = 0; i < 1200; ++i) {
    Lts a = RandomLts(rng, opt);
    Lts b;
    switch (i % 3) {
      case 0:
        b = RandomLts(rng, opt);
        break;
      case 1:
        b = TauVariant(a, rng);
        break;
      default:
        b = (i % 2 == 0) ? Minimize(a) : RandomLts(rng, opt);
    }
    for (Modality m : {Modality::kWeak, Modality::kStrong}) {
      EquivalenceResult r = m == Modality::kWeak ? WeakBisimCheck(a, b) : StrongBisimCheck(a, b);
      Oracle oracle(a, b, m);
      ASSERT_EQ(r.equivalent, oracle.Related()) << "case " << i;
      if (r.equivalent) {
        ++equivalent;
        Oracle resolved(ResolveSemisync(a), ResolveSemisync(b), m);
        EXPECT_TRUE(resolved.IsBisimulation(r.first_blocks, r.second_blocks)) << "case " << i;
      } else {
        ++distinct;
        ASSERT_NE(r.formula, nullptr);
        EXPECT_TRUE(Satisfies(a, a.initial, *r.formula, m)) << "case " << i;
        EXPECT_FALSE(Satisfies(b, b.initial, *r.formula, m)) << "case " << i;
      }
    }
    EXPECT_EQ(WeakBisimCheck(a, b).equivalent,
              StrongBisimCheck(Saturate(a), Saturate(b)).equivalent)
        << "case " << i;
  }
  EXPECT_GT(equivalent, 300);
  EXPECT_GT(distinct, 300);
}

TEST(Property, EquivalenceLaws) {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    Lts a = RandomLts(rng);
    Lts b = RandomLts(rng);
    Lts a1 = TauVariant(a, rng);
    Lts a2 = TauVariant(a1, rng);
    EXPECT_TRUE(WeakBisimCheck(a, a).equivalent);
    EXPECT_TRUE(StrongBisimCheck(a, a).equivalent);
    EXPECT_EQ(WeakBisimCheck(a, b).equivalent, WeakBisimCheck(b, a).equivalent);
    EXPECT_TRUE(WeakBisimCheck(a, a1).equivalent);
    EXPECT_TRUE(WeakBisimCheck(a1, a2).equivalent);
    EXPECT_TRUE(WeakBisimCheck(a, a2).equivalent);
    if (StrongBisimCheck(a, b).equivalent) EXPECT_TRUE(WeakBisimCheck(a, b).equivalent);
  }
}

TEST(Property, MinimizeIsEquivalentAndIdempotent) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Lts a = RandomLts(rng);
    Lts m = Minimize(a);
    EXPECT_TRUE(WeakBisimCheck(a, m).equivalent);
    EXPECT_LE(m.num_states(), ResolveSemisync(a).num_states());
    EXPECT_EQ(Minimize(m).num_states(), m.num_states());
  }
}

TEST(Property, CongruenceForOperators) {
  std::mt19937 rng(13);
  RandomLtsOptions opt;
  opt.max_states = 5;
  for (int i = 0; i < 200; ++i) {
    Lts a = RandomLts(rng, opt);
    Lts a1 = TauVariant(a, rng);
    Lts c = RandomLts(rng, opt);
    LabelSet sync = {RandomLabelName(i % 3)};
    EXPECT_TRUE(WeakBisimCheck(Parallel(a, c, sync), Parallel(a1, c, sync)).equivalent);
    EXPECT_TRUE(WeakBisimCheck(Hide(a, sync), Hide(a1, sync)).equivalent);
    EXPECT_TRUE(WeakBisimCheck(Relabel(a, {{"a", "z"}}), Relabel(a1, {{"a", "z"}})).equivalent);
  }
}

TEST(Property, ParallelIsCommutativeUpToStrongBisimilarity) {
  std::mt19937 rng(17);
  RandomLtsOptions opt;
  opt.max_states = 5;
  opt.semisync_probability = 0.2;
  for (int i = 0; i < 200; ++i) {
    Lts a = RandomLts(rng, opt);
    Lts b = RandomLts(rng, opt);
    LabelSet sync;
    for (int k = 0; k < 3; ++k) {
      if ((i >> k) & 1) sync.insert(RandomLabelName(k));
    }
    EXPECT_TRUE(StrongBisimCheck(Parallel(a, b, sync), Parallel(b, a, sync)).equivalent)
        << "case " << i;
  }
}

TEST(Formula, PrintsBothModalities) {
  FormulaPtr f = Formula::Diamond("a", Formula::And({Formula::Not(Formula::Diamond("b",
      Formula::True())), Formula::Diamond("tau", Formula::True())}));
  EXPECT_EQ(ToString(*f, Modality::kWeak), "<<a>>(not <<b>>tt and <<tau>>tt)");
  EXPECT_EQ(ToString(*f, Modality::kStrong), "<a>(not <b>tt and <tau>tt)");
  EXPECT_EQ(Formula::And({}), Formula::True());
}

TEST(Formula, WeakTauDiamondIncludesEmptyPath) {
  Lts l = Make(1, {});
  EXPECT_TRUE(Satisfies(l, 0, *Formula::Diamond("tau", Formula::True()), Modality::kWeak));
  EXPECT_FALSE(Satisfies(l, 0, *Formula::Diamond("tau", Formula::True()), Modality::kStrong));
}

}  // namespace
}  // namespace padl
