// Copyright 2026 The bigonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "bigonlab/error.hpp"
#include "bigonlab/wordproblem.hpp"
#include "oracles.hpp"

namespace bigonlab {
namespace {

Presentation Preset(const char* name) { return ParsePresentation(PresetText(name)); }

TEST(SmallCancellation, Ratios) {
  EXPECT_EQ(SmallCancellationRatio(Preset("z2")), Rational(1, 4));
  EXPECT_EQ(SmallCancellationRatio(Preset("surface2")), Rational(1, 8));
  EXPECT_EQ(SmallCancellationRatio(Preset("f2")), Rational(0));
}

TEST(NormalForm, RewritingOrientsCommutator) {
  Presentation p = Preset("z2");
  Strategy s = CompleteRewriting(p, 100);
  EXPECT_TRUE(s.certified());
  EXPECT_EQ(p.Format(s.NormalForm(p.ParseWord("ba"))), "ab");
  bool has_rule = false;
  for (const auto& rule : s.rules())
    has_rule |= p.Format(rule.lhs) == "ba" && p.Format(rule.rhs) == "ab";
  EXPECT_TRUE(has_rule);
}

TEST(NormalForm, FreeReductionCancels) {
  Presentation p = Preset("z2");
  EXPECT_TRUE(Strategy::FreeReduction(p).NormalForm(p.ParseWord("aA")).empty());
}

TEST(NormalForm, DehnReducesSurfaceRelator) {
  Presentation p = Preset("surface2");
  Strategy s = Strategy::DehnGreedy(p);
  EXPECT_TRUE(s.NormalForm(p.ParseWord("abABcdCD")).empty());
  EXPECT_EQ(s.kind(), StrategyKind::kDehnGreedy);
}

TEST(WordsEqual, Examples) {
  Presentation z2 = Preset("z2");
  Strategy s = ChooseStrategy(z2);
  EXPECT_TRUE(WordsEqual(s, z2.ParseWord("ab"), z2.ParseWord("ba")));
  EXPECT_FALSE(WordsEqual(s, z2.ParseWord("a"), z2.ParseWord("b")));
  Presentation f2 = Preset("f2");
  EXPECT_FALSE(WordsEqual(ChooseStrategy(f2), f2.ParseWord("abAB"), Word{}));
}

TEST(CompleteRewriting, FreeGroupHasOnlyCancellationRules) {
  Presentation p = Preset("f2");
  Strategy s = CompleteRewriting(p, 5);
  EXPECT_TRUE(s.certified());
  for (const auto& rule : s.rules()) {
    EXPECT_EQ(rule.lhs.size(), 2u);
    EXPECT_TRUE(rule.rhs.empty());
    EXPECT_EQ(rule.lhs[0], Inverse(rule.lhs[1]));
  }
}

TEST(CompleteRewriting, ZeroCapIsUncertified) {
  EXPECT_FALSE(CompleteRewriting(Preset("z2"), 0).certified());
}

TEST(CompleteRewriting, SurfaceGroupCompletes) {
  Strategy s = CompleteRewriting(Preset("surface2"), 2000);
  EXPECT_TRUE(s.certified());
  EXPECT_TRUE(s.canonical());
}

TEST(ChooseStrategy, PicksFreeReductionForFreeGroups) {
  EXPECT_EQ(ChooseStrategy(Preset("f2")).kind(), StrategyKind::kFreeReduction);
  EXPECT_EQ(ChooseStrategy(Preset("z2")).kind(), StrategyKind::kRewritingSystem);
}

// In Z² the normal form decides equality exactly when lattice endpoints agree.
TEST(WordsEqual, MatchesLatticeOracle) {
  Presentation p = Preset("z2");
  Strategy s = ChooseStrategy(p);
  std::mt19937 rng(11);
  const std::string alphabet = "aAbB";
  for (int trial = 0; trial < 400; ++trial) {
    std::string u, v;
    for (int i = 0, n = static_cast<int>(rng() % 9); i < n; ++i) u += alphabet[rng() % 4];
    for (int i = 0, n = static_cast<int>(rng() % 9); i < n; ++i) v += alphabet[rng() % 4];
    if (trial % 3 == 0) v = u, std::shuffle(v.begin(), v.end(), rng);
    const bool same = oracle::LatticeEnd(u) == oracle::LatticeEnd(v);
    EXPECT_EQ(WordsEqual(s, p.ParseWord(u), p.ParseWord(v)), same) << u << " vs " << v;
    // normal forms are geodesic: length equals the L1 norm
    EXPECT_EQ(static_cast<int>(s.NormalForm(p.ParseWord(u)).size()),
              oracle::L1(oracle::LatticeEnd(u), {0, 0}));
  }
}

TEST(NormalForm, AppendAgreesWithFullNormalForm) {
  Presentation p = Preset("surface2");
  Strategy s = ChooseStrategy(p);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    for (int i = 0, n = static_cast<int>(rng() % 12); i < n; ++i) w.push_back(static_cast<Letter>(rng() % 8));
    Word nf = s.NormalForm(w);
    Letter x = static_cast<Letter>(rng() % 8);
    Word extended = w;
    extended.push_back(x);
    EXPECT_EQ(s.NormalFormAppend(nf, x), s.NormalForm(extended));
  }
}

}  // namespace
}  // namespace bigonlab
