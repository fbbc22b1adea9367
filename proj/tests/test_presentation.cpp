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
#include "bigonlab/presentation.hpp"

namespace bigonlab {
namespace {

Presentation TwoGenerators() { return ParsePresentation("generators: a b\nrelators:\n"); }

TEST(Presentation, ParsesGeneratorsAndRelators) {
  Presentation p = ParsePresentation("generators: a b\nrelators: abAB");
  EXPECT_EQ(p.generator_count(), 2);
  ASSERT_EQ(p.relators().size(), 1u);
  EXPECT_EQ(p.relators()[0].size(), 4u);
  EXPECT_EQ(p.Format(p.relators()[0]), "abAB");
}

TEST(Presentation, RejectsUnknownSymbol) {
  try {
    ParsePresentation("generators: a\nrelators: ab");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("unknown symbol 'b'"), std::string::npos) << e.what();
  }
}

TEST(Presentation, RejectsFreelyTrivialRelator) {
  try {
    ParsePresentation("generators: a b\nrelators: aA");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("freely trivial"), std::string::npos) << e.what();
  }
}

TEST(Presentation, PresetsParse) {
  for (const char* name : {"f2", "z2", "surface2"}) {
    Presentation p = ParsePresentation(PresetText(name));
    EXPECT_GE(p.generator_count(), 2) << name;
  }
  EXPECT_THROW(PresetText("nope"), Error);
}

TEST(Presentation, TextRoundTrip) {
  Presentation p = ParsePresentation(PresetText("surface2"));
  Presentation q = ParsePresentation(p.ToText());
  EXPECT_EQ(p.generators(), q.generators());
  EXPECT_EQ(p.relators(), q.relators());
}

TEST(FreeReduce, Examples) {
  Presentation p = ParsePresentation("generators: a b c\nrelators:\n");
  EXPECT_EQ(p.Format(FreeReduce(p.ParseWord("abBA"))), "");
  EXPECT_EQ(p.Format(FreeReduce(p.ParseWord("aBba"))), "aa");
  EXPECT_EQ(p.Format(FreeReduce(p.ParseWord("abc"))), "abc");
}

TEST(FreeReduce, RandomWordsAreReducedAndIdempotent) {
  Presentation p = TwoGenerators();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Word w;
    const int len = static_cast<int>(rng() % 20);
    for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(rng() % 4));
    Word r = FreeReduce(w);
    EXPECT_TRUE(IsFreelyReduced(r));
    EXPECT_EQ(FreeReduce(r), r);
    // w * w^-1 always cancels completely
    EXPECT_TRUE(FreeReduce(w + Invert(w)).empty());
    EXPECT_EQ(Invert(Invert(w)), w);
  }
}

TEST(CyclicReduce, StripsConjugatingLetters) {
  Presentation p = TwoGenerators();
  EXPECT_EQ(p.Format(CyclicReduce(p.ParseWord("aabA"))), "ab");
  EXPECT_TRUE(IsCyclicallyReduced(p.ParseWord("abAB")));
  EXPECT_FALSE(IsCyclicallyReduced(p.ParseWord("abA")));
  EXPECT_EQ(p.Format(Rotate(p.ParseWord("abAB"), 1)), "bABa");
}

TEST(Symmetrize, CommutatorHasEightRelators) {
  Presentation p = Symmetrize(ParsePresentation("generators: a b\nrelators: abAB"));
  std::set<std::string> got;
  for (const Word& r : p.relators()) got.insert(p.Format(r));
  std::set<std::string> want = {"abAB", "bABa", "ABab", "BabA", "baBA", "aBAb", "BAba", "AbaB"};
  EXPECT_EQ(got, want);
  EXPECT_EQ(p.relators().size(), 8u);
  EXPECT_TRUE(p.symmetrized());
}

TEST(Symmetrize, RotationInvariantRelator) {
  Presentation p = Symmetrize(ParsePresentation("generators: a\nrelators: aa"));
  std::set<std::string> got;
  for (const Word& r : p.relators()) got.insert(p.Format(r));
  EXPECT_EQ(got, (std::set<std::string>{"aa", "AA"}));
}

TEST(Symmetrize, EmptyRelatorSet) {
  Presentation p = Symmetrize(TwoGenerators());
  EXPECT_TRUE(p.relators().empty());
}

TEST(Word, ShortlexOrder) {
  Presentation p = TwoGenerators();
  EXPECT_LT(p.ParseWord("b"), p.ParseWord("aa"));
  EXPECT_LT(p.ParseWord("ab"), p.ParseWord("aB"));
  EXPECT_LT(p.ParseWord("a"), p.ParseWord("A"));
}

}  // namespace
}  // namespace bigonlab
