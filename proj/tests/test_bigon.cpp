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

#include "bigonlab/bigon.hpp"
#include "bigonlab/error.hpp"
#include "oracles.hpp"

namespace bigonlab {
namespace {

class LatticeTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    Presentation p = ParsePresentation(PresetText("z2"));
    BallOptions options;
    options.core_radius = 4;
    ball_ = new GraphBall(BuildBall(p, ChooseStrategy(p), 12, options));
  }
  static void TearDownTestSuite() { delete ball_; }

  static Band MakeBand(const std::string& w0, const std::string& w1, const std::string& start = "") {
    const Presentation& p = ball_->presentation();
    VertexId s = *ball_->Find(p.ParseWord(start));
    return Band{PathFromWord(*ball_, s, p.ParseWord(w0)), PathFromWord(*ball_, s, p.ParseWord(w1))};
  }

  static GraphBall* ball_;
};

GraphBall* LatticeTest::ball_ = nullptr;

WidthProfile Profile(std::vector<int> values) { return WidthProfile{std::move(values)}; }

TEST_F(LatticeTest, GeoDistance) {
  Band square = MakeBand("ab", "ba");
  EXPECT_EQ(GeoDistance(*ball_, square.side0, square.side1), 1);
  Band wide = MakeBand("aabb", "bbaa");
  EXPECT_EQ(GeoDistance(*ball_, wide.side0, wide.side1), 1);
  Band split = MakeBand("a", "b");
  EXPECT_EQ(GeoDistance(*ball_, split.side0, split.side1), 2);
  EXPECT_THROW(GeoDistance(*ball_, square.side0, square.side0), Error);
}

TEST_F(LatticeTest, WidthProfiles) {
  EXPECT_EQ(ComputeWidthProfile(*ball_, MakeBand("ab", "ba")).values, (std::vector<int>{0, 2, 0}));
  EXPECT_EQ(ComputeWidthProfile(*ball_, MakeBand("aabb", "bbaa")).values, (std::vector<int>{0, 2, 4, 2, 0}));
  EXPECT_EQ(ComputeWidthProfile(*ball_, MakeBand("abab", "abab")).values, (std::vector<int>(5, 0)));
}

TEST_F(LatticeTest, WidthProfilesMatchLatticeOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int dx = static_cast<int>(rng() % 2) + 1, dy = static_cast<int>(rng() % 2);
    std::vector<std::string> paths;
    oracle::LatticeGeodesics({0, 0}, {dx, -dy}, "", paths);
    const std::string& w0 = paths[rng() % paths.size()];
    const std::string& w1 = paths[rng() % paths.size()];
    WidthProfile profile = ComputeWidthProfile(*ball_, MakeBand(w0, w1, "aB"));
    EXPECT_EQ(profile.values, oracle::LatticeWidths({1, -1}, w0, w1));
    for (std::size_t i = 0; i + 1 < profile.values.size(); ++i)
      EXPECT_LE(std::abs(profile[i + 1] - profile[i]), 2);
  }
}

TEST_F(LatticeTest, Predicates) {
  EXPECT_TRUE(IsBigon(*ball_, MakeBand("ab", "ba")));
  EXPECT_FALSE(IsBigon(*ball_, MakeBand("ab", "ab")));
  EXPECT_FALSE(IsBigon(*ball_, MakeBand("a", "b")));
  EXPECT_TRUE(IsFork(*ball_, MakeBand("a", "b")));
}

TEST_F(LatticeTest, EnumerationCountMatchesLatticeOracle) {
  for (int cap = 0; cap <= 8; ++cap) {
    BigonOptions options;
    options.length_cap = cap;
    auto bigons = EnumerateBigons(*ball_, options);
    ASSERT_EQ(static_cast<long>(bigons.size()), oracle::LatticeBigonCount(4, cap)) << "cap " << cap;
    for (const Band& b : bigons) {
      EXPECT_TRUE(IsBigon(*ball_, b));
      EXPECT_LT(b.side0, b.side1);
      EXPECT_LE(static_cast<int>(b.length()), cap);
    }
  }
}

TEST_F(LatticeTest, EnumerationContainsUnitSquare) {
  BigonOptions options;
  options.length_cap = 2;
  auto bigons = EnumerateBigons(*ball_, options);
  Band square = MakeBand("ab", "ba");
  EXPECT_NE(std::find(bigons.begin(), bigons.end(), square), bigons.end());
}

TEST_F(LatticeTest, EnumerationTruncatesAtCountCap) {
  BigonOptions options;
  options.length_cap = 4;
  options.count_cap = 10;
  bool truncated = false;
  auto bigons = EnumerateBigons(*ball_, options, &truncated);
  EXPECT_EQ(bigons.size(), 10u);
  EXPECT_TRUE(truncated);
  options.count_cap = 50'000'000;
  auto all = EnumerateBigons(*ball_, options);
  EXPECT_TRUE(std::equal(bigons.begin(), bigons.end(), all.begin()));
}

TEST_F(LatticeTest, LengthCapMustFitTheCore) {
  BigonOptions options;
  options.length_cap = 9;
  EXPECT_THROW(EnumerateBigons(*ball_, options), Error);
}

TEST_F(LatticeTest, SupExceedanceMatchesOracle) {
  for (int cap : {2, 3, 4, 5}) {
    BigonOptions options;
    options.length_cap = cap;
    std::vector<int> xs = {0, 1, 2, 3};
    auto result = SupExceedance(*ball_, options, xs, 3);
    for (const auto& e : result.entries) {
      EXPECT_EQ(e.sup, oracle::LatticeSupExceedance(4, cap, e.x)) << "cap " << cap << " x " << e.x;
    }
  }
}

TEST_F(LatticeTest, SupExceedanceLengthFourWitness) {
  BigonOptions options;
  options.length_cap = 4;
  auto result = SupExceedance(*ball_, options, {1});
  ASSERT_EQ(result.entries.size(), 1u);
  EXPECT_EQ(result.entries[0].sup, Rational(3, 4));
  ASSERT_TRUE(result.entries[0].witness.has_value());
  auto bigons = EnumerateBigons(*ball_, options);
  WidthProfile w = ComputeWidthProfile(*ball_, bigons[*result.entries[0].witness]);
  EXPECT_EQ(ComputeExceedance(w, 1).ratio, Rational(3, 4));
}

TEST_F(LatticeTest, SupExceedanceIsIndependentOfJobs) {
  BigonOptions options;
  options.length_cap = 6;
  auto one = SupExceedance(*ball_, options, {0, 1, 2, 3}, 1);
  auto four = SupExceedance(*ball_, options, {0, 1, 2, 3}, 4);
  ASSERT_EQ(one.entries.size(), four.entries.size());
  for (std::size_t i = 0; i < one.entries.size(); ++i) {
    EXPECT_EQ(one.entries[i].sup, four.entries[i].sup);
    EXPECT_EQ(one.entries[i].witness, four.entries[i].witness);
  }
  EXPECT_EQ(one.summary.count, four.summary.count);
}

TEST(SupAccumulator, EmptyAndSingle) {
  SupAccumulator empty({0, 3});
  for (int x : {0, 3}) {
    EXPECT_EQ(empty.At(x).sup, Rational(0));
    EXPECT_FALSE(empty.At(x).witness.has_value());
  }
  SupAccumulator single({0});
  single.Add(0, Profile({0, 2, 0}));
  EXPECT_EQ(single.At(0).sup, Rational(1, 2));
}

TEST(Exceedance, Examples) {
  WidthProfile w = Profile({0, 2, 4, 2, 0});
  EXPECT_EQ(ComputeExceedance(w, 2).count, 1u);
  EXPECT_EQ(ComputeExceedance(w, 2).ratio, Rational(1, 4));
  EXPECT_EQ(ComputeExceedance(w, 0).count, 3u);
  EXPECT_EQ(ComputeExceedance(w, 0).ratio, Rational(3, 4));
  EXPECT_EQ(ComputeExceedance(w, 4).ratio, Rational(0));
  EXPECT_EQ(ComputeExceedance(w, 9).count, 0u);
}

TEST(Conditions, Thresholds) {
  EXPECT_TRUE(ConditionA(Rational(99, 100)));
  EXPECT_FALSE(ConditionA(Rational(1)));
  EXPECT_TRUE(ConditionB(Rational(1, 11), 2));
  EXPECT_FALSE(ConditionB(Rational(1, 10), 2));
}

TEST(SmallJumpers, Examples) {
  WidthProfile w = Profile({0, 2, 4, 2, 0});
  EXPECT_EQ(SmallJumpers(w, 1), (std::vector<std::size_t>{0, 1, 3, 4}));
  EXPECT_EQ(SmallJumpers(w, 2), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(SmallJumpers(Profile({0, 0, 0}), 0), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(MaxSmallJumperGap(w, 1), 2u);
  EXPECT_EQ(MaxSmallJumperGap(Profile({0, 0, 0, 0}), 0), 1u);
  EXPECT_EQ(MaxSmallJumperGap(Profile({0, 2, 0}), 1), 1u);
}

TEST_F(LatticeTest, RankExamples) {
  Band fork = MakeBand("aabb", "bbaa");
  EXPECT_EQ(Rank(*ball_, fork, 0, 0, 4), 0);
  EXPECT_EQ(Rank(*ball_, fork, 2, 1, 3), 2);
  Band flat = MakeBand("abab", "abab");
  for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(Rank(*ball_, flat, 0, t, 4), 0);
  // (1,3) is not 0-equilateral: widths there are 2
  EXPECT_THROW(Rank(*ball_, fork, 0, 1, 3), Error);
}

TEST(DenseValues, Examples) {
  WidthProfile w = Profile({0, 2, 4, 2, 0});
  EXPECT_EQ(DenseValues(w, 0, 4, 9, Rational(1, 40)), (std::vector<int>{0, 2, 4}));
  EXPECT_TRUE(DenseValues(w, 0, 4, 9, Rational(3, 5)).empty());
  EXPECT_EQ(DenseValues(Profile({3, 3, 3, 3}), 0, 3, 9, Rational(1)), (std::vector<int>{3}));
  EXPECT_THROW(DenseValues(w, 2, 2, 9, Rational(1, 2)), Error);
}

TEST(RegularSegment, Examples) {
  WidthProfile w = Profile({0, 2, 4, 2, 0});
  RealSegment whole{0, 4};
  auto found = FindRegularSegment(w, whole, 0, 2, 1);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(*found, whole);
  // jumpers everywhere
  WidthProfile flat = Profile({1, 1, 1, 1, 1});
  EXPECT_EQ(FindRegularSegment(flat, whole, 1, 4, 2), std::optional<RealSegment>(whole));
  EXPECT_FALSE(FindRegularSegment(w, whole, 1, 2, 1).has_value());
}

}  // namespace
}  // namespace bigonlab
