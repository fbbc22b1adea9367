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

#include <cmath>

#include "bigonlab/cayley.hpp"
#include "bigonlab/error.hpp"
#include "oracles.hpp"

namespace bigonlab {
namespace {

GraphBall Ball(const char* preset, int radius, std::optional<int> core = std::nullopt) {
  Presentation p = ParsePresentation(PresetText(preset));
  BallOptions options;
  options.core_radius = core;
  return BuildBall(p, ChooseStrategy(p), radius, options);
}

VertexId At(const GraphBall& ball, const std::string& word) {
  auto v = ball.Find(ball.presentation().ParseWord(word));
  EXPECT_TRUE(v.has_value()) << word;
  return v.value_or(kNoVertex);
}

TEST(BuildBall, FreeGroupSphereSizes) {
  GraphBall ball = Ball("f2", 5);
  auto spheres = ball.SphereSizes();
  ASSERT_EQ(spheres.size(), 6u);
  EXPECT_EQ(spheres[0], 1u);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(spheres[k], 4 * static_cast<std::size_t>(std::pow(3, k - 1)));
  EXPECT_EQ(Ball("f2", 2).vertex_count(), 17);
}

TEST(BuildBall, LatticeSphereSizes) {
  EXPECT_EQ(Ball("z2", 2).vertex_count(), 13);
  GraphBall ball = Ball("z2", 9);
  EXPECT_EQ(ball.vertex_count(), static_cast<int>(oracle::LatticeBall(9).size()));
  auto spheres = ball.SphereSizes();
  for (int k = 1; k <= 9; ++k) EXPECT_EQ(spheres[k], static_cast<std::size_t>(4 * k));
}

TEST(BuildBall, RadiusZero) {
  GraphBall ball = Ball("surface2", 0);
  EXPECT_EQ(ball.vertex_count(), 1);
  EXPECT_EQ(ball.edge_count(), 0u);
}

TEST(BuildBall, SurfaceGroupIsCertifiedAndRegular) {
  GraphBall ball = Ball("surface2", 4);
  EXPECT_TRUE(ball.certified());
  // interior vertices have full degree 8
  for (VertexId v = 0; v < ball.vertex_count(); ++v)
    if (ball.layer(v) < ball.radius()) EXPECT_EQ(ball.neighbors(v).size(), 8u);
  // sphere sizes from the growth series
  // (1 + 2x + 2x^2 + 2x^3 + x^4) / (1 - 6x - 6x^2 - 6x^3 + x^4)
  const std::vector<long> numerator = {1, 2, 2, 2, 1};
  const std::vector<long> denominator = {1, -6, -6, -6, 1};
  std::vector<long> series;
  for (std::size_t n = 0; n <= 4; ++n) {
    long c = numerator[n];
    for (std::size_t k = 1; k <= n; ++k) c -= denominator[k] * series[n - k];
    series.push_back(c);
  }
  auto spheres = ball.SphereSizes();
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(static_cast<long>(spheres[n]), series[n]) << n;
}

TEST(BuildBall, RefusesUncertifiedStrategy) {
  Presentation p = ParsePresentation(PresetText("z2"));
  Strategy weak = CompleteRewriting(p, 0);
  try {
    BuildBall(p, weak, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRefused);
  }
  BallOptions options;
  options.allow_uncertified = true;
  EXPECT_FALSE(BuildBall(p, weak, 3, options).certified());
}

TEST(BuildBall, VertexCapRefuses) {
  Presentation p = ParsePresentation(PresetText("f2"));
  BallOptions options;
  options.vertex_cap = 100;
  try {
    BuildBall(p, ChooseStrategy(p), 8, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRefused);
  }
}

TEST(BuildBall, DehnStrategyMatchesRewriting) {
  Presentation p = ParsePresentation(PresetText("surface2"));
  GraphBall a = BuildBall(p, Strategy::DehnGreedy(p), 3);
  GraphBall b = BuildBall(p, ChooseStrategy(p), 3);
  EXPECT_EQ(a.SphereSizes(), b.SphereSizes());
  EXPECT_EQ(a.edge_count(), b.edge_count());
}

TEST(Distance, LatticeMatchesL1) {
  GraphBall ball = Ball("z2", 12, 4);
  EXPECT_EQ(ball.TrustedDistance(At(ball, "a"), At(ball, "b")), 2);
  EXPECT_EQ(ball.TrustedDistance(ball.base(), ball.base()), 0);
  const auto& core = ball.CoreVertices();
  for (VertexId u : core)
    for (VertexId v : core) {
      auto pu = oracle::LatticeEnd(ball.presentation().Format(ball.LabelWord(u)));
      auto pv = oracle::LatticeEnd(ball.presentation().Format(ball.LabelWord(v)));
      ASSERT_EQ(ball.TrustedDistance(u, v), oracle::L1(pu, pv));
    }
}

TEST(Distance, FreeGroupMatchesTreeMetric) {
  GraphBall ball = Ball("f2", 6, 2);
  const auto& core = ball.CoreVertices();
  for (VertexId u : core)
    for (VertexId v : core) {
      std::string lu = ball.presentation().Format(ball.LabelWord(u));
      std::string lv = ball.presentation().Format(ball.LabelWord(v));
      ASSERT_EQ(ball.TrustedDistance(u, v),
                static_cast<int>(oracle::FreeReduce(oracle::InvertWord(lu) + lv).size()));
    }
}

TEST(Distance, RefusesOutsideTrustRegion) {
  GraphBall ball = Ball("z2", 6);
  VertexId u = At(ball, "aaaaaa"), v = At(ball, "bbbbbb");
  try {
    ball.Distance(u, v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRefused);
    EXPECT_NE(std::string(e.what()).find("untrusted distance"), std::string::npos);
  }
  DistanceResult r = ball.Distance(u, v, TrustPolicy::kAllowUntrusted);
  EXPECT_EQ(r.value, 12);
}

TEST(IngestGraph, PathAndCycle) {
  GraphBall path = IngestGraph("0 1\n1 2\n", 0);
  EXPECT_EQ(path.TrustedDistance(*path.FindExternal(0), *path.FindExternal(2)), 2);
  GraphBall cycle = IngestGraph("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n", 0);
  EXPECT_EQ(cycle.TrustedDistance(*cycle.FindExternal(0), *cycle.FindExternal(3)), 3);
  EXPECT_FALSE(cycle.is_cayley());
}

TEST(IngestGraph, Validation) {
  auto kind = [](const char* text, long base) {
    try {
      IngestGraph(text, base);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kRefused;
  };
  EXPECT_EQ(kind("0 0\n", 0), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind("0 1\n1 0\n", 0), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind("0 1\n2 3\n", 0), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind("0 1\n", 7), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind("0 1 2\n", 0), ErrorKind::kParse);
  EXPECT_EQ(kind("# comment\n0 x\n", 0), ErrorKind::kParse);
}

TEST(Geodesics, LatticeCountsAreBinomial) {
  GraphBall ball = Ball("z2", 12, 4);
  auto set = EnumerateGeodesics(ball, ball.base(), At(ball, "aab"));
  EXPECT_EQ(set.paths.size(), 3u);
  for (VertexId v : ball.CoreVertices()) {
    auto p = oracle::LatticeEnd(ball.presentation().Format(ball.LabelWord(v)));
    auto geos = EnumerateGeodesics(ball, ball.base(), v);
    ASSERT_EQ(static_cast<long>(geos.paths.size()),
              oracle::Binomial(std::abs(p.first) + std::abs(p.second), std::abs(p.first)));
    std::set<std::string> words;
    for (const auto& g : geos.paths) {
      EXPECT_TRUE(IsGeodesic(ball, g));
      words.insert(ball.presentation().Format(PathWord(ball, g)));
    }
    std::vector<std::string> want;
    oracle::LatticeGeodesics({0, 0}, p, "", want);
    EXPECT_EQ(words, std::set<std::string>(want.begin(), want.end()));
    EXPECT_TRUE(std::is_sorted(geos.paths.begin(), geos.paths.end()));
  }
}

TEST(Geodesics, TreesAreUnigeodesic) {
  GraphBall ball = Ball("f2", 6, 2);
  for (VertexId u : ball.CoreVertices())
    for (VertexId v : ball.CoreVertices()) ASSERT_EQ(EnumerateGeodesics(ball, u, v).paths.size(), 1u);
}

TEST(Geodesics, TrivialAndTruncated) {
  GraphBall ball = Ball("z2", 12, 4);
  auto same = EnumerateGeodesics(ball, ball.base(), ball.base());
  ASSERT_EQ(same.paths.size(), 1u);
  EXPECT_EQ(same.paths[0].length(), 0u);
  auto capped = EnumerateGeodesics(ball, ball.base(), At(ball, "aabb"), 2);
  EXPECT_EQ(capped.paths.size(), 2u);
  EXPECT_TRUE(capped.truncated);
}

TEST(Geodesics, IngestedGraphUsesInBallSearch) {
  GraphBall grid = IngestGraph("0 1\n1 2\n0 3\n1 4\n2 5\n3 4\n4 5\n3 6\n4 7\n5 8\n6 7\n7 8\n", 0, 4);
  auto set = EnumerateGeodesics(grid, *grid.FindExternal(0), *grid.FindExternal(8));
  EXPECT_EQ(set.paths.size(), 6u);
}

TEST(GromovDelta, TreeIsZero) {
  GraphBall ball = Ball("f2", 6, 2);
  EXPECT_EQ(GromovDeltaOver(ball, ball.CoreVertices()), Rational(0));
}

TEST(GromovDelta, LatticeMatchesBruteForce) {
  GraphBall ball = Ball("z2", 9, 3);
  Rational delta = GromovDeltaOver(ball, ball.CoreVertices(), 2);
  Rational want(oracle::LatticeDoubledDelta(oracle::LatticeBall(3)), 2);
  want.canonicalize();
  EXPECT_EQ(delta, want);
}

TEST(GromovDelta, LatticeCoreSixIsAtLeastTwo) {
  GraphBall ball = Ball("z2", 18, 6);
  EXPECT_GE(GromovDeltaOver(ball, ball.CoreVertices(), 4), Rational(2));
}

TEST(GromovDelta, SampleEdgeCases) {
  GraphBall ball = Ball("z2", 6);
  EXPECT_EQ(GromovDelta(ball, {Quadruple{0, 0, 0, 0}}), Rational(0));
  EXPECT_THROW(GromovDelta(ball, {}), Error);
}

}  // namespace
}  // namespace bigonlab
