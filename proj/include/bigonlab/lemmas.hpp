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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bigonlab/bigon.hpp"
#include "bigonlab/constants.hpp"
#include "bigonlab/rational.hpp"
#include "bigonlab/vkarea.hpp"

namespace bigonlab {

/// Outcome of one invariant suite.
struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string first_violation;  // empty when none

  /// Counts one check; `describe` runs only for the first violation.
  template <typename Describe>
  void Record(bool ok, Describe&& describe) {
    ++checks;
    if (!ok && violations++ == 0) first_violation = describe();
  }
  void Merge(const SuiteReport& later);
};

/// Forks (both side orders) of the given bigons, with precomputed rank data.
/// Checks rank monotonicity under nested equilateral segments and the
/// bounds 0 <= rk <= 1 + p.
SuiteReport CheckRankMonotonicity(const GraphBall& ball, const std::vector<Band>& bigons, int jobs = 1);
SuiteReport CheckRankBounds(const GraphBall& ball, const std::vector<Band>& bigons, int jobs = 1);

/// For J- o J o J+ with rk J- = rk J+ = m and |J| >= theta*|I| + (1+theta)*p:
/// J meets a small jumper (width <= 2Y+1) or rk I >= m + 1.
SuiteReport CheckRankDecay(const GraphBall& ball, const std::vector<Band>& bigons, int y,
                           const Rational& theta, int jobs = 1);

/// Pointwise triangle inequality for width sets: over every triple of
/// geodesics with both ends within `radius` of the base, and thresholds
/// A, B <= max_threshold, the (A+B)-exceedance set of the outer pair lies in
/// the union of the inner ones.
SuiteReport CheckSubadditivity(const GraphBall& ball, int radius, int max_threshold, int jobs = 1);

struct DenseValueParams {
  int y = 0;                 // endpoint widths <= 2Y+1
  Rational lambda{1, 10};
  Rational nu{1, 2};
};

struct DenseValueReport {
  SuiteReport suite;
  int z = 0;  // smallest threshold meeting the measured E-condition
  Rational epsilon;
  long d = 0;
  Rational rho;
  BigInt r;
};

/// Dense values are nonempty on every sub-band of length >= R with small
/// endpoint widths, for the smallest Z at which the measured exceedance of
/// the stream stays below epsilon = lambda / (4Y+2).
DenseValueReport CheckDenseValues(const GraphBall& ball, const std::vector<Band>& bigons,
                                  const DenseValueParams& params);

/// Greedy separated selection against exhaustive search on random inputs of
/// at most `max_segments` segments.
struct SegmentLemmaReport {
  SuiteReport suite;
  Rational worst_input_fraction;  // min over trials of |greedy| / |input|
  Rational worst_optimum_fraction;  // min over trials of |greedy| / |best subset|
};
SegmentLemmaReport CheckSegmentLemma(std::uint64_t seed, std::size_t trials, std::size_t max_segments);

/// Largest valid subset total by exhaustive search (pairwise gaps > a).
Rational BestSeparatedTotal(const std::vector<OpenSegment>& segments, const Rational& a);

}  // namespace bigonlab
