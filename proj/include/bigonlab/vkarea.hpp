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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigonlab/bigon.hpp"
#include "bigonlab/cayley.hpp"
#include "bigonlab/presentation.hpp"
#include "bigonlab/rational.hpp"

namespace bigonlab {

enum class AreaStatus { kExact, kUpperBound, kExhausted };
std::string ToString(AreaStatus status);

struct AreaCaps {
  std::size_t length_cap = 16;  // longest intermediate word kept
  long area_cap = 64;           // deepest search
  std::size_t state_cap = 4'000'000;
};

/// One move: insert `relator` before letter `position`, then freely reduce.
struct AreaMove {
  std::size_t position = 0;
  Word relator;
  friend bool operator==(const AreaMove&, const AreaMove&) = default;
};

struct AreaResult {
  Word word;
  std::optional<long> area;
  AreaStatus status = AreaStatus::kExhausted;
  AreaCaps caps;
  std::vector<AreaMove> witness;
  std::size_t states = 0;  // distinct words reached
};

/// Minimal number of relator insertions (conjugates of relators) reducing w
/// to the empty word. Best-first search with an admissible lower bound;
/// `exact` is claimed only when no pruned word could lead to a shorter
/// derivation.
AreaResult Area(const Presentation& p, const Word& w, const AreaCaps& caps = {});

/// Applies the moves to w; returns the final freely reduced word.
Word ReplayMoves(const Word& w, const std::vector<AreaMove>& moves);

/// Boundary loop of a bigon: side1, the edge to the end of side0 when the
/// ends differ, side0 backwards, then the edge back to the start of side1.
Word BigonBoundary(const GraphBall& ball, const Band& band);
AreaResult BigonArea(const GraphBall& ball, const Band& band, const AreaCaps& caps = {});

struct RatioRow {
  std::size_t id = 0;
  std::size_t length = 0;
  AreaResult area;
  std::optional<Rational> ratio;  // set for exact areas
};

struct RatioStats {
  std::vector<RatioRow> rows;
  std::optional<Rational> max_ratio;
  std::map<std::size_t, Rational> max_by_length;
  std::size_t excluded = 0;    // non-exact areas
  std::size_t degenerate = 0;  // equal-sided bands
};

/// Area ratios a(band)/|band|. Equal boundary words share one search.
RatioStats ComputeRatioStats(const GraphBall& ball, const std::vector<Band>& bands,
                             const AreaCaps& caps = {}, int jobs = 1);

struct QuadSample {
  Word loop;
  std::array<std::size_t, 4> corners{};  // increasing positions in [0, |loop|)
};

struct OmegaEstimate {
  Rational value;
  std::size_t witness = 0;  // index of the minimizing sample
  std::size_t used = 0;
  std::size_t skipped = 0;
};

/// min over samples of area / (d0 * d1), where d0 and d1 are the distances
/// between opposite arcs of the loop. Skips degenerate or non-exact samples.
OmegaEstimate EstimateOmega(const Presentation& p, const std::vector<QuadSample>& samples,
                            const AreaCaps& caps = {});

struct OpenSegment {
  Rational lo;
  Rational hi;
  Rational length() const { return hi - lo; }
  friend bool operator==(const OpenSegment&, const OpenSegment&) = default;
};

/// Gap between two disjoint open segments.
Rational SegmentGap(const OpenSegment& x, const OpenSegment& y);

/// Greedy selection: take a longest segment (leftmost on ties), drop every
/// segment within `a` of it, repeat. Result sorted by left end.
std::vector<OpenSegment> SelectSeparated(const std::vector<OpenSegment>& segments,
                                         const Rational& a);

}  // namespace bigonlab
