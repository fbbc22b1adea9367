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
#include <functional>
#include <optional>
#include <vector>

#include "bigonlab/cayley.hpp"
#include "bigonlab/parallel.hpp"
#include "bigonlab/rational.hpp"

namespace bigonlab {

/// Ordered pair of equal-length geodesic paths. Bigons are stored with the
/// lexicographically smaller side first.
struct Band {
  GeodesicPath side0;
  GeodesicPath side1;

  std::size_t length() const { return side0.length(); }
  Band Swapped() const { return Band{side1, side0}; }
  friend bool operator==(const Band&, const Band&) = default;
};

struct WidthProfile {
  std::vector<int> values;

  std::size_t length() const { return values.empty() ? 0 : values.size() - 1; }
  int operator[](std::size_t i) const { return values[i]; }
  friend bool operator==(const WidthProfile&, const WidthProfile&) = default;
};

/// max{1, d(a(0), b(0)) + d(a(l), b(l'))}. Throws on identical paths.
int GeoDistance(const GraphBall& ball, const GeodesicPath& a, const GeodesicPath& b);
bool IsFork(const GraphBall& ball, const Band& band);
bool IsBigon(const GraphBall& ball, const Band& band);

/// Pointwise side distances; refuses untrusted vertices.
WidthProfile ComputeWidthProfile(const GraphBall& ball, const Band& band);

struct BigonOptions {
  int length_cap = 0;
  std::size_t count_cap = 50'000'000;
};

struct EnumerationSummary {
  std::size_t count = 0;
  bool truncated = false;
};

/// Bigons whose first side starts at core vertex u, in stream order.
std::vector<Band> BigonsFrom(const GraphBall& ball, VertexId u, int length_cap);

/// Visits bigons in stream order: by start vertex of the first side, then by
/// end vertex, then lexicographically by the two sides. Ids count from 0.
EnumerationSummary ForEachBigon(const GraphBall& ball, const BigonOptions& options,
                                const std::function<void(std::size_t, const Band&)>& visit);

std::vector<Band> EnumerateBigons(const GraphBall& ball, const BigonOptions& options,
                                  bool* truncated = nullptr);

/// Folds the bigon stream with per-start-vertex partial results computed on
/// `jobs` threads, each starting from a copy of `empty`. merge() receives partials in stream order, so any fold
/// gives the same answer for every job count.
template <typename Partial, typename Visit, typename Merge>
EnumerationSummary FoldBigons(const GraphBall& ball, const BigonOptions& options, int jobs,
                              const Partial& empty, Visit&& visit, Merge&& merge);

// ---------------------------------------------------------------------------
// Statistics

struct Exceedance {
  std::size_t count = 0;
  Rational ratio;
};

/// Count of indices with w(i) > x, over l.
Exceedance ComputeExceedance(const WidthProfile& profile, int x);

struct SupEntry {
  int x = 0;
  Rational sup;                      // 0 on an empty stream
  std::optional<std::size_t> witness;  // first bigon attaining the sup
};

/// Running supremum of exceedance ratios for a fixed list of thresholds.
class SupAccumulator {
 public:
  explicit SupAccumulator(std::vector<int> xs = {});
  void Add(std::size_t id, const WidthProfile& profile);
  /// Folds in results for bigons that come later in the stream.
  void Merge(const SupAccumulator& later);
  const std::vector<SupEntry>& entries() const { return entries_; }
  const SupEntry& At(int x) const;
  /// Largest width seen.
  int max_width() const { return max_width_; }
  std::size_t count() const { return count_; }

 private:
  std::vector<SupEntry> entries_;
  int max_width_ = 0;
  std::size_t count_ = 0;
};

struct SupExceedanceResult {
  std::vector<SupEntry> entries;
  EnumerationSummary summary;
  int max_width = 0;
};

SupExceedanceResult SupExceedance(const GraphBall& ball, const BigonOptions& options,
                                  const std::vector<int>& xs, int jobs = 1);

/// Condition A on the sample: sup ratio at Y below 1.
bool ConditionA(const Rational& sup_at_y);
/// Condition B on the sample: sup ratio at Z below 1/(4Y+2).
bool ConditionB(const Rational& sup_at_z, int y);

/// Indices with w(i) <= 2Y+1, ascending.
std::vector<std::size_t> SmallJumpers(const WidthProfile& profile, int y);
/// Largest gap between consecutive small jumpers; 0 and l must be small.
std::size_t MaxSmallJumperGap(const WidthProfile& profile, int y);

/// t' - t + p - d(side0(t), side1(t')) for a fork and p-jumpers t < t'.
int Rank(const GraphBall& ball, const Band& fork, int p, std::size_t t, std::size_t t_end);

/// Values p <= max_value whose count in [lo, hi] is at least rho * (hi - lo).
std::vector<int> DenseValues(const WidthProfile& profile, std::size_t lo, std::size_t hi,
                             int max_value, const Rational& rho);

struct RealSegment {
  Rational lo;
  Rational hi;
  Rational length() const { return hi - lo; }
  friend bool operator==(const RealSegment&, const RealSegment&) = default;
};

/// Subdivision search for a segment whose `pieces` congruent closed pieces
/// each contain an index i with w(i) = p. Descends into a piece of largest
/// jumper density (leftmost on ties) at most `levels` times.
std::optional<RealSegment> FindRegularSegment(const WidthProfile& profile,
                                              const RealSegment& segment, int p,
                                              const BigInt& pieces, const BigInt& levels);

// ---------------------------------------------------------------------------

template <typename Partial, typename Visit, typename Merge>
EnumerationSummary FoldBigons(const GraphBall& ball, const BigonOptions& options, int jobs,
                              const Partial& empty, Visit&& visit, Merge&& merge) {
  EnumerationSummary summary;
  if (options.length_cap <= 0) return summary;
  const std::vector<VertexId> starts = ball.CoreVertices();
  const std::size_t batch = static_cast<std::size_t>(std::max(jobs, 1)) * 4;
  for (std::size_t first = 0; first < starts.size() && !summary.truncated; first += batch) {
    const std::size_t count = std::min(batch, starts.size() - first);
    std::vector<std::vector<Band>> bands(count);
    ParallelFor(count, jobs, [&](std::size_t i) {
      bands[i] = BigonsFrom(ball, starts[first + i], options.length_cap);
    });
    std::vector<std::size_t> offsets(count);
    for (std::size_t i = 0; i < count; ++i) {
      offsets[i] = summary.count;
      std::size_t room = options.count_cap - summary.count;
      if (bands[i].size() > room) {
        bands[i].resize(room);
        summary.truncated = true;
      }
      summary.count += bands[i].size();
      if (summary.truncated) {
        for (std::size_t j = i + 1; j < count; ++j) bands[j].clear();
        break;
      }
    }
    std::vector<Partial> partials(count, empty);
    ParallelFor(count, jobs, [&](std::size_t i) {
      for (std::size_t k = 0; k < bands[i].size(); ++k) visit(partials[i], offsets[i] + k, bands[i][k]);
    });
    for (auto& partial : partials) merge(std::move(partial));
  }
  return summary;
}

}  // namespace bigonlab
