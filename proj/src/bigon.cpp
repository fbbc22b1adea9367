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

#include "bigonlab/bigon.hpp"

#include <algorithm>
#include <map>

#include "bigonlab/error.hpp"

namespace bigonlab {

int GeoDistance(const GraphBall& ball, const GeodesicPath& a, const GeodesicPath& b) {
  if (a == b) Fail(ErrorKind::kPrecondition, "distance between identical paths is undefined");
  int sum = ball.TrustedDistance(a.front(), b.front()) + ball.TrustedDistance(a.back(), b.back());
  return std::max(1, sum);
}

bool IsFork(const GraphBall& ball, const Band& band) {
  return band.side0.length() == band.side1.length() && !band.side0.vertices.empty() &&
         ball.TrustedDistance(band.side0.front(), band.side1.front()) <= 1;
}

bool IsBigon(const GraphBall& ball, const Band& band) {
  return band.side0.length() == band.side1.length() && band.side0 != band.side1 &&
         !band.side0.vertices.empty() && GeoDistance(ball, band.side0, band.side1) == 1;
}

WidthProfile ComputeWidthProfile(const GraphBall& ball, const Band& band) {
  if (band.side0.vertices.size() != band.side1.vertices.size() || band.side0.vertices.empty())
    Fail(ErrorKind::kPrecondition, "band sides must be nonempty and of equal length");
  WidthProfile profile;
  profile.values.reserve(band.side0.vertices.size());
  for (std::size_t i = 0; i < band.side0.vertices.size(); ++i)
    profile.values.push_back(ball.TrustedDistance(band.side0[i], band.side1[i]));
  return profile;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void CheckLengthCap(const GraphBall& ball, int length_cap) {
  if (length_cap < 0) Fail(ErrorKind::kInvalidArgument, "length cap must be >= 0");
  if (length_cap > 2 * ball.core_radius()) {
    Fail(ErrorKind::kInvalidArgument,
         "length cap " + std::to_string(length_cap) + " exceeds twice the core radius " +
             std::to_string(ball.core_radius()));
  }
}

const std::vector<GeodesicPath>& Geodesics(const GraphBall& ball, VertexId u, VertexId v,
                                           std::map<std::pair<VertexId, VertexId>,
                                                    std::vector<GeodesicPath>>& cache) {
  auto key = std::make_pair(u, v);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  GeodesicSet set = EnumerateGeodesics(ball, u, v);
  if (set.truncated) Fail(ErrorKind::kRefused, "too many geodesics between a vertex pair");
  return cache.emplace(key, std::move(set.paths)).first->second;
}

}  // namespace

std::vector<Band> BigonsFrom(const GraphBall& ball, VertexId u, int length_cap) {
  CheckLengthCap(ball, length_cap);
  std::vector<Band> out;
  if (!ball.InCore(u) || length_cap == 0) return out;
  std::map<std::pair<VertexId, VertexId>, std::vector<GeodesicPath>> cache;

  std::vector<VertexId> later_starts;  // neighbors of u after u, inside the core
  for (VertexId w : ball.neighbors(u))
    if (w > u && ball.InCore(w)) later_starts.push_back(w);

  for (VertexId v : ball.CoreVertices()) {
    const int length = ball.TrustedDistance(u, v);
    if (length < 1 || length > length_cap) continue;
    const auto& own = Geodesics(ball, u, v, cache);

    std::vector<const std::vector<GeodesicPath>*> shifted_end;
    for (VertexId w : ball.neighbors(v)) {
      if (ball.InCore(w) && ball.TrustedDistance(u, w) == length)
        shifted_end.push_back(&Geodesics(ball, u, w, cache));
    }
    std::vector<const std::vector<GeodesicPath>*> shifted_start;
    for (VertexId w : later_starts) {
      if (ball.TrustedDistance(w, v) == length) shifted_start.push_back(&Geodesics(ball, w, v, cache));
    }

    for (std::size_t i = 0; i < own.size(); ++i) {
      const GeodesicPath& first = own[i];
      std::vector<const GeodesicPath*> partners;
      for (std::size_t j = i + 1; j < own.size(); ++j) partners.push_back(&own[j]);
      for (const auto* list : shifted_end)
        for (const auto& other : *list)
          if (first < other) partners.push_back(&other);
      for (const auto* list : shifted_start)
        for (const auto& other : *list) partners.push_back(&other);
      std::sort(partners.begin(), partners.end(),
                [](const GeodesicPath* a, const GeodesicPath* b) { return *a < *b; });
      for (const GeodesicPath* other : partners) out.push_back(Band{first, *other});
    }
  }
  return out;
}

EnumerationSummary ForEachBigon(const GraphBall& ball, const BigonOptions& options,
                                const std::function<void(std::size_t, const Band&)>& visit) {
  CheckLengthCap(ball, options.length_cap);
  EnumerationSummary summary;
  for (VertexId u : ball.CoreVertices()) {
    for (const Band& band : BigonsFrom(ball, u, options.length_cap)) {
      if (summary.count == options.count_cap) {
        summary.truncated = true;
        return summary;
      }
      visit(summary.count++, band);
    }
  }
  return summary;
}

std::vector<Band> EnumerateBigons(const GraphBall& ball, const BigonOptions& options,
                                  bool* truncated) {
  std::vector<Band> out;
  auto summary = ForEachBigon(ball, options, [&](std::size_t, const Band& b) { out.push_back(b); });
  if (truncated) *truncated = summary.truncated;
  return out;
}

// ---------------------------------------------------------------------------
// Statistics

Exceedance ComputeExceedance(const WidthProfile& profile, int x) {
  if (profile.length() < 1) Fail(ErrorKind::kPrecondition, "exceedance needs a profile of length >= 1");
  Exceedance e;
  for (int w : profile.values) e.count += w > x ? 1 : 0;
  e.ratio = Rational(static_cast<long>(e.count), static_cast<long>(profile.length()));
  e.ratio.canonicalize();
  return e;
}

SupAccumulator::SupAccumulator(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (int x : xs) entries_.push_back(SupEntry{x, Rational(0), std::nullopt});
}

void SupAccumulator::Add(std::size_t id, const WidthProfile& profile) {
  ++count_;
  for (int w : profile.values) max_width_ = std::max(max_width_, w);
  for (auto& entry : entries_) {
    Rational ratio = ComputeExceedance(profile, entry.x).ratio;
    if (!entry.witness || ratio > entry.sup) {
      entry.sup = ratio;
      entry.witness = id;
    }
  }
}

void SupAccumulator::Merge(const SupAccumulator& later) {
  if (later.count_ == 0) return;
  if (count_ == 0) {
    *this = later;
    return;
  }
  count_ += later.count_;
  max_width_ = std::max(max_width_, later.max_width_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (later.entries_[i].sup > entries_[i].sup) entries_[i] = later.entries_[i];
  }
}

const SupEntry& SupAccumulator::At(int x) const {
  for (const auto& entry : entries_)
    if (entry.x == x) return entry;
  Fail(ErrorKind::kInvalidArgument, "threshold " + std::to_string(x) + " was not tracked");
}

SupExceedanceResult SupExceedance(const GraphBall& ball, const BigonOptions& options,
                                  const std::vector<int>& xs, int jobs) {
  CheckLengthCap(ball, options.length_cap);
  SupAccumulator total(xs);
  auto summary = FoldBigons(
      ball, options, jobs, SupAccumulator(xs),
      [&](SupAccumulator& acc, std::size_t id, const Band& band) {
        acc.Add(id, ComputeWidthProfile(ball, band));
      },
      [&](SupAccumulator&& acc) { total.Merge(acc); });
  return SupExceedanceResult{total.entries(), summary, total.max_width()};
}

bool ConditionA(const Rational& sup_at_y) { return sup_at_y < 1; }

bool ConditionB(const Rational& sup_at_z, int y) {
  return sup_at_z < Rational(1, 4 * y + 2);
}

std::vector<std::size_t> SmallJumpers(const WidthProfile& profile, int y) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < profile.values.size(); ++i)
    if (profile[i] <= 2 * y + 1) out.push_back(i);
  return out;
}

std::size_t MaxSmallJumperGap(const WidthProfile& profile, int y) {
  auto small = SmallJumpers(profile, y);
  if (small.empty() || small.front() != 0 || small.back() != profile.length()) {
    Fail(ErrorKind::kPrecondition,
         "max small-jumper gap needs both end indices to be small jumpers (not a bigon profile)");
  }
  std::size_t gap = 0;
  for (std::size_t i = 1; i < small.size(); ++i) gap = std::max(gap, small[i] - small[i - 1]);
  return gap;
}

int Rank(const GraphBall& ball, const Band& fork, int p, std::size_t t, std::size_t t_end) {
  if (!IsFork(ball, fork)) Fail(ErrorKind::kPrecondition, "rank needs a fork");
  if (!(t < t_end) || t_end > fork.length())
    Fail(ErrorKind::kPrecondition, "rank needs indices t < t' <= length");
  if (ball.TrustedDistance(fork.side0[t], fork.side1[t]) != p ||
      ball.TrustedDistance(fork.side0[t_end], fork.side1[t_end]) != p) {
    Fail(ErrorKind::kPrecondition, "segment [" + std::to_string(t) + ", " +
                                       std::to_string(t_end) + "] is not (p,band)-equilateral for p = " +
                                       std::to_string(p));
  }
  return static_cast<int>(t_end - t) + p - ball.TrustedDistance(fork.side0[t], fork.side1[t_end]);
}

std::vector<int> DenseValues(const WidthProfile& profile, std::size_t lo, std::size_t hi,
                             int max_value, const Rational& rho) {
  if (!(lo < hi) || hi > profile.length())
    Fail(ErrorKind::kPrecondition, "dense values need an index segment lo < hi <= length");
  std::vector<long> counts(static_cast<std::size_t>(std::max(max_value, 0)) + 1, 0);
  for (std::size_t i = lo; i <= hi; ++i)
    if (profile[i] >= 0 && profile[i] <= max_value) ++counts[profile[i]];
  Rational threshold = rho * Rational(static_cast<long>(hi - lo));
  std::vector<int> out;
  for (int p = 0; p <= max_value; ++p)
    if (Rational(counts[p]) >= threshold) out.push_back(p);
  return out;
}

namespace {

BigInt Ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

std::optional<RealSegment> FindRegularSegment(const WidthProfile& profile,
                                              const RealSegment& segment, int p,
                                              const BigInt& pieces, const BigInt& levels) {
  if (!(segment.lo < segment.hi)) Fail(ErrorKind::kPrecondition, "segment must have positive length");
  if (pieces < 1) Fail(ErrorKind::kInvalidArgument, "piece count must be >= 1");
  if (levels < 0) Fail(ErrorKind::kInvalidArgument, "level count must be >= 0");
  RealSegment current = segment;
  const long last = static_cast<long>(profile.length());
  for (BigInt level = 0;; ++level) {
    std::vector<long> jumpers;
    BigInt from = Ceil(current.lo), to = Floor(current.hi);
    if (from < 0) from = 0;
    if (to > last) to = last;
    for (long t = from.get_si(); from <= to && t <= to.get_si(); ++t)
      if (profile[static_cast<std::size_t>(t)] == p) jumpers.push_back(t);
    // A closed piece shares at most its two endpoints with neighbors, so
    // fewer than pieces/2 jumpers cannot cover every piece, here or deeper.
    if (jumpers.empty() || pieces > BigInt(2 * static_cast<long>(jumpers.size()))) return std::nullopt;

    const Rational width = current.length() / Rational(pieces);
    std::map<BigInt, long> hits;  // piece index -> jumper count
    for (long t : jumpers) {
      Rational position = (Rational(t) - current.lo) / width;
      BigInt k = Floor(position);
      bool on_boundary = Rational(k) == position;
      if (k < pieces) ++hits[k];
      if (on_boundary && k > 0) ++hits[k - 1];
    }
    if (BigInt(static_cast<long>(hits.size())) == pieces) return current;
    if (level == levels) return std::nullopt;
    auto best = hits.begin();
    for (auto it = hits.begin(); it != hits.end(); ++it)
      if (it->second > best->second) best = it;
    Rational lo = current.lo + Rational(best->first) * width;
    current = RealSegment{lo, lo + width};
  }
}

}  // namespace bigonlab
