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

#include "bigonlab/vkarea.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_map>

#include "bigonlab/error.hpp"
#include "bigonlab/parallel.hpp"
#include "bigonlab/wordproblem.hpp"

namespace bigonlab {

std::string ToString(AreaStatus status) {
  switch (status) {
    case AreaStatus::kExact: return "exact";
    case AreaStatus::kUpperBound: return "upper_bound";
    case AreaStatus::kExhausted: return "exhausted";
  }
  return "unknown";
}

Word ReplayMoves(const Word& w, const std::vector<AreaMove>& moves) {
  Word current = FreeReduce(w);
  for (const AreaMove& move : moves) {
    if (move.position > current.size()) Fail(ErrorKind::kPrecondition, "move position out of range");
    Word next = current.Slice(0, move.position) + move.relator +
                current.Slice(move.position, current.size() - move.position);
    current = FreeReduce(next);
  }
  return current;
}

namespace {

constexpr long kUnreachable = std::numeric_limits<long>::max() / 4;

// Lower bound on the number of moves from a word to the empty word.
//  - Length: one insertion of a relator of length m shortens a reduced word
//    by at most m.
//  - Signed area: in each coordinate plane of the abelianization where all
//    relators are closed, inserting a relator shifts the enclosed signed
//    area by that relator's own area; free reduction leaves it unchanged.
class LowerBound {
 public:
  explicit LowerBound(const Presentation& symmetric) {
    generators_ = symmetric.generator_count();
    for (const Word& r : symmetric.relators()) longest_ = std::max(longest_, r.size());
    std::vector<bool> closed(generators_, true);
    for (const Word& r : symmetric.relators()) {
      std::vector<long> sums(generators_, 0);
      for (Letter x : r) sums[GeneratorOf(x)] += IsInverse(x) ? -1 : 1;
      for (int g = 0; g < generators_; ++g)
        if (sums[g] != 0) closed[g] = false;
    }
    for (int i = 0; i < generators_; ++i) {
      for (int j = i + 1; j < generators_; ++j) {
        if (!closed[i] || !closed[j]) continue;
        long unit = 0;
        for (const Word& r : symmetric.relators()) unit = std::max(unit, std::labs(SignedArea(r, i, j)));
        planes_.push_back({i, j, unit});
      }
    }
  }

  long operator()(const Word& w) const {
    long bound = longest_ == 0 ? (w.empty() ? 0 : kUnreachable)
                               : static_cast<long>((w.size() + longest_ - 1) / longest_);
    for (const Plane& plane : planes_) {
      long area = std::labs(SignedArea(w, plane.i, plane.j));
      if (area == 0) continue;
      if (plane.unit == 0) return kUnreachable;
      bound = std::max(bound, (area + plane.unit - 1) / plane.unit);
    }
    return bound;
  }

 private:
  struct Plane {
    int i, j;
    long unit;
  };

  static long SignedArea(const Word& w, int i, int j) {
    long x = 0, area = 0;
    for (Letter letter : w) {
      int g = GeneratorOf(letter);
      long step = IsInverse(letter) ? -1 : 1;
      if (g == i) x += step;
      if (g == j) area += x * step;
    }
    return area;
  }

  int generators_ = 0;
  std::size_t longest_ = 0;
  std::vector<Plane> planes_;
};

struct Node {
  Word word;
  long g = 0;
  long parent = -1;
  AreaMove move;
};

std::string Key(const Word& w) { return std::string(w.begin(), w.end()); }

}  // namespace

AreaResult Area(const Presentation& p, const Word& w, const AreaCaps& caps) {
  AreaResult result;
  result.word = w;
  result.caps = caps;
  const Word start = FreeReduce(w);
  if (start.size() > caps.length_cap) {
    Fail(ErrorKind::kInvalidArgument, "word length " + std::to_string(start.size()) +
                                          " exceeds the length cap " + std::to_string(caps.length_cap));
  }
  if (start.empty()) {
    result.area = 0;
    result.status = AreaStatus::kExact;
    result.states = 1;
    return result;
  }
  Presentation symmetric = p.symmetrized() ? p : Symmetrize(p);
  std::vector<Word> relators = symmetric.relators();
  std::sort(relators.begin(), relators.end());
  LowerBound lower(symmetric);

  std::vector<Node> nodes;
  std::unordered_map<std::string, long> index;
  // Open entries: (f, -g, insertion order, node). Larger g first on ties
  // heads straight for the goal; insertion order keeps runs reproducible.
  using Entry = std::tuple<long, long, long, long>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
  long order = 0;
  long pruned_bound = kUnreachable;  // min over dropped words of g + h

  nodes.push_back(Node{start, 0, -1, {}});
  index.emplace(Key(start), 0);
  long h0 = lower(start);
  if (h0 < kUnreachable) open.emplace(h0, 0, order++, 0);
  std::vector<bool> closed;

  while (!open.empty()) {
    auto [f, neg_g, seq, id] = open.top();
    open.pop();
    (void)seq;
    if (-neg_g != nodes[id].g) continue;  // stale entry
    if (f > caps.area_cap) break;
    if (nodes[id].word.empty()) {
      long area = nodes[id].g;
      result.area = area;
      result.status = pruned_bound >= area ? AreaStatus::kExact : AreaStatus::kUpperBound;
      for (long at = id; nodes[at].parent >= 0; at = nodes[at].parent)
        result.witness.push_back(nodes[at].move);
      std::reverse(result.witness.begin(), result.witness.end());
      result.states = nodes.size();
      return result;
    }
    const Word current = nodes[id].word;
    const long g = nodes[id].g;
    for (std::size_t pos = 0; pos <= current.size(); ++pos) {
      for (const Word& r : relators) {
        Word next = FreeReduce(current.Slice(0, pos) + r + current.Slice(pos, current.size() - pos));
        long h = lower(next);
        if (h >= kUnreachable) continue;  // provably not reducible to empty
        if (next.size() > caps.length_cap) {
          pruned_bound = std::min(pruned_bound, g + 1 + h);
          continue;
        }
        auto [it, fresh] = index.emplace(Key(next), static_cast<long>(nodes.size()));
        if (fresh) {
          if (nodes.size() >= caps.state_cap) {
            index.erase(it);
            pruned_bound = std::min(pruned_bound, g + 1 + h);
            continue;
          }
          nodes.push_back(Node{std::move(next), g + 1, id, AreaMove{pos, r}});
        } else if (nodes[it->second].g > g + 1) {
          nodes[it->second].g = g + 1;
          nodes[it->second].parent = id;
          nodes[it->second].move = AreaMove{pos, r};
        } else {
          continue;
        }
        open.emplace(g + 1 + h, -(g + 1), order++, it->second);
      }
    }
  }
  result.status = AreaStatus::kExhausted;
  result.states = nodes.size();
  return result;
}

Word BigonBoundary(const GraphBall& ball, const Band& band) {
  const auto& a = band.side0;
  const auto& b = band.side1;
  if (a.vertices.size() != b.vertices.size() || a.vertices.empty())
    Fail(ErrorKind::kPrecondition, "band sides must be nonempty and of equal length");
  auto edge = [&](VertexId from, VertexId to) -> Word {
    if (from == to) return Word();
    auto x = ball.EdgeLetter(from, to);
    if (!x) Fail(ErrorKind::kPrecondition, "band endpoints are more than one edge apart: not a bigon");
    return Word{*x};
  };
  Word loop = PathWord(ball, b) + edge(b.back(), a.back()) + Invert(PathWord(ball, a)) +
              edge(a.front(), b.front());
  return loop;
}

AreaResult BigonArea(const GraphBall& ball, const Band& band, const AreaCaps& caps) {
  return Area(ball.presentation(), BigonBoundary(ball, band), caps);
}

RatioStats ComputeRatioStats(const GraphBall& ball, const std::vector<Band>& bands,
                             const AreaCaps& caps, int jobs) {
  RatioStats stats;
  std::vector<Word> loops(bands.size());
  std::map<Word, std::size_t> unique;  // boundary -> slot
  std::vector<Word> distinct;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (bands[i].side0 == bands[i].side1) continue;
    loops[i] = FreeReduce(BigonBoundary(ball, bands[i]));
    if (unique.emplace(loops[i], distinct.size()).second) distinct.push_back(loops[i]);
  }
  std::vector<AreaResult> areas(distinct.size());
  ParallelFor(distinct.size(), jobs, [&](std::size_t i) {
    areas[i] = Area(ball.presentation(), distinct[i], caps);
  });
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (bands[i].side0 == bands[i].side1) {
      ++stats.degenerate;
      continue;
    }
    RatioRow row;
    row.id = i;
    row.length = bands[i].length();
    row.area = areas[unique.at(loops[i])];
    if (row.area.status == AreaStatus::kExact && row.length > 0) {
      Rational ratio(*row.area.area, static_cast<long>(row.length));
      ratio.canonicalize();
      row.ratio = ratio;
      if (!stats.max_ratio || ratio > *stats.max_ratio) stats.max_ratio = ratio;
      auto [it, fresh] = stats.max_by_length.emplace(row.length, ratio);
      if (!fresh && ratio > it->second) it->second = ratio;
    } else {
      ++stats.excluded;
    }
    stats.rows.push_back(std::move(row));
  }
  return stats;
}

OmegaEstimate EstimateOmega(const Presentation& p, const std::vector<QuadSample>& samples,
                            const AreaCaps& caps) {
  std::size_t longest = 0;
  for (const auto& s : samples) longest = std::max(longest, s.loop.size());
  Strategy strategy = ChooseStrategy(p);
  if (!strategy.canonical()) {
    Fail(ErrorKind::kRefused, "arc distances need a certified canonical normal form; got " +
                                  strategy.Describe());
  }
  BallOptions options;
  options.core_radius = 0;
  // Every loop vertex is within half the loop length of the base.
  GraphBall ball = BuildBall(p, strategy, static_cast<int>(longest / 2 + 1), options);

  OmegaEstimate estimate;
  std::optional<Rational> best;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& sample = samples[s];
    const std::size_t n = sample.loop.size();
    const auto& c = sample.corners;
    bool valid = n > 0 && c[3] < n;
    for (int k = 0; k < 3; ++k) valid = valid && c[k] < c[k + 1];
    if (!valid) Fail(ErrorKind::kInvalidArgument, "corner positions must increase within the loop");
    if (!strategy.NormalForm(sample.loop).empty())
      Fail(ErrorKind::kInvalidArgument, "sample loop is not null-homotopic");

    std::vector<VertexId> at(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      auto v = ball.Find(sample.loop.Slice(0, k));
      if (!v) Fail(ErrorKind::kRefused, "loop leaves the ball");
      at[k] = *v;
    }
    auto arc = [&](std::size_t from, std::size_t to) {
      std::vector<VertexId> out;
      for (std::size_t k = from; k <= to; ++k) out.push_back(at[k]);
      return out;
    };
    auto gap = [&](const std::vector<VertexId>& x, const std::vector<VertexId>& y) {
      int best_gap = std::numeric_limits<int>::max();
      for (VertexId u : x)
        for (VertexId v : y) best_gap = std::min(best_gap, ball.TrustedDistance(u, v));
      return best_gap;
    };
    int d0 = gap(arc(c[0], c[1]), arc(c[2], c[3]));
    std::vector<VertexId> closing = arc(c[3], n);
    for (std::size_t k = 1; k <= c[0]; ++k) closing.push_back(at[k]);
    int d1 = gap(arc(c[1], c[2]), closing);
    if (d0 == 0 || d1 == 0) {
      ++estimate.skipped;
      continue;
    }
    AreaResult area = Area(p, sample.loop, caps);
    if (area.status != AreaStatus::kExact) {
      ++estimate.skipped;
      continue;
    }
    Rational ratio(*area.area, static_cast<long>(d0) * d1);
    ratio.canonicalize();
    ++estimate.used;
    if (!best || ratio < *best) {
      best = ratio;
      estimate.witness = s;
    }
  }
  if (!best) Fail(ErrorKind::kInvalidArgument, "no usable samples for the omega estimate");
  estimate.value = *best;
  return estimate;
}

Rational SegmentGap(const OpenSegment& x, const OpenSegment& y) {
  Rational left = y.lo - x.hi;
  Rational right = x.lo - y.hi;
  return left > right ? left : right;
}

std::vector<OpenSegment> SelectSeparated(const std::vector<OpenSegment>& segments,
                                         const Rational& a) {
  if (a <= 0) Fail(ErrorKind::kInvalidArgument, "separation must be positive");
  std::vector<OpenSegment> remaining = segments;
  std::sort(remaining.begin(), remaining.end(),
            [](const OpenSegment& x, const OpenSegment& y) { return x.lo < y.lo; });
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (!(remaining[i].length() > a)) {
      Fail(ErrorKind::kPrecondition, "segment (" + ToString(remaining[i].lo) + ", " +
                                         ToString(remaining[i].hi) + ") is not longer than a");
    }
    if (i > 0 && remaining[i].lo < remaining[i - 1].hi)
      Fail(ErrorKind::kPrecondition, "segments must be pairwise disjoint");
  }
  std::vector<OpenSegment> chosen;
  while (!remaining.empty()) {
    std::size_t pick = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i)
      if (remaining[i].length() > remaining[pick].length()) pick = i;
    OpenSegment taken = remaining[pick];
    chosen.push_back(taken);
    std::vector<OpenSegment> kept;
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (i != pick && SegmentGap(taken, remaining[i]) > a) kept.push_back(remaining[i]);
    remaining = std::move(kept);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const OpenSegment& x, const OpenSegment& y) { return x.lo < y.lo; });
  return chosen;
}

}  // namespace bigonlab
