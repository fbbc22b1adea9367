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

#include "bigonlab/cayley.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "bigonlab/error.hpp"
#include "bigonlab/parallel.hpp"

namespace bigonlab {

namespace {

constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();
// Above this many vertices the all-pairs table is not materialized.
constexpr int kDenseLimit = 6000;
constexpr std::size_t kRowCacheLimit = 256;

std::string Key(const Word& w) {
  return std::string(w.begin(), w.end());
}

}  // namespace

struct GraphBall::Data {
  bool cayley = false;
  Presentation presentation;
  std::optional<Strategy> strategy;
  int radius = 0;
  int core = 0;
  bool certified = true;
  bool translation = false;
  int letters = 0;
  VertexId base_id = 0;

  std::vector<int> layer;
  std::vector<VertexId> step;  // vertex * letters + x
  std::vector<VertexId> parent;
  std::vector<Letter> parent_letter;
  std::unordered_map<std::string, VertexId> index;  // label word -> vertex

  std::vector<std::size_t> adj_offset;
  std::vector<VertexId> adj;
  std::vector<long> external;  // ingested ids, ascending
  std::vector<VertexId> core_vertices;

  std::once_flag dense_once;
  std::vector<std::uint16_t> dense;
  std::mutex row_mu;
  std::map<VertexId, std::shared_ptr<const std::vector<std::uint16_t>>> rows;

  int n() const { return static_cast<int>(layer.size()); }

  std::vector<std::uint16_t> Bfs(VertexId source) const {
    std::vector<std::uint16_t> dist(layer.size(), kUnreached);
    std::vector<VertexId> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (std::size_t k = adj_offset[v]; k < adj_offset[v + 1]; ++k) {
        VertexId w = adj[k];
        if (dist[w] == kUnreached) {
          dist[w] = static_cast<std::uint16_t>(dist[v] + 1);
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  const std::vector<std::uint16_t>* Dense() {
    if (n() > kDenseLimit) return nullptr;
    std::call_once(dense_once, [this] {
      std::size_t count = layer.size();
      dense.assign(count * count, kUnreached);
      for (std::size_t s = 0; s < count; ++s) {
        auto row = Bfs(static_cast<VertexId>(s));
        std::copy(row.begin(), row.end(), dense.begin() + s * count);
      }
    });
    return &dense;
  }

  std::shared_ptr<const std::vector<std::uint16_t>> Row(VertexId source) {
    std::lock_guard<std::mutex> lock(row_mu);
    auto it = rows.find(source);
    if (it != rows.end()) return it->second;
    if (rows.size() >= kRowCacheLimit) rows.erase(rows.begin());
    auto row = std::make_shared<const std::vector<std::uint16_t>>(Bfs(source));
    rows.emplace(source, row);
    return row;
  }

  int InBall(VertexId u, VertexId v) {
    std::uint16_t d;
    if (const auto* table = Dense()) {
      d = (*table)[static_cast<std::size_t>(u) * layer.size() + v];
    } else {
      d = (*Row(u))[v];
    }
    if (d == kUnreached) Fail(ErrorKind::kPrecondition, "vertices are not connected");
    return d;
  }

  Word LabelWord(VertexId v) const {
    std::vector<Letter> letters;
    while (parent[v] != kNoVertex) {
      letters.push_back(parent_letter[v]);
      v = parent[v];
    }
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
  }

  void CollectCore() {
    for (VertexId v = 0; v < n(); ++v)
      if (layer[v] <= core) core_vertices.push_back(v);
  }

  void BuildAdjacencyFromSteps() {
    adj_offset.assign(layer.size() + 1, 0);
    adj.clear();
    for (std::size_t v = 0; v < layer.size(); ++v) {
      std::vector<VertexId> around;
      for (int x = 0; x < letters; ++x) {
        VertexId w = step[v * letters + x];
        if (w != kNoVertex) around.push_back(w);
      }
      std::sort(around.begin(), around.end());
      around.erase(std::unique(around.begin(), around.end()), around.end());
      adj.insert(adj.end(), around.begin(), around.end());
      adj_offset[v + 1] = adj.size();
    }
  }
};

bool GraphBall::is_cayley() const { return data_->cayley; }
int GraphBall::vertex_count() const { return data_->n(); }
std::size_t GraphBall::edge_count() const { return data_->adj.size() / 2; }
VertexId GraphBall::base() const { return data_->base_id; }
int GraphBall::radius() const { return data_->radius; }
int GraphBall::core_radius() const { return data_->core; }
bool GraphBall::certified() const { return data_->certified; }
bool GraphBall::translation_backed() const { return data_->translation; }
int GraphBall::layer(VertexId v) const { return data_->layer[v]; }

std::span<const VertexId> GraphBall::neighbors(VertexId v) const {
  const auto& d = *data_;
  return std::span<const VertexId>(d.adj.data() + d.adj_offset[v],
                                   d.adj_offset[v + 1] - d.adj_offset[v]);
}

const std::vector<VertexId>& GraphBall::CoreVertices() const { return data_->core_vertices; }

std::vector<std::size_t> GraphBall::SphereSizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(radius()) + 1, 0);
  for (int l : data_->layer) ++sizes[l];
  return sizes;
}

std::string GraphBall::Label(VertexId v) const {
  if (data_->cayley) return data_->presentation.Format(data_->LabelWord(v));
  return std::to_string(data_->external[v]);
}

namespace {
void RequireCayley(const GraphBall& ball) {
  if (!ball.is_cayley()) Fail(ErrorKind::kPrecondition, "operation needs a Cayley ball");
}
}  // namespace

const Presentation& GraphBall::presentation() const {
  RequireCayley(*this);
  return data_->presentation;
}

const Strategy& GraphBall::strategy() const {
  RequireCayley(*this);
  return *data_->strategy;
}

Word GraphBall::LabelWord(VertexId v) const {
  RequireCayley(*this);
  return data_->LabelWord(v);
}

VertexId GraphBall::Step(VertexId v, Letter x) const {
  RequireCayley(*this);
  return data_->step[static_cast<std::size_t>(v) * data_->letters + x];
}

std::optional<Letter> GraphBall::EdgeLetter(VertexId u, VertexId v) const {
  RequireCayley(*this);
  for (int x = 0; x < data_->letters; ++x)
    if (Step(u, static_cast<Letter>(x)) == v) return static_cast<Letter>(x);
  return std::nullopt;
}

std::optional<VertexId> GraphBall::Walk(VertexId start, const Word& w) const {
  VertexId cur = start;
  for (Letter x : w) {
    cur = Step(cur, x);
    if (cur == kNoVertex) return std::nullopt;
  }
  return cur;
}

std::optional<VertexId> GraphBall::Find(const Word& w) const {
  RequireCayley(*this);
  if (data_->strategy->kind() == StrategyKind::kDehnGreedy) {
    // Dehn output is not canonical; reading the reduced word is exact as
    // long as it stays inside the ball.
    return Walk(base(), data_->strategy->NormalForm(w));
  }
  Word nf = data_->strategy->NormalForm(w);
  auto it = data_->index.find(Key(nf));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> GraphBall::FindExternal(long id) const {
  if (data_->cayley) Fail(ErrorKind::kPrecondition, "operation needs an ingested graph");
  auto it = std::lower_bound(data_->external.begin(), data_->external.end(), id);
  if (it == data_->external.end() || *it != id) return std::nullopt;
  return static_cast<VertexId>(it - data_->external.begin());
}

int GraphBall::InBallDistance(VertexId u, VertexId v) const { return data_->InBall(u, v); }

std::optional<int> GraphBall::CertifiedDistance(VertexId u, VertexId v) const {
  auto& d = *data_;
  if (u == v) return 0;
  if (!d.cayley) return d.InBall(u, v);
  if (d.n() <= kDenseLimit || !d.translation) {
    int in_ball = d.InBall(u, v);
    // Every geodesic between u and v stays within (|u| + |v| + dist) / 2.
    if (d.layer[u] + d.layer[v] + in_ball <= 2 * d.radius) return in_ball;
  }
  if (d.translation) {
    // Shortlex normal forms are geodesic words.
    Word nf = d.strategy->NormalForm(Invert(d.LabelWord(u)) + d.LabelWord(v));
    return static_cast<int>(nf.size());
  }
  return std::nullopt;
}

int GraphBall::TrustedDistance(VertexId u, VertexId v) const {
  auto d = CertifiedDistance(u, v);
  if (!d) {
    Fail(ErrorKind::kRefused, "untrusted distance between " + Label(u) + " and " +
                                  Label(v) + " (outside the trust region)");
  }
  return *d;
}

DistanceResult GraphBall::Distance(VertexId u, VertexId v, TrustPolicy policy) const {
  if (!data_->cayley || (InCore(u) && InCore(v))) return {TrustedDistance(u, v), true};
  if (policy == TrustPolicy::kTrustRegion) {
    Fail(ErrorKind::kRefused, "untrusted distance: " + Label(u) + " or " + Label(v) +
                                  " lies outside core radius " +
                                  std::to_string(core_radius()));
  }
  if (auto d = CertifiedDistance(u, v)) return {*d, true};
  return {InBallDistance(u, v), false};
}

// ---------------------------------------------------------------------------
// Construction

namespace {

std::vector<int> ExponentSums(const Word& w, int generators) {
  std::vector<int> sums(generators, 0);
  for (Letter x : w) sums[GeneratorOf(x)] += IsInverse(x) ? -1 : 1;
  return sums;
}

int ResolveCore(std::optional<int> requested, int radius, bool translation) {
  int core = requested.value_or(radius / 3);
  if (core < 0) Fail(ErrorKind::kInvalidArgument, "core radius must be >= 0");
  bool ok = translation ? (core == 0 || 2 * core + 1 <= radius) : 3 * core <= radius;
  if (!ok) {
    Fail(ErrorKind::kInvalidArgument,
         "core radius " + std::to_string(core) + " too large for radius " +
             std::to_string(radius) +
             (translation ? " (need 2*core+1 <= radius)" : " (need 3*core <= radius)"));
  }
  return core;
}

void CheckCap(std::size_t count, const BallOptions& options, int layer) {
  if (count > options.vertex_cap) {
    Fail(ErrorKind::kRefused, "vertex cap " + std::to_string(options.vertex_cap) +
                                  " exceeded while building layer " + std::to_string(layer) +
                                  " (" + std::to_string(count) + " vertices so far)");
  }
}

}  // namespace

GraphBall BuildBall(const Presentation& p, const Strategy& s, int radius,
                    const BallOptions& options) {
  if (radius < 0) Fail(ErrorKind::kInvalidArgument, "radius must be >= 0");
  if (radius >= kUnreached) Fail(ErrorKind::kInvalidArgument, "radius too large");
  if (!s.certified() && !options.allow_uncertified) {
    Fail(ErrorKind::kRefused, "strategy " + s.Describe() +
                                  " is not certified; pass allow_uncertified to explore anyway");
  }
  auto data = std::make_shared<GraphBall::Data>();
  auto& d = *data;
  d.cayley = true;
  d.presentation = p;
  d.strategy = s;
  d.radius = radius;
  d.certified = s.certified();
  d.translation = s.canonical();
  d.letters = p.letter_count();
  d.core = ResolveCore(options.core_radius, radius, d.translation);

  const int letters = d.letters;
  d.layer.push_back(0);
  d.parent.push_back(kNoVertex);
  d.parent_letter.push_back(0);
  d.index.emplace(std::string(), 0);
  d.step.assign(letters, kNoVertex);
  std::vector<Word> labels{Word()};
  bool dehn = s.kind() == StrategyKind::kDehnGreedy;

  // Dehn: equality needs a full test; bucket candidates by exponent sums
  // when every relator has zero exponent sums (then they are invariants).
  bool sums_invariant = true;
  for (const Word& r : p.relators())
    for (int e : ExponentSums(r, p.generator_count())) sums_invariant &= e == 0;
  std::map<std::vector<int>, std::vector<VertexId>> buckets;
  if (dehn) buckets[std::vector<int>(sums_invariant ? p.generator_count() : 0, 0)].push_back(0);

  std::size_t layer_begin = 0;
  for (int k = 0; k < radius; ++k) {
    std::size_t layer_end = d.layer.size();
    for (std::size_t v = layer_begin; v < layer_end; ++v) {
      for (int xi = 0; xi < letters; ++xi) {
        Letter x = static_cast<Letter>(xi);
        VertexId found = kNoVertex;
        Word candidate;
        if (!dehn) {
          candidate = s.NormalFormAppend(labels[v], x);
          auto it = d.index.find(Key(candidate));
          if (it != d.index.end()) found = it->second;
        } else {
          candidate = FreeReduce(labels[v] + Word{x});
          auto sums = sums_invariant ? ExponentSums(candidate, p.generator_count())
                                     : std::vector<int>();
          for (VertexId w : buckets[sums]) {
            if (d.layer[w] + 1 < k) continue;
            if (WordsEqual(s, labels[w], candidate)) {
              found = w;
              break;
            }
          }
          if (found == kNoVertex) {
            candidate = labels[v] + Word{x};
            buckets[sums].push_back(static_cast<VertexId>(d.layer.size()));
          }
        }
        if (found == kNoVertex) {
          found = static_cast<VertexId>(d.layer.size());
          d.layer.push_back(k + 1);
          d.parent.push_back(static_cast<VertexId>(v));
          d.parent_letter.push_back(x);
          labels.push_back(dehn ? labels[v] + Word{x} : candidate);
          if (!dehn) d.index.emplace(Key(candidate), found);
          d.step.resize(d.step.size() + letters, kNoVertex);
          CheckCap(d.layer.size(), options, k + 1);
        }
        d.step[v * letters + x] = found;
        d.step[static_cast<std::size_t>(found) * letters + Inverse(x)] = static_cast<VertexId>(v);
      }
    }
    layer_begin = layer_end;
  }
  // Outer layer: edges back into the ball.
  for (std::size_t v = layer_begin; v < d.layer.size() && radius > 0; ++v) {
    for (int xi = 0; xi < letters; ++xi) {
      Letter x = static_cast<Letter>(xi);
      if (d.step[v * letters + x] != kNoVertex) continue;
      if (!dehn) {
        auto it = d.index.find(Key(s.NormalFormAppend(labels[v], x)));
        if (it != d.index.end()) d.step[v * letters + x] = it->second;
      } else {
        Word candidate = FreeReduce(labels[v] + Word{x});
        auto sums = sums_invariant ? ExponentSums(candidate, p.generator_count())
                                   : std::vector<int>();
        for (VertexId w : buckets[sums]) {
          if (d.layer[w] + 1 < radius) continue;
          if (WordsEqual(s, labels[w], candidate)) {
            d.step[v * letters + x] = w;
            break;
          }
        }
      }
    }
  }
  if (dehn) {
    for (std::size_t v = 0; v < labels.size(); ++v) d.index.emplace(Key(labels[v]), v);
  }
  d.BuildAdjacencyFromSteps();
  d.CollectCore();
  return GraphBall(std::move(data));
}

GraphBall IngestGraph(std::string_view edges, long base, std::optional<int> core_radius) {
  std::vector<std::pair<long, long>> pairs;
  std::set<std::pair<long, long>> seen;
  std::istringstream in{std::string(edges)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long a, b;
    if (!(fields >> a)) continue;
    std::string rest;
    if (!(fields >> b) || (fields >> rest)) {
      Fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    if (a == b) {
      Fail(ErrorKind::kInvalidArgument,
           "line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(a));
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      Fail(ErrorKind::kInvalidArgument, "line " + std::to_string(line_no) + ": duplicate edge " +
                                            std::to_string(a) + " " + std::to_string(b));
    }
    pairs.emplace_back(a, b);
  }
  auto data = std::make_shared<GraphBall::Data>();
  auto& d = *data;
  for (auto [a, b] : pairs) {
    d.external.push_back(a);
    d.external.push_back(b);
  }
  if (pairs.empty()) d.external.push_back(base);
  std::sort(d.external.begin(), d.external.end());
  d.external.erase(std::unique(d.external.begin(), d.external.end()), d.external.end());
  if (d.external.size() >= static_cast<std::size_t>(std::numeric_limits<VertexId>::max()))
    Fail(ErrorKind::kInvalidArgument, "graph too large");
  auto id_of = [&](long e) {
    return static_cast<VertexId>(std::lower_bound(d.external.begin(), d.external.end(), e) -
                                 d.external.begin());
  };
  if (!std::binary_search(d.external.begin(), d.external.end(), base))
    Fail(ErrorKind::kInvalidArgument, "base vertex " + std::to_string(base) + " not in graph");

  std::vector<std::vector<VertexId>> around(d.external.size());
  for (auto [a, b] : pairs) {
    around[id_of(a)].push_back(id_of(b));
    around[id_of(b)].push_back(id_of(a));
  }
  d.adj_offset.assign(around.size() + 1, 0);
  for (std::size_t v = 0; v < around.size(); ++v) {
    std::sort(around[v].begin(), around[v].end());
    d.adj.insert(d.adj.end(), around[v].begin(), around[v].end());
    d.adj_offset[v + 1] = d.adj.size();
  }
  d.layer.assign(around.size(), 0);
  VertexId base_id = id_of(base);
  auto dist = d.Bfs(base_id);
  int radius = 0;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] == kUnreached) {
      Fail(ErrorKind::kInvalidArgument, "graph is disconnected: vertex " +
                                            std::to_string(d.external[v]) +
                                            " is unreachable from base");
    }
    d.layer[v] = dist[v];
    radius = std::max<int>(radius, dist[v]);
  }
  d.cayley = false;
  d.radius = radius;
  d.core = core_radius.value_or(radius / 3);
  if (d.core < 0) Fail(ErrorKind::kInvalidArgument, "core radius must be >= 0");
  d.certified = true;
  d.base_id = base_id;
  d.CollectCore();
  return GraphBall(std::move(data));
}

// ---------------------------------------------------------------------------
// Geodesics

namespace {

class GeodesicWalker {
 public:
  GeodesicWalker(std::size_t limit, GeodesicSet& out) : limit_(limit), out_(out) {}

  // Returns false once the limit is hit.
  bool Emit(const std::vector<VertexId>& path) {
    if (out_.paths.size() >= limit_) {
      out_.truncated = true;
      return false;
    }
    out_.paths.push_back(GeodesicPath{path});
    return true;
  }

 private:
  std::size_t limit_;
  GeodesicSet& out_;
};

}  // namespace

GeodesicSet EnumerateGeodesics(const GraphBall& ball, VertexId u, VertexId v, std::size_t limit) {
  GeodesicSet out;
  if (!ball.InCore(u) || !ball.InCore(v)) {
    Fail(ErrorKind::kRefused, "geodesic endpoints must lie in the core: " + ball.Label(u) +
                                  ", " + ball.Label(v));
  }
  const int length = ball.TrustedDistance(u, v);
  GeodesicWalker walker(limit, out);
  std::vector<VertexId> path{u};

  if (ball.translation_backed()) {
    // Geodesics u -> v are u * (geodesics e -> g), g = u^-1 v. Collect the
    // interval {h : |h| + |h^-1 g| = |g|} by walking predecessors back from g.
    auto g = ball.Find(Invert(ball.LabelWord(u)) + ball.LabelWord(v));
    if (!g) Fail(ErrorKind::kRefused, "translate of the endpoints leaves the ball");
    const int letters = ball.presentation().letter_count();
    std::vector<VertexId> interval{*g};
    std::vector<VertexId> frontier{*g};
    while (!frontier.empty()) {
      std::vector<VertexId> next;
      for (VertexId h : frontier) {
        for (int x = 0; x < letters; ++x) {
          VertexId q = ball.Step(h, static_cast<Letter>(x));
          if (q != kNoVertex && ball.layer(q) + 1 == ball.layer(h)) next.push_back(q);
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      interval.insert(interval.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    std::sort(interval.begin(), interval.end());
    auto in_interval = [&](VertexId h) {
      return std::binary_search(interval.begin(), interval.end(), h);
    };
    std::function<bool(VertexId, VertexId)> dfs = [&](VertexId cur, VertexId h) -> bool {
      if (static_cast<int>(path.size()) == length + 1) return walker.Emit(path);
      std::vector<std::pair<VertexId, VertexId>> moves;  // (translated, base-relative)
      for (int x = 0; x < letters; ++x) {
        VertexId h_next = ball.Step(h, static_cast<Letter>(x));
        if (h_next == kNoVertex || !in_interval(h_next) || ball.layer(h_next) != ball.layer(h) + 1)
          continue;
        VertexId q = ball.Step(cur, static_cast<Letter>(x));
        if (q == kNoVertex) Fail(ErrorKind::kRefused, "geodesic leaves the ball");
        moves.emplace_back(q, h_next);
      }
      std::sort(moves.begin(), moves.end());
      moves.erase(std::unique(moves.begin(), moves.end(),
                              [](auto& a, auto& b) { return a.first == b.first; }),
                  moves.end());
      for (auto [q, h_next] : moves) {
        path.push_back(q);
        bool more = dfs(q, h_next);
        path.pop_back();
        if (!more) return false;
      }
      return true;
    };
    dfs(u, ball.base());
    return out;
  }

  // Generic: step to neighbors that are one closer to v.
  std::vector<int> to_target(ball.vertex_count());
  for (VertexId q = 0; q < ball.vertex_count(); ++q) to_target[q] = ball.InBallDistance(q, v);
  std::function<bool(VertexId)> dfs = [&](VertexId cur) -> bool {
    if (cur == v) return walker.Emit(path);
    for (VertexId q : ball.neighbors(cur)) {
      if (to_target[q] + 1 != to_target[cur]) continue;
      path.push_back(q);
      bool more = dfs(q);
      path.pop_back();
      if (!more) return false;
    }
    return true;
  };
  dfs(u);
  return out;
}

GeodesicPath PathFromWord(const GraphBall& ball, VertexId start, const Word& w) {
  GeodesicPath path{{start}};
  for (Letter x : w) {
    VertexId next = ball.Step(path.back(), x);
    if (next == kNoVertex) Fail(ErrorKind::kRefused, "path leaves the ball");
    path.vertices.push_back(next);
  }
  return path;
}

Word PathWord(const GraphBall& ball, const GeodesicPath& path) {
  Word w;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    auto x = ball.EdgeLetter(path[i], path[i + 1]);
    if (!x) Fail(ErrorKind::kPrecondition, "consecutive path vertices are not adjacent");
    w.push_back(*x);
  }
  return w;
}

bool IsGeodesic(const GraphBall& ball, const GeodesicPath& path) {
  if (path.vertices.empty()) return false;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    auto around = ball.neighbors(path[i]);
    if (!std::binary_search(around.begin(), around.end(), path[i + 1])) return false;
  }
  return ball.TrustedDistance(path.front(), path.back()) == static_cast<int>(path.length());
}

// ---------------------------------------------------------------------------
// Four-point condition

namespace {

// Twice the four-point defect: largest pair sum minus the second largest.
int DoubledDefect(int s1, int s2, int s3) {
  int hi = std::max({s1, s2, s3});
  int lo = std::min({s1, s2, s3});
  int mid = s1 + s2 + s3 - hi - lo;
  return hi - mid;
}

}  // namespace

Rational GromovDelta(const GraphBall& ball, const std::vector<Quadruple>& sample, int jobs) {
  if (sample.empty()) Fail(ErrorKind::kInvalidArgument, "empty quadruple sample");
  std::vector<int> worst(sample.size(), 0);
  ParallelFor(sample.size(), jobs, [&](std::size_t i) {
    auto [x, y, z, w] = sample[i];
    auto d = [&](VertexId a, VertexId b) { return ball.TrustedDistance(a, b); };
    worst[i] = DoubledDefect(d(x, y) + d(z, w), d(x, z) + d(y, w), d(x, w) + d(y, z));
  });
  Rational delta(*std::max_element(worst.begin(), worst.end()), 2);
  delta.canonicalize();
  return delta;
}

Rational GromovDeltaOver(const GraphBall& ball, const std::vector<VertexId>& vertices, int jobs) {
  if (vertices.empty()) Fail(ErrorKind::kInvalidArgument, "empty vertex sample");
  const std::size_t m = vertices.size();
  std::vector<int> dist(m * m, 0);
  ParallelFor(m, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) dist[i * m + j] = ball.TrustedDistance(vertices[i], vertices[j]);
  });
  // Repeated points never raise the defect, so distinct 4-subsets suffice.
  std::vector<int> worst(m, 0);
  ParallelFor(m, jobs, [&](std::size_t i) {
    int best = 0;
    const int* di = &dist[i * m];
    for (std::size_t j = i + 1; j < m; ++j) {
      const int* dj = &dist[j * m];
      for (std::size_t k = j + 1; k < m; ++k) {
        const int* dk = &dist[k * m];
        for (std::size_t l = k + 1; l < m; ++l) {
          best = std::max(best, DoubledDefect(di[j] + dk[l], di[k] + dj[l], di[l] + dj[k]));
        }
      }
    }
    worst[i] = best;
  });
  Rational delta(*std::max_element(worst.begin(), worst.end()), 2);
  delta.canonicalize();
  return delta;
}

}  // namespace bigonlab
