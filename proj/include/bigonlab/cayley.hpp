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
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigonlab/presentation.hpp"
#include "bigonlab/rational.hpp"
#include "bigonlab/wordproblem.hpp"

namespace bigonlab {

using VertexId = std::int32_t;
constexpr VertexId kNoVertex = -1;

/// Vertex sequence v0..vl of a path; geodesic when dist(v0, vl) = l.
struct GeodesicPath {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  VertexId operator[](std::size_t i) const { return vertices[i]; }

  friend bool operator==(const GeodesicPath&, const GeodesicPath&) = default;
  friend auto operator<=>(const GeodesicPath&, const GeodesicPath&) = default;
};

struct BallOptions {
  /// Trust-region radius. Defaults to radius / 3. Cayley balls with a
  /// canonical word-problem strategy accept any core with 2*core+1 <= radius.
  std::optional<int> core_radius;
  std::size_t vertex_cap = 6'000'000;
  /// Build from an uncertified strategy; the ball is then marked uncertified.
  bool allow_uncertified = false;
};

enum class TrustPolicy {
  kTrustRegion,     // refuse unless both endpoints are in the trust region
  kAllowUntrusted,  // answer anyway; `exact` reports whether it is certified
};

struct DistanceResult {
  int value = 0;
  bool exact = false;
};

/// A finite ball of a Cayley graph, or an ingested finite graph, with exact
/// distance queries inside a trust region. Immutable after construction and
/// safe to share across threads; copies share storage.
///
/// Vertex ids are assigned in canonical label order (shortlex normal forms
/// for Cayley balls, numeric ids for ingested graphs), so comparing ids
/// compares labels.
class GraphBall {
 public:
  bool is_cayley() const;
  int vertex_count() const;
  std::size_t edge_count() const;
  VertexId base() const;
  int radius() const;
  int core_radius() const;
  bool certified() const;
  /// True when distances use the group structure (canonical normal forms).
  bool translation_backed() const;

  /// Breadth-first layer: dist(base, v).
  int layer(VertexId v) const;
  bool InCore(VertexId v) const { return layer(v) <= core_radius(); }
  /// Neighbors in ascending id order.
  std::span<const VertexId> neighbors(VertexId v) const;
  /// Vertices with layer <= core_radius, ascending.
  const std::vector<VertexId>& CoreVertices() const;
  /// Per-layer vertex counts 0..radius.
  std::vector<std::size_t> SphereSizes() const;

  std::string Label(VertexId v) const;

  // Cayley-only accessors. They throw kPrecondition on ingested graphs.
  const Presentation& presentation() const;
  const Strategy& strategy() const;
  Word LabelWord(VertexId v) const;
  /// Neighbor v*x, or kNoVertex when it lies outside the ball.
  VertexId Step(VertexId v, Letter x) const;
  /// Generator letter x with Step(u, x) == v.
  std::optional<Letter> EdgeLetter(VertexId u, VertexId v) const;
  /// Vertex equal to the group element w, if it lies in the ball.
  std::optional<VertexId> Find(const Word& w) const;
  /// Vertex reached by reading `w` from `start`; nullopt if it leaves the ball.
  std::optional<VertexId> Walk(VertexId start, const Word& w) const;

  // Ingested-only.
  std::optional<VertexId> FindExternal(long id) const;

  /// Distance query under the trust-region rule (see TrustPolicy).
  DistanceResult Distance(VertexId u, VertexId v,
                          TrustPolicy policy = TrustPolicy::kTrustRegion) const;
  /// Exact graph distance or kRefused ("untrusted distance").
  int TrustedDistance(VertexId u, VertexId v) const;
  /// Exact distance when it can be certified.
  std::optional<int> CertifiedDistance(VertexId u, VertexId v) const;
  /// Plain breadth-first distance inside the ball (no certification).
  int InBallDistance(VertexId u, VertexId v) const;

  struct Data;

 private:
  explicit GraphBall(std::shared_ptr<Data> data) : data_(std::move(data)) {}
  friend GraphBall BuildBall(const Presentation&, const Strategy&, int, const BallOptions&);
  friend GraphBall IngestGraph(std::string_view, long, std::optional<int>);

  std::shared_ptr<Data> data_;
};

/// Ball of the given radius around the identity of the Cayley graph.
/// Refuses (kRefused) for uncertified strategies unless allowed, and when the
/// vertex count exceeds the cap.
GraphBall BuildBall(const Presentation& p, const Strategy& s, int radius,
                    const BallOptions& options = {});

/// Finite graph from edge-list text ("u v" per line, '#' comments).
GraphBall IngestGraph(std::string_view edges, long base,
                      std::optional<int> core_radius = std::nullopt);

struct GeodesicSet {
  std::vector<GeodesicPath> paths;
  bool truncated = false;
};

/// All geodesics from u to v in lexicographic order of their vertex-id
/// sequences, at most `limit` of them. Both endpoints must be in the core.
GeodesicSet EnumerateGeodesics(const GraphBall& ball, VertexId u, VertexId v,
                               std::size_t limit = 1'000'000);

/// Path obtained by reading `w` from `start` (Cayley balls only).
GeodesicPath PathFromWord(const GraphBall& ball, VertexId start, const Word& w);
/// Letters along a path (Cayley balls only).
Word PathWord(const GraphBall& ball, const GeodesicPath& path);
/// Unit steps and dist(front, back) == length.
bool IsGeodesic(const GraphBall& ball, const GeodesicPath& path);

using Quadruple = std::array<VertexId, 4>;

/// Smallest delta for which the four-point condition holds on every listed
/// quadruple. Half-integral. Throws kInvalidArgument on an empty sample.
Rational GromovDelta(const GraphBall& ball, const std::vector<Quadruple>& sample,
                     int jobs = 1);
/// Same, over all quadruples drawn from `vertices` (repetition allowed, so a
/// single vertex gives 0).
Rational GromovDeltaOver(const GraphBall& ball, const std::vector<VertexId>& vertices,
                         int jobs = 1);

}  // namespace bigonlab
