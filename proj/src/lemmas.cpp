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

#include "bigonlab/lemmas.hpp"

#include <algorithm>
#include <random>

#include "bigonlab/error.hpp"
#include "bigonlab/parallel.hpp"

namespace bigonlab {

void SuiteReport::Merge(const SuiteReport& later) {
  if (violations == 0 && later.violations > 0) first_violation = later.first_violation;
  checks += later.checks;
  violations += later.violations;
}

namespace {

std::string DescribePath(const GraphBall& ball, const GeodesicPath& path) {
  if (ball.is_cayley()) {
    return "[" + ball.Label(path.front()) + "]" + ball.presentation().Format(PathWord(ball, path));
  }
  std::string out;
  for (VertexId v : path.vertices) out += (out.empty() ? "" : "-") + ball.Label(v);
  return out;
}

std::string DescribeBand(const GraphBall& ball, const Band& band) {
  return "{" + DescribePath(ball, band.side0) + ", " + DescribePath(ball, band.side1) + "}";
}

// Widths and cross distances d(side0(t), side1(t')) of a fork.
struct Fork {
  Band band;
  std::vector<int> width;
  std::vector<int> cross;  // row-major (l+1) x (l+1), filled for t <= t'
  std::size_t size = 0;

  Fork(const GraphBall& ball, Band b) : band(std::move(b)) {
    size = band.side0.vertices.size();
    width = ComputeWidthProfile(ball, band).values;
    cross.assign(size * size, 0);
    for (std::size_t t = 0; t < size; ++t)
      for (std::size_t u = t; u < size; ++u)
        cross[t * size + u] = ball.TrustedDistance(band.side0[t], band.side1[u]);
  }

  int Rank(int p, std::size_t t, std::size_t u) const {
    return static_cast<int>(u - t) + p - cross[t * size + u];
  }

  // Indices t with width p, ascending.
  std::vector<std::size_t> Jumpers(int p) const {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < size; ++t)
      if (width[t] == p) out.push_back(t);
    return out;
  }

  std::vector<int> Values() const {
    std::vector<int> v = width;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }
};

template <typename PerFork>
SuiteReport OverForks(const GraphBall& ball, const std::vector<Band>& bigons, int jobs,
                      const std::string& name, PerFork&& per_fork) {
  std::vector<SuiteReport> parts(bigons.size());
  ParallelFor(bigons.size(), jobs, [&](std::size_t i) {
    for (const Band& oriented : {bigons[i], bigons[i].Swapped()}) {
      if (!IsFork(ball, oriented)) Fail(ErrorKind::kPrecondition, "band is not a fork");
      per_fork(Fork(ball, oriented), parts[i]);
    }
  });
  SuiteReport total;
  total.name = name;
  for (const auto& part : parts) total.Merge(part);
  return total;
}

}  // namespace

SuiteReport CheckRankMonotonicity(const GraphBall& ball, const std::vector<Band>& bigons, int jobs) {
  return OverForks(ball, bigons, jobs, "rank_monotonicity", [&](const Fork& f, SuiteReport& r) {
    for (int p : f.Values()) {
      auto jumpers = f.Jumpers(p);
      const std::size_t n = jumpers.size();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
          int outer = f.Rank(p, jumpers[a], jumpers[b]);
          for (std::size_t c = a; c < b; ++c)
            for (std::size_t d = c + 1; d <= b; ++d) {
              int inner = f.Rank(p, jumpers[c], jumpers[d]);
              r.Record(outer >= inner, [&] {
                return DescribeBand(ball, f.band) + " p=" + std::to_string(p) + " rk[" +
                       std::to_string(jumpers[a]) + "," + std::to_string(jumpers[b]) + "]=" +
                       std::to_string(outer) + " < rk[" + std::to_string(jumpers[c]) + "," +
                       std::to_string(jumpers[d]) + "]=" + std::to_string(inner);
              });
            }
        }
    }
  });
}

SuiteReport CheckRankBounds(const GraphBall& ball, const std::vector<Band>& bigons, int jobs) {
  return OverForks(ball, bigons, jobs, "rank_bounds", [&](const Fork& f, SuiteReport& r) {
    for (int p : f.Values()) {
      auto jumpers = f.Jumpers(p);
      for (std::size_t a = 0; a < jumpers.size(); ++a)
        for (std::size_t b = a + 1; b < jumpers.size(); ++b) {
          int rank = f.Rank(p, jumpers[a], jumpers[b]);
          r.Record(rank >= 0 && rank <= 1 + p, [&] {
            return DescribeBand(ball, f.band) + " p=" + std::to_string(p) + " rk[" +
                   std::to_string(jumpers[a]) + "," + std::to_string(jumpers[b]) +
                   "]=" + std::to_string(rank);
          });
        }
    }
  });
}

SuiteReport CheckRankDecay(const GraphBall& ball, const std::vector<Band>& bigons, int y,
                           const Rational& theta, int jobs) {
  return OverForks(ball, bigons, jobs, "rank_decay", [&](const Fork& f, SuiteReport& r) {
    const int small = 2 * y + 1;
    for (int p : f.Values()) {
      auto jumpers = f.Jumpers(p);
      const std::size_t n = jumpers.size();
      for (std::size_t i0 = 0; i0 < n; ++i0)
        for (std::size_t i1 = i0 + 1; i1 < n; ++i1) {
          const std::size_t t0 = jumpers[i0], t1 = jumpers[i1];
          const int m = f.Rank(p, t0, t1);
          for (std::size_t i2 = i1; i2 < n; ++i2)
            for (std::size_t i3 = i2 + 1; i3 < n; ++i3) {
              const std::size_t t2 = jumpers[i2], t3 = jumpers[i3];
              if (f.Rank(p, t2, t3) != m) continue;
              Rational needed = theta * Rational(static_cast<long>(t3 - t0)) + (1 + theta) * p;
              if (Rational(static_cast<long>(t2 - t1)) < needed) continue;
              bool meets_small = false;
              for (std::size_t t = t1; t <= t2; ++t) meets_small |= f.width[t] <= small;
              bool grows = f.Rank(p, t0, t3) >= m + 1;
              r.Record(meets_small || grows, [&] {
                return DescribeBand(ball, f.band) + " p=" + std::to_string(p) + " t=(" +
                       std::to_string(t0) + "," + std::to_string(t1) + "," + std::to_string(t2) +
                       "," + std::to_string(t3) + ") m=" + std::to_string(m);
              });
            }
        }
    }
  });
}

SuiteReport CheckSubadditivity(const GraphBall& ball, int radius, int max_threshold, int jobs) {
  if (radius > ball.core_radius())
    Fail(ErrorKind::kInvalidArgument, "subadditivity radius exceeds the core radius");
  if (2 * radius > 62) Fail(ErrorKind::kInvalidArgument, "subadditivity radius too large");
  std::vector<VertexId> near;
  for (VertexId v : ball.CoreVertices())
    if (ball.layer(v) <= radius) near.push_back(v);
  std::vector<GeodesicPath> paths;
  for (VertexId u : near)
    for (VertexId v : near) {
      auto set = EnumerateGeodesics(ball, u, v);
      paths.insert(paths.end(), set.paths.begin(), set.paths.end());
    }
  const std::size_t g = paths.size();
  const int top = 2 * max_threshold;
  // masks[(i * g + j) * (top + 1) + x]: indices t <= min length with w_ij(t) > x.
  std::vector<std::uint64_t> masks(g * g * (top + 1), 0);
  ParallelFor(g, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < g; ++j) {
      std::size_t common = std::min(paths[i].length(), paths[j].length());
      for (std::size_t t = 0; t <= common; ++t) {
        int w = ball.TrustedDistance(paths[i][t], paths[j][t]);
        for (int x = 0; x <= top && x < w; ++x) masks[(i * g + j) * (top + 1) + x] |= 1ULL << t;
      }
    }
  });
  std::vector<SuiteReport> parts(g);
  ParallelFor(g, jobs, [&](std::size_t i) {
    SuiteReport& r = parts[i];
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k) {
        std::size_t common = std::min({paths[i].length(), paths[j].length(), paths[k].length()});
        std::uint64_t range = (common >= 63) ? ~0ULL : ((1ULL << (common + 1)) - 1);
        const std::uint64_t* ij = &masks[(i * g + j) * (top + 1)];
        const std::uint64_t* jk = &masks[(j * g + k) * (top + 1)];
        const std::uint64_t* ik = &masks[(i * g + k) * (top + 1)];
        for (int a = 0; a <= max_threshold; ++a)
          for (int b = 0; b <= max_threshold; ++b) {
            std::uint64_t outer = ik[a + b] & range;
            std::uint64_t inner = (ij[a] | jk[b]) & range;
            r.Record((outer & ~inner) == 0, [&] {
              return DescribePath(ball, paths[i]) + " / " + DescribePath(ball, paths[j]) + " / " +
                     DescribePath(ball, paths[k]) + " A=" + std::to_string(a) +
                     " B=" + std::to_string(b);
            });
          }
      }
  });
  SuiteReport total;
  total.name = "subadditivity";
  for (const auto& part : parts) total.Merge(part);
  return total;
}

DenseValueReport CheckDenseValues(const GraphBall& ball, const std::vector<Band>& bigons,
                                  const DenseValueParams& params) {
  DenseValueReport report;
  report.suite.name = "dense_values";
  const long a_side = 2L * params.y + 1;
  const long a = 2 * a_side;
  report.epsilon = params.lambda / Rational(a);
  report.r = DeriveR(report.epsilon, Rational(a), params.nu);

  std::vector<WidthProfile> profiles;
  int widest = 0;
  for (const Band& band : bigons) {
    profiles.push_back(ComputeWidthProfile(ball, band));
    for (int w : profiles.back().values) widest = std::max(widest, w);
  }
  // Smallest Z whose measured exceedance stays strictly below epsilon.
  report.z = widest;
  for (int z = 0; z <= widest; ++z) {
    bool holds = true;
    for (const auto& profile : profiles)
      if (!(ComputeExceedance(profile, z).ratio < report.epsilon)) {
        holds = false;
        break;
      }
    if (holds) {
      report.z = z;
      break;
    }
  }
  report.d = a * report.z + a_side;
  report.rho = (1 - params.nu) / Rational(report.d + 1);

  const long min_length = report.r.get_si();
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    // Sub-bands of a band are bands; both side orders share the profile.
    const auto& w = profiles[i].values;
    for (std::size_t s = 0; s < w.size(); ++s) {
      if (w[s] > a_side) continue;
      for (std::size_t e = s + static_cast<std::size_t>(std::max(min_length, 1L)); e < w.size(); ++e) {
        if (w[e] > a_side) continue;
        auto dense = DenseValues(profiles[i], s, e, static_cast<int>(report.d), report.rho);
        report.suite.Record(!dense.empty(), [&] {
          return DescribeBand(ball, bigons[i]) + " on [" + std::to_string(s) + "," +
                 std::to_string(e) + "]";
        });
      }
    }
  }
  return report;
}

Rational BestSeparatedTotal(const std::vector<OpenSegment>& segments, const Rational& a) {
  const std::size_t n = segments.size();
  if (n > 20) Fail(ErrorKind::kInvalidArgument, "exhaustive search limited to 20 segments");
  Rational best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Rational total = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      total += segments[i].length();
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> j & 1u) && !(SegmentGap(segments[i], segments[j]) > a)) ok = false;
    }
    if (ok && total > best) best = total;
  }
  return best;
}

SegmentLemmaReport CheckSegmentLemma(std::uint64_t seed, std::size_t trials, std::size_t max_segments) {
  SegmentLemmaReport report;
  report.suite.name = "segment_lemma";
  report.worst_input_fraction = 1;
  report.worst_optimum_fraction = 1;
  std::mt19937_64 rng(seed);
  auto quarter = [&](int lo, int hi) {
    return Rational(std::uniform_int_distribution<int>(lo, hi)(rng), 4);
  };
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_segments)(rng);
    Rational a = quarter(1, 8);
    std::vector<OpenSegment> input;
    Rational cursor = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rational lo = cursor + quarter(0, 12);
      Rational hi = lo + a + quarter(1, 16);
      input.push_back(OpenSegment{lo, hi});
      cursor = hi;
    }
    auto chosen = SelectSeparated(input, a);
    Rational input_total = 0, chosen_total = 0;
    for (const auto& s : input) input_total += s.length();
    for (const auto& s : chosen) chosen_total += s.length();
    bool subset = std::all_of(chosen.begin(), chosen.end(), [&](const OpenSegment& s) {
      return std::find(input.begin(), input.end(), s) != input.end();
    });
    bool separated = true;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        separated &= SegmentGap(chosen[i], chosen[j]) > a;
    Rational best = BestSeparatedTotal(input, a);
    auto describe = [&] { return "trial " + std::to_string(trial); };
    report.suite.Record(subset && separated, describe);
    report.suite.Record(3 * chosen_total >= input_total, describe);
    report.suite.Record(chosen_total <= best && 3 * chosen_total >= best, describe);
    Rational input_fraction = chosen_total / input_total;
    Rational optimum_fraction = chosen_total / best;
    report.worst_input_fraction = std::min(report.worst_input_fraction, input_fraction);
    report.worst_optimum_fraction = std::min(report.worst_optimum_fraction, optimum_fraction);
  }
  return report;
}

}  // namespace bigonlab
