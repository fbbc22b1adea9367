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

#include "bigonlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bigonlab/bigon.hpp"
#include "bigonlab/cayley.hpp"
#include "bigonlab/constants.hpp"
#include "bigonlab/error.hpp"
#include "bigonlab/lemmas.hpp"
#include "bigonlab/presentation.hpp"
#include "bigonlab/vkarea.hpp"
#include "bigonlab/wordproblem.hpp"

namespace bigonlab::cli {

namespace {

using Json = nlohmann::ordered_json;

// Options shared by the subcommands; each subcommand registers the subset
// it uses.
struct Flags {
  std::string preset;
  std::string presentation_file;
  std::string graph_file;
  long base = 0;
  int radius = -1;
  int core_radius = -1;
  std::size_t vertex_cap = 6'000'000;
  bool allow_uncertified = false;
  std::string strategy = "auto";
  std::size_t completion_cap = 2000;

  int length_cap = -1;
  std::size_t count_cap = 50'000'000;
  bool list = false;
  std::size_t row_limit = 1000;
  std::string xs;

  std::string y;
  std::string z;
  std::string theta = "1/2";
  std::string lambda = "1/2";
  std::string nu;

  std::string word;
  std::vector<std::string> bigon_words;
  std::size_t area_length_cap = 16;
  long area_cap = 64;
  std::size_t state_cap = 4'000'000;

  int subadditivity_radius = -2;  // -2: default min(2, core)
  int subadditivity_threshold = 4;
  int dvl_y = 0;
  std::string dvl_lambda = "1/10";
  std::string dvl_nu = "1/2";
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_segments = 6;

  int jobs = 1;
  std::string out;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json parameters = Json::object();
  Json results = Json::object();
  bool certified = true;
  bool truncated = false;
  std::optional<Table> table;
  std::string summary;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Rational RationalFlag(const std::string& name, const std::string& text) {
  try {
    return ParseRational(text);
  } catch (const Error& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

long NaturalFlag(const std::string& name, const std::string& text) {
  Rational q = RationalFlag(name, text);
  if (q.get_den() != 1 || q < 0 || !q.get_num().fits_slong_p())
    throw UsageError("--" + name + " must be a natural number, got " + text);
  return q.get_num().get_si();
}

// Presentation, strategy and ball, built on demand from the source flags.
struct Source {
  std::optional<Presentation> presentation;
  std::optional<Strategy> strategy;
  std::optional<GraphBall> ball;
};

Presentation LoadPresentation(const Flags& f, Json& params) {
  int sources = !f.preset.empty() + !f.presentation_file.empty();
  if (!f.graph_file.empty()) throw UsageError("this command needs a presentation, not --graph");
  if (sources != 1) throw UsageError("give exactly one of --preset or --presentation");
  if (!f.preset.empty()) {
    params["preset"] = f.preset;
    try {
      return ParsePresentation(PresetText(f.preset));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  params["presentation"] = f.presentation_file;
  return ParsePresentation(ReadFile(f.presentation_file));
}

Strategy PickStrategy(const Flags& f, const Presentation& p, Json& params) {
  params["strategy"] = f.strategy;
  params["completion_cap"] = f.completion_cap;
  if (f.strategy == "auto") return ChooseStrategy(p, f.completion_cap);
  if (f.strategy == "rewriting") return CompleteRewriting(p, f.completion_cap);
  if (f.strategy == "dehn") return Strategy::DehnGreedy(p);
  if (f.strategy == "free") return Strategy::FreeReduction(p);
  throw UsageError("--strategy must be auto, rewriting, dehn or free");
}

Json StrategyJson(const Strategy& s) {
  Json j;
  j["kind"] = ToString(s.kind());
  j["certified"] = s.certified();
  j["canonical"] = s.canonical();
  j["rule_count"] = s.rules().size();
  j["description"] = s.Describe();
  return j;
}

Source LoadBall(const Flags& f, Report& report) {
  Json& params = report.parameters;
  Source source;
  if (!f.graph_file.empty()) {
    if (!f.preset.empty() || !f.presentation_file.empty())
      throw UsageError("give exactly one of --preset, --presentation or --graph");
    params["graph"] = f.graph_file;
    params["base"] = f.base;
    std::optional<int> core;
    if (f.core_radius >= 0) core = f.core_radius;
    source.ball = IngestGraph(ReadFile(f.graph_file), f.base, core);
  } else {
    source.presentation = LoadPresentation(f, params);
    source.strategy = PickStrategy(f, *source.presentation, params);
    if (f.radius < 0) throw UsageError("--radius is required");
    BallOptions options;
    if (f.core_radius >= 0) options.core_radius = f.core_radius;
    options.vertex_cap = f.vertex_cap;
    options.allow_uncertified = f.allow_uncertified;
    params["radius"] = f.radius;
    params["vertex_cap"] = f.vertex_cap;
    params["allow_uncertified"] = f.allow_uncertified;
    source.ball = BuildBall(*source.presentation, *source.strategy, f.radius, options);
  }
  params["core_radius"] = source.ball->core_radius();
  report.certified = report.certified && source.ball->certified();
  return source;
}

int LengthCap(const Flags& f, const GraphBall& /*ball*/, Json& params, int fallback) {
  int cap = f.length_cap >= 0 ? f.length_cap : fallback;
  params["length_cap"] = cap;
  return cap;
}

Json PathJson(const GraphBall& ball, const GeodesicPath& path) {
  Json j;
  if (ball.is_cayley()) {
    j["start"] = ball.Label(path.front());
    j["word"] = ball.presentation().Format(PathWord(ball, path));
  } else {
    Json vertices = Json::array();
    for (VertexId v : path.vertices) vertices.push_back(ball.Label(v));
    j["vertices"] = vertices;
  }
  return j;
}

std::string PathText(const GraphBall& ball, const GeodesicPath& path) {
  if (ball.is_cayley()) return ball.presentation().Format(PathWord(ball, path));
  std::string out;
  for (VertexId v : path.vertices) out += (out.empty() ? "" : "-") + ball.Label(v);
  return out;
}

Json BandJson(const GraphBall& ball, std::size_t id, const Band& band) {
  Json j;
  j["id"] = id;
  j["length"] = band.length();
  j["side0"] = PathJson(ball, band.side0);
  j["side1"] = PathJson(ball, band.side1);
  j["widths"] = ComputeWidthProfile(ball, band).values;
  return j;
}

// Bigons with the requested stream ids.
std::map<std::size_t, Band> FetchBigons(const GraphBall& ball, int length_cap,
                                        const std::set<std::size_t>& ids) {
  std::map<std::size_t, Band> found;
  if (ids.empty()) return found;
  BigonOptions options;
  options.length_cap = length_cap;
  options.count_cap = *ids.rbegin() + 1;
  ForEachBigon(ball, options, [&](std::size_t id, const Band& band) {
    if (ids.count(id)) found.emplace(id, band);
  });
  return found;
}

std::vector<int> ParseIntList(const std::string& text, const std::string& name) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(static_cast<int>(NaturalFlag(name, item)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands

void CmdBall(const Flags& f, Report& r) {
  Source s = LoadBall(f, r);
  const GraphBall& ball = *s.ball;
  Json& res = r.results;
  res["vertex_count"] = ball.vertex_count();
  res["edge_count"] = ball.edge_count();
  res["radius"] = ball.radius();
  res["core_radius"] = ball.core_radius();
  res["core_vertex_count"] = ball.CoreVertices().size();
  res["sphere_sizes"] = ball.SphereSizes();
  res["certified"] = ball.certified();
  res["distance_mode"] = ball.translation_backed() ? "translation" : "in_ball";
  if (s.strategy) {
    res["strategy"] = StrategyJson(*s.strategy);
    res["small_cancellation_ratio"] = ToString(SmallCancellationRatio(*s.presentation));
  }
  r.summary = "ball: " + std::to_string(ball.vertex_count()) + " vertices, radius " +
              std::to_string(ball.radius()) + ", core " + std::to_string(ball.core_radius());
}

void CmdBigons(const Flags& f, Report& r) {
  Source s = LoadBall(f, r);
  const GraphBall& ball = *s.ball;
  BigonOptions options;
  options.length_cap = LengthCap(f, ball, r.parameters, 2 * ball.core_radius());
  options.count_cap = f.count_cap;
  r.parameters["count_cap"] = f.count_cap;
  r.parameters["list"] = f.list;
  std::map<std::size_t, std::size_t> by_length;
  Json listing = Json::array();
  Table table{{"id", "length", "start0", "side0", "start1", "side1"}, {}};
  const bool want_rows = !f.out.empty();
  auto summary = ForEachBigon(ball, options, [&](std::size_t id, const Band& band) {
    ++by_length[band.length()];
    if (f.list) listing.push_back(BandJson(ball, id, band));
    if (want_rows) {
      table.rows.push_back({std::to_string(id), std::to_string(band.length()),
                            ball.Label(band.side0.front()), PathText(ball, band.side0),
                            ball.Label(band.side1.front()), PathText(ball, band.side1)});
    }
  });
  r.truncated = summary.truncated;
  Json lengths = Json::object();
  for (auto [l, c] : by_length) lengths[std::to_string(l)] = c;
  r.results["count"] = summary.count;
  r.results["truncated"] = summary.truncated;
  r.results["count_by_length"] = lengths;
  if (f.list) r.results["bigons"] = listing;
  r.table = std::move(table);
  r.summary = "bigons: " + std::to_string(summary.count) + (summary.truncated ? " (truncated)" : "");
}

void CmdStats(const Flags& f, Report& r) {
  Source s = LoadBall(f, r);
  const GraphBall& ball = *s.ball;
  BigonOptions options;
  options.length_cap = LengthCap(f, ball, r.parameters, 2 * ball.core_radius());
  options.count_cap = f.count_cap;
  r.parameters["count_cap"] = f.count_cap;
  std::vector<int> xs;
  if (f.xs.empty()) {
    for (int x = 0; x <= options.length_cap; ++x) xs.push_back(x);
  } else {
    xs = ParseIntList(f.xs, "xs");
  }
  std::optional<long> y, z;
  if (!f.y.empty()) y = NaturalFlag("Y", f.y);
  if (!f.z.empty()) z = NaturalFlag("Z", f.z);
  if (z && !y) throw UsageError("--Z needs --Y");
  if (y) xs.push_back(static_cast<int>(*y));
  if (z) xs.push_back(static_cast<int>(*z));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Json jxs = xs;
  r.parameters["xs"] = jxs;
  if (y) r.parameters["Y"] = *y;
  if (z) r.parameters["Z"] = *z;

  auto result = SupExceedance(ball, options, xs, f.jobs);
  r.truncated = result.summary.truncated;
  std::set<std::size_t> witness_ids;
  for (const auto& e : result.entries)
    if (e.witness) witness_ids.insert(*e.witness);
  auto witnesses = FetchBigons(ball, options.length_cap, witness_ids);

  Json curve = Json::array();
  Table table{{"x", "sup_ratio_num", "sup_ratio_den", "witness"}, {}};
  for (const auto& e : result.entries) {
    Json row;
    row["x"] = e.x;
    row["sup"] = ToString(e.sup);
    row["condition_A"] = ConditionA(e.sup);
    if (e.witness) {
      row["witness"] = BandJson(ball, *e.witness, witnesses.at(*e.witness));
    } else {
      row["witness"] = nullptr;
    }
    curve.push_back(row);
    table.rows.push_back({std::to_string(e.x), e.sup.get_num().get_str(), e.sup.get_den().get_str(),
                          e.witness ? std::to_string(*e.witness) : ""});
  }
  Json& res = r.results;
  res["count"] = result.summary.count;
  res["truncated"] = result.summary.truncated;
  res["max_width"] = result.max_width;
  res["tas_curve"] = curve;
  auto sup_at = [&](long x) {
    for (const auto& e : result.entries)
      if (e.x == x) return e.sup;
    return Rational(0);
  };
  const std::string caveat = "decided on the finite sample; cannot certify the true supremum";
  if (y) {
    Json a;
    a["Y"] = *y;
    a["sup"] = ToString(sup_at(*y));
    a["satisfied"] = ConditionA(sup_at(*y));
    a["caveat"] = caveat;
    res["condition_A"] = a;
  }
  if (y && z) {
    Json b;
    b["Y"] = *y;
    b["Z"] = *z;
    b["sup"] = ToString(sup_at(*z));
    b["bound"] = ToString(Rational(1, 4 * *y + 2));
    b["satisfied"] = ConditionB(sup_at(*z), static_cast<int>(*y));
    b["caveat"] = caveat;
    res["condition_B"] = b;
  }
  r.table = std::move(table);
  r.summary = "stats: " + std::to_string(result.summary.count) + " bigons, max width " +
              std::to_string(result.max_width);
}

Json BundleJson(const ConstantBundle& b) {
  Json j;
  j["Y"] = std::to_string(b.y);
  j["theta"] = ToString(b.theta);
  j["Z"] = std::to_string(b.z);
  j["lambda"] = ToString(b.lambda);
  j["nu"] = ToString(b.nu);
  j["epsilon"] = ToString(b.epsilon);
  j["a_minus"] = std::to_string(b.a_minus);
  j["a_plus"] = std::to_string(b.a_plus);
  j["a"] = std::to_string(b.a);
  j["D"] = std::to_string(b.d);
  j["rho"] = ToString(b.rho);
  j["R"] = ToString(b.r);
  Json seq = Json::array();
  for (const auto& n : b.n_sequence) seq.push_back(ToString(n));
  j["n_sequence"] = seq;
  j["N"] = ToString(b.n);
  j["mu"] = ToString(b.mu);
  j["K"] = ToString(b.k);
  j["K_certified_precision_bits"] = b.k_precision_bits;
  if (b.c) {
    j["C"] = ToString(*b.c);
  } else {
    j["C"] = nullptr;
  }
  j["C_log10"] = b.c_log10;
  j["C_log10_note"] = "approximate, 12 significant digits";
  j["C_branch"] = b.c_from_r ? "R" : "D*N^(K+1)*(1+theta)/(1-theta)";
  return j;
}

ConstantBundle BundleFromFlags(const Flags& f, Json& params, long y, long z) {
  Rational theta = RationalFlag("theta", f.theta);
  Rational lambda = RationalFlag("lambda", f.lambda);
  PipelineOptions options;
  if (!f.nu.empty()) options.nu = RationalFlag("nu", f.nu);
  params["theta"] = ToString(theta);
  params["lambda"] = ToString(lambda);
  params["nu"] = f.nu.empty() ? Json(nullptr) : Json(ToString(*options.nu));
  try {
    return Pipeline(y, theta, z, lambda, options);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidArgument) throw UsageError(e.what());
    throw;
  }
}

void CmdConstants(const Flags& f, Report& r) {
  long y = NaturalFlag("Y", f.y.empty() ? "1" : f.y);
  long z = NaturalFlag("Z", f.z.empty() ? "1" : f.z);
  r.parameters["Y"] = y;
  r.parameters["Z"] = z;
  ConstantBundle b = BundleFromFlags(f, r.parameters, y, z);
  r.results = BundleJson(b);
  r.summary = "constants: D=" + std::to_string(b.d) + " R=" + ToString(b.r) + " N=" + ToString(b.n) +
              " K=" + ToString(b.k) + " log10(C)~" + b.c_log10;
}

AreaCaps CapsFromFlags(const Flags& f, Json& params) {
  AreaCaps caps;
  caps.length_cap = f.area_length_cap;
  caps.area_cap = f.area_cap;
  caps.state_cap = f.state_cap;
  params["length_cap_area"] = caps.length_cap;
  params["area_cap"] = caps.area_cap;
  params["state_cap"] = caps.state_cap;
  return caps;
}

Json AreaJson(const Presentation& p, const AreaResult& a) {
  Json j;
  j["word"] = p.Format(a.word);
  if (a.area) {
    j["area"] = *a.area;
  } else {
    j["area"] = nullptr;
  }
  j["status"] = ToString(a.status);
  Json moves = Json::array();
  for (const auto& m : a.witness) moves.push_back({{"position", m.position}, {"relator", p.Format(m.relator)}});
  j["witness"] = moves;
  j["states"] = a.states;
  return j;
}

void CmdArea(const Flags& f, Report& r) {
  Presentation p = LoadPresentation(f, r.parameters);
  if (f.word.empty() && f.word != "") throw UsageError("--word is required");
  r.parameters["word"] = f.word;
  AreaCaps caps = CapsFromFlags(f, r.parameters);
  Word w = p.ParseWord(f.word);
  AreaResult a = Area(p, w, caps);
  r.results = AreaJson(p, a);
  r.results["replays_to_empty"] = a.area.has_value() && ReplayMoves(w, a.witness).empty();
  r.summary = "area: " + (a.area ? std::to_string(*a.area) : std::string("unknown")) + " (" +
              ToString(a.status) + ")";
}

void CmdRatio(const Flags& f, Report& r) {
  Source s = LoadBall(f, r);
  const GraphBall& ball = *s.ball;
  if (!ball.is_cayley()) throw Error(ErrorKind::kRefused, "area ratios need a Cayley ball");
  AreaCaps caps = CapsFromFlags(f, r.parameters);
  std::vector<Band> bands;
  if (!f.bigon_words.empty()) {
    Json listed = f.bigon_words;
    r.parameters["bigons"] = listed;
    for (const auto& pair_text : f.bigon_words) {
      auto colon = pair_text.find(':');
      if (colon == std::string::npos) throw UsageError("--bigon expects WORD0:WORD1, got " + pair_text);
      const Presentation& p = ball.presentation();
      Band band{PathFromWord(ball, ball.base(), p.ParseWord(pair_text.substr(0, colon))),
                PathFromWord(ball, ball.base(), p.ParseWord(pair_text.substr(colon + 1)))};
      if (band.side0 != band.side1 && !IsBigon(ball, band))
        throw Error(ErrorKind::kPrecondition, "'" + pair_text + "' is not a bigon");
      if (band.side1 < band.side0) std::swap(band.side0, band.side1);
      bands.push_back(band);
    }
  } else {
    BigonOptions options;
    options.length_cap = LengthCap(f, ball, r.parameters, 2 * ball.core_radius());
    options.count_cap = f.count_cap;
    r.parameters["count_cap"] = f.count_cap;
    bool truncated = false;
    bands = EnumerateBigons(ball, options, &truncated);
    r.truncated = truncated;
  }
  r.parameters["row_limit"] = f.row_limit;
  RatioStats stats = ComputeRatioStats(ball, bands, caps, f.jobs);
  Json rows = Json::array();
  Table table{{"length", "area", "ratio"}, {}};
  for (const auto& row : stats.rows) {
    std::string area = row.area.area ? std::to_string(*row.area.area) : "";
    std::string ratio = row.ratio ? ToString(*row.ratio) : "";
    if (rows.size() < f.row_limit) {
      Json j = BandJson(ball, row.id, bands[row.id]);
      j["area"] = row.area.area ? Json(*row.area.area) : Json(nullptr);
      j["status"] = ToString(row.area.status);
      j["ratio"] = row.ratio ? Json(ratio) : Json(nullptr);
      rows.push_back(j);
    }
    table.rows.push_back({std::to_string(row.length), area, ratio});
  }
  Json by_length = Json::object();
  for (const auto& [l, q] : stats.max_by_length) by_length[std::to_string(l)] = ToString(q);
  Json& res = r.results;
  res["bigon_count"] = bands.size();
  res["rows"] = rows;
  res["rows_truncated"] = stats.rows.size() > f.row_limit;
  res["max_ratio"] = stats.max_ratio ? Json(ToString(*stats.max_ratio)) : Json(nullptr);
  res["max_ratio_by_length"] = by_length;
  res["excluded_non_exact"] = stats.excluded;
  res["degenerate"] = stats.degenerate;
  if (stats.excluded > 0) r.certified = false;
  r.table = std::move(table);
  r.summary = "ratio: " + std::to_string(stats.rows.size()) + " bigons, max ratio " +
              (stats.max_ratio ? ToString(*stats.max_ratio) : std::string("none"));
}

void CmdDelta(const Flags& f, Report& r) {
  Source s = LoadBall(f, r);
  const GraphBall& ball = *s.ball;
  r.parameters["sample"] = "core";
  Rational delta = GromovDeltaOver(ball, ball.CoreVertices(), f.jobs);
  r.results["delta"] = ToString(delta);
  r.results["sample_size"] = ball.CoreVertices().size();
  r.summary = "delta: " + ToString(delta) + " over " + std::to_string(ball.CoreVertices().size()) +
              " core vertices";
}

void CmdGaps(const Flags& f, Report& r) {
  Source s = LoadBall(f, r);
  const GraphBall& ball = *s.ball;
  BigonOptions options;
  options.length_cap = LengthCap(f, ball, r.parameters, 2 * ball.core_radius());
  options.count_cap = f.count_cap;
  r.parameters["count_cap"] = f.count_cap;
  long y = NaturalFlag("Y", f.y.empty() ? "1" : f.y);
  long z = NaturalFlag("Z", f.z.empty() ? "1" : f.z);
  r.parameters["Y"] = y;
  r.parameters["Z"] = z;
  ConstantBundle bundle = BundleFromFlags(f, r.parameters, y, z);

  struct GapPartial {
    SupAccumulator sup;
    std::map<std::size_t, std::size_t> histogram;
    std::size_t max_gap = 0;
    std::optional<std::size_t> witness;
  };
  GapPartial empty{SupAccumulator({static_cast<int>(y), static_cast<int>(z)}), {}, 0, std::nullopt};
  GapPartial total = empty;
  auto summary = FoldBigons(
      ball, options, f.jobs, empty,
      [&](GapPartial& part, std::size_t id, const Band& band) {
        WidthProfile profile = ComputeWidthProfile(ball, band);
        part.sup.Add(id, profile);
        std::size_t gap = MaxSmallJumperGap(profile, static_cast<int>(y));
        ++part.histogram[gap];
        if (!part.witness || gap > part.max_gap) {
          part.max_gap = gap;
          part.witness = id;
        }
      },
      [&](GapPartial&& part) {
        total.sup.Merge(part.sup);
        for (auto [g, c] : part.histogram) total.histogram[g] += c;
        if (part.witness && (!total.witness || part.max_gap > total.max_gap)) {
          total.max_gap = part.max_gap;
          total.witness = part.witness;
        }
      });
  r.truncated = summary.truncated;
  Rational sup_y = total.sup.At(static_cast<int>(y)).sup;
  Rational sup_z = total.sup.At(static_cast<int>(z)).sup;
  bool a_ok = ConditionA(sup_y);
  bool b_ok = ConditionB(sup_z, static_cast<int>(y));
  auto within_c = [&](std::size_t gap) {
    if (BigInt(static_cast<unsigned long>(gap)) <= bundle.r) return true;
    if (bundle.c) return Rational(static_cast<long>(gap)) <= *bundle.c;
    return true;  // C has more than 10^5 digits
  };
  Json& res = r.results;
  res["count"] = summary.count;
  res["truncated"] = summary.truncated;
  res["condition_A"] = {{"Y", y}, {"sup", ToString(sup_y)}, {"satisfied", a_ok},
                        {"below_theta", sup_y < bundle.theta}};
  res["condition_B"] = {{"Y", y}, {"Z", z}, {"sup", ToString(sup_z)},
                        {"bound", ToString(Rational(1, 4 * y + 2))}, {"satisfied", b_ok},
                        {"below_epsilon", sup_z < bundle.epsilon}};
  res["caveat"] = "verdicts are decided on the finite sample";
  res["max_gap"] = total.max_gap;
  res["max_gap_witness"] = total.witness ? Json(*total.witness) : Json(nullptr);
  res["R"] = ToString(bundle.r);
  res["C"] = bundle.c ? Json(ToString(*bundle.c)) : Json(nullptr);
  res["C_log10"] = bundle.c_log10;
  if (a_ok && b_ok) {
    res["all_gaps_within_C"] = within_c(total.max_gap);
  } else {
    res["all_gaps_within_C"] = nullptr;
    res["not_applicable"] = "conditions A and B are not both satisfied on the sample";
  }
  Json hist = Json::object();
  Table table{{"gap", "count"}, {}};
  for (auto [g, c] : total.histogram) {
    hist[std::to_string(g)] = c;
    table.rows.push_back({std::to_string(g), std::to_string(c)});
  }
  res["gap_histogram"] = hist;
  r.table = std::move(table);
  r.summary = "gaps: max small-jumper gap " + std::to_string(total.max_gap) + " over " +
              std::to_string(summary.count) + " bigons";
}

Json SuiteJson(const SuiteReport& s) {
  Json j;
  j["name"] = s.name;
  j["checks"] = s.checks;
  j["violations"] = s.violations;
  j["first_violation"] = s.violations ? Json(s.first_violation) : Json(nullptr);
  return j;
}

void CmdLemmaCheck(const Flags& f, Report& r) {
  Source s = LoadBall(f, r);
  const GraphBall& ball = *s.ball;
  BigonOptions options;
  options.length_cap = LengthCap(f, ball, r.parameters, std::min(2 * ball.core_radius(), 6));
  options.count_cap = f.count_cap;
  r.parameters["count_cap"] = f.count_cap;
  long y = NaturalFlag("Y", f.y.empty() ? "2" : f.y);
  r.parameters["Y"] = y;
  int sub_radius = f.subadditivity_radius == -2 ? std::min(2, ball.core_radius()) : f.subadditivity_radius;
  r.parameters["subadditivity_radius"] = sub_radius;
  r.parameters["subadditivity_threshold"] = f.subadditivity_threshold;
  DenseValueParams dvl;
  dvl.y = f.dvl_y;
  dvl.lambda = RationalFlag("dvl-lambda", f.dvl_lambda);
  dvl.nu = RationalFlag("dvl-nu", f.dvl_nu);
  r.parameters["dvl_Y"] = dvl.y;
  r.parameters["dvl_lambda"] = ToString(dvl.lambda);
  r.parameters["dvl_nu"] = ToString(dvl.nu);
  r.parameters["seed"] = f.seed;
  r.parameters["trials"] = f.trials;
  r.parameters["max_segments"] = f.max_segments;

  bool truncated = false;
  std::vector<Band> bigons = EnumerateBigons(ball, options, &truncated);
  r.truncated = truncated;
  auto sup = SupExceedance(ball, options, {static_cast<int>(y)}, f.jobs);
  Rational theta = sup.entries.front().sup;

  Json suites = Json::array();
  std::size_t violations = 0;
  auto add = [&](const SuiteReport& suite) {
    suites.push_back(SuiteJson(suite));
    violations += suite.violations;
  };
  add(CheckRankBounds(ball, bigons, f.jobs));
  add(CheckRankMonotonicity(ball, bigons, f.jobs));
  add(CheckRankDecay(ball, bigons, static_cast<int>(y), theta, f.jobs));
  if (sub_radius >= 0) {
    add(CheckSubadditivity(ball, sub_radius, f.subadditivity_threshold, f.jobs));
  } else {
    suites.push_back({{"name", "subadditivity"}, {"skipped", true}});
  }
  DenseValueReport dense = CheckDenseValues(ball, bigons, dvl);
  add(dense.suite);
  SegmentLemmaReport segments = CheckSegmentLemma(f.seed, f.trials, f.max_segments);
  add(segments.suite);

  Json& res = r.results;
  res["bigon_count"] = bigons.size();
  res["theta_hat"] = ToString(theta);
  res["suites"] = suites;
  res["dense_value_parameters"] = {{"Z", dense.z},
                                   {"epsilon", ToString(dense.epsilon)},
                                   {"D", dense.d},
                                   {"rho", ToString(dense.rho)},
                                   {"R", ToString(dense.r)}};
  res["segment_lemma"] = {{"worst_fraction_of_input", ToString(segments.worst_input_fraction)},
                          {"worst_fraction_of_optimum", ToString(segments.worst_optimum_fraction)}};
  res["violations"] = violations;
  res["all_passed"] = violations == 0;
  r.summary = "lemma-check: " + std::to_string(violations) + " violations over " +
              std::to_string(bigons.size()) + " bigons";
}

// ---------------------------------------------------------------------------

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void WriteCsv(const Table& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kRefused, "cannot write '" + path + "'");
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << CsvField(cells[i]);
    out << "\r\n";
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void AddSourceOptions(CLI::App* cmd, Flags& f) {
  cmd->add_option("--preset", f.preset, "Built-in presentation: f2, z2 or surface2");
  cmd->add_option("--presentation", f.presentation_file, "Presentation file");
  cmd->add_option("--graph", f.graph_file, "Edge-list file (one 'u v' pair per line)");
  cmd->add_option("--base", f.base, "Base vertex id for --graph");
  cmd->add_option("--radius", f.radius, "Ball radius");
  cmd->add_option("--core-radius", f.core_radius, "Trust-region radius (default radius/3)");
  cmd->add_option("--vertex-cap", f.vertex_cap, "Abort ball construction beyond this size");
  cmd->add_flag("--allow-uncertified", f.allow_uncertified, "Build from an uncertified strategy");
  cmd->add_option("--strategy", f.strategy, "Word problem: auto, rewriting, dehn, free");
  cmd->add_option("--completion-cap", f.completion_cap, "Rule cap for rewriting completion");
}

void AddStreamOptions(CLI::App* cmd, Flags& f) {
  cmd->add_option("--length-cap", f.length_cap, "Longest bigon (default 2*core)");
  cmd->add_option("--count-cap", f.count_cap, "Stop the bigon stream after this many");
}

void AddConstantOptions(CLI::App* cmd, Flags& f) {
  cmd->add_option("--Y", f.y, "Width threshold Y");
  cmd->add_option("--Z", f.z, "Threshold Z");
  cmd->add_option("--theta", f.theta, "theta in (0,1), as p/q");
  cmd->add_option("--lambda", f.lambda, "lambda in (0,1), as p/q");
  cmd->add_option("--nu", f.nu, "nu in (lambda,1); default (1+lambda)/2");
}

void AddAreaOptions(CLI::App* cmd, Flags& f) {
  cmd->add_option("--length-cap-area", f.area_length_cap, "Longest intermediate word in area search");
  cmd->add_option("--area-cap", f.area_cap, "Deepest area search");
  cmd->add_option("--state-cap", f.state_cap, "Most distinct words in one area search");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Geodesic bigons, width statistics and area in Cayley graphs", "bigonlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  std::map<std::string, std::function<void(const Flags&, Report&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", f.out, "Write the report's table as CSV");
    handlers[name] = handler;
    return cmd;
  };

  auto* ball = add("ball", "Build a ball and report its size", CmdBall);
  AddSourceOptions(ball, f);
  auto* bigons = add("bigons", "Enumerate geodesic bigons in the core", CmdBigons);
  AddSourceOptions(bigons, f);
  AddStreamOptions(bigons, f);
  bigons->add_flag("--list", f.list, "Include every bigon in the report");
  auto* stats = add("stats", "Exceedance curve and condition A/B verdicts", CmdStats);
  AddSourceOptions(stats, f);
  AddStreamOptions(stats, f);
  stats->add_option("--xs", f.xs, "Comma-separated thresholds (default 0..length cap)");
  stats->add_option("--Y", f.y, "Report condition A at Y");
  stats->add_option("--Z", f.z, "Report condition B at (Z, Y)");
  auto* gaps = add("gaps", "Small-jumper gaps against the constant C", CmdGaps);
  AddSourceOptions(gaps, f);
  AddStreamOptions(gaps, f);
  AddConstantOptions(gaps, f);
  auto* constants = add("constants", "Constant pipeline", CmdConstants);
  AddConstantOptions(constants, f);
  auto* area = add("area", "Van Kampen area of a word", CmdArea);
  area->add_option("--preset", f.preset, "Built-in presentation: f2, z2 or surface2");
  area->add_option("--presentation", f.presentation_file, "Presentation file");
  area->add_option("--word", f.word, "Word over the generators (inverses in upper case)")->required();
  AddAreaOptions(area, f);
  auto* ratio = add("ratio", "Area-to-length ratios of bigons", CmdRatio);
  AddSourceOptions(ratio, f);
  AddStreamOptions(ratio, f);
  AddAreaOptions(ratio, f);
  ratio->add_option("--bigon", f.bigon_words, "Explicit bigon WORD0:WORD1 read from the base");
  ratio->add_option("--row-limit", f.row_limit, "Most rows included in the JSON report");
  auto* delta = add("delta", "Four-point delta over the core", CmdDelta);
  AddSourceOptions(delta, f);
  auto* lemma = add("lemma-check", "Invariant suites for ranks, dense values and segments", CmdLemmaCheck);
  AddSourceOptions(lemma, f);
  AddStreamOptions(lemma, f);
  lemma->add_option("--Y", f.y, "Small-jumper threshold for rank decay (default 2)");
  lemma->add_option("--subadditivity-radius", f.subadditivity_radius,
                    "Endpoint radius of the subadditivity triples; -1 skips the suite");
  lemma->add_option("--subadditivity-threshold", f.subadditivity_threshold, "Largest A and B");
  lemma->add_option("--dvl-Y", f.dvl_y, "Endpoint width bound 2Y+1 for dense values");
  lemma->add_option("--dvl-lambda", f.dvl_lambda, "lambda for dense values");
  lemma->add_option("--dvl-nu", f.dvl_nu, "nu for dense values");
  lemma->add_option("--seed", f.seed, "Seed for random segment inputs");
  lemma->add_option("--trials", f.trials, "Random segment inputs");
  lemma->add_option("--max-segments", f.max_segments, "Most segments per input");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Report report;
  const auto start = std::chrono::steady_clock::now();
  try {
    static const std::set<std::string> tabular = {"bigons", "stats", "gaps", "ratio"};
    if (!f.out.empty() && !tabular.count(name))
      throw Error(ErrorKind::kRefused, "'" + name + "' has no tabular output for --out");
    handlers.at(name)(f, report);
    if (!f.out.empty()) WriteCsv(*report.table, f.out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse || e.kind() == ErrorKind::kInvalidArgument) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    Json failure;
    failure["command"] = name;
    failure["parameters"] = report.parameters;
    failure["error"] = e.what();
    out << failure.dump(2) << "\n";
    err << "refused: " << e.what() << "\n";
    return 1;
  }
  if (report.truncated) report.certified = false;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json j;
  j["command"] = name;
  j["parameters"] = report.parameters;
  j["certified"] = report.certified;
  j["truncated"] = report.truncated;
  j["results"] = report.results;
  j["execution"] = {{"jobs", f.jobs}, {"wall_seconds", seconds}};
  out << j.dump(2) << "\n";
  err << report.summary << "\n";
  return 0;
}

}  // namespace bigonlab::cli
