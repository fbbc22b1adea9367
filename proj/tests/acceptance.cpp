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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "bigonlab/bigon.hpp"
#include "bigonlab/cli.hpp"
#include "bigonlab/vkarea.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace {

using Json = nlohmann::json;
using bigonlab::Rational;

struct Invocation {
  std::vector<std::string> args;
  std::string payload;  // report without the execution block
};

// Every CLI run is recorded so the determinism criterion can replay it.
std::vector<Invocation> g_runs;

std::string Payload(const std::string& out) {
  Json j = Json::parse(out);
  j.erase("execution");
  return j.dump();
}

Json RunCli(std::vector<std::string> args, bool record = true) {
  std::ostringstream out, err;
  const int code = bigonlab::cli::Run(args, out, err);
  if (code != 0) {
    std::ostringstream joined;
    for (const auto& a : args) joined << a << ' ';
    throw std::runtime_error("exit " + std::to_string(code) + " from: " + joined.str() + "\n" + err.str());
  }
  if (record) g_runs.push_back({args, Payload(out.str())});
  return Json::parse(out.str());
}

Rational Q(const Json& value) { return Rational(value.get<std::string>()); }

class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome Criterion1(Checker& c) {
  Json bigons = RunCli({"bigons", "--preset", "f2", "--radius", "12", "--length-cap", "8"});
  Json delta = RunCli({"delta", "--preset", "f2", "--radius", "12"});
  c.Expect(bigons["results"]["count"] == 0, "free group produced bigons");
  c.Expect(delta["results"]["delta"] == "0", "free group delta is not 0");
  c.Expect(bigons["certified"].get<bool>(), "enumeration not certified");
  return {true, "0 bigons, delta 0 over " + delta["results"]["sample_size"].dump() + " core vertices"};
}

Outcome Criterion2(Checker& c) {
  Json r = RunCli({"ratio", "--preset", "z2", "--radius", "7", "--core-radius", "2", "--bigon", "aabb:bbaa"});
  std::vector<int> widths = r["results"]["rows"][0]["widths"].get<std::vector<int>>();
  c.Expect(widths == std::vector<int>({0, 2, 4, 2, 0}), "width profile differs");
  c.Expect(widths == oracle::LatticeWidths({0, 0}, "aabb", "bbaa"), "width profile differs from lattice oracle");
  bigonlab::WidthProfile profile{widths};
  auto ex = bigonlab::ComputeExceedance(profile, 2);
  c.Expect(ex.ratio == Rational(1, 4) && ex.count == 1, "exceedance at 2 is not 1/4");
  c.Expect(bigonlab::SmallJumpers(profile, 1) == std::vector<std::size_t>({0, 1, 3, 4}), "small jumpers differ");
  c.Expect(bigonlab::MaxSmallJumperGap(profile, 1) == 2, "max gap is not 2");
  return {true, "widths [0,2,4,2,0], exceedance 1/4, jumpers {0,1,3,4}, gap 2"};
}

Outcome Criterion3(Checker& c) {
  Rational previous = -1;
  std::string curve;
  for (int cap = 4; cap <= 10; ++cap) {
    Json r = RunCli({"stats", "--preset", "z2", "--radius", "15", "--core-radius", "5", "--length-cap",
                     std::to_string(cap), "--xs", "1"});
    Rational sup = Q(r["results"]["tas_curve"][0]["sup"]);
    c.Expect(sup >= Rational(3, 4), "sup below 3/4 at cap " + std::to_string(cap));
    c.Expect(sup >= previous, "sup decreased at cap " + std::to_string(cap));
    if (cap <= 6) {
      c.Expect(sup == oracle::LatticeSupExceedance(5, cap, 1), "sup differs from lattice oracle at cap " + std::to_string(cap));
      c.Expect(r["results"]["count"] == oracle::LatticeBigonCount(5, cap), "bigon count differs from lattice oracle");
    }
    previous = sup;
    curve += (curve.empty() ? "" : ",") + sup.get_str();
  }
  return {true, "sup at x=1 for caps 4..10: " + curve};
}

Outcome Criterion4(Checker& c) {
  Json surface = RunCli({"stats", "--preset", "surface2", "--radius", "7", "--core-radius", "3", "--xs", "0"});
  const int w = surface["results"]["max_width"].get<int>();
  c.Expect(surface["results"]["count"].get<long>() > 0, "no surface bigons");
  const std::string y = std::to_string(w);
  Json at_w = RunCli({"stats", "--preset", "surface2", "--radius", "7", "--core-radius", "3", "--Y", y});
  Json lattice = RunCli({"stats", "--preset", "z2", "--radius", "9", "--core-radius", "3", "--Y", y});
  Rational surface_sup = Q(at_w["results"]["condition_A"]["sup"]);
  Rational lattice_sup = Q(lattice["results"]["condition_A"]["sup"]);
  c.Expect(surface_sup == 0, "surface sup at W is not 0");
  c.Expect(lattice_sup > 0, "lattice sup at W is not positive");
  return {true, "W=" + y + ", surface sup 0, lattice sup " + lattice_sup.get_str()};
}

Outcome Criterion5(Checker& c) {
  Json r = RunCli({"constants", "--Y", "1", "--theta", "1/2", "--Z", "1", "--lambda", "1/2", "--nu", "3/4"});
  const Json& b = r["results"];
  c.Expect(b["epsilon"] == "1/12", "epsilon");
  c.Expect(b["a"] == "6", "a");
  c.Expect(b["D"] == "9", "D");
  c.Expect(b["rho"] == "1/40", "rho");
  c.Expect(b["R"] == "25", "R");
  c.Expect(b["n_sequence"][1] == "27", "n1");
  c.Expect(b["N"] == "7340031", "N");
  // independent evaluation of 1 + floor(ln(2/rho) / ln(mu)) in extended precision
  const long double q = std::log(80.0L) / std::log1p(1.0L / 7340030.0L);
  const long double frac = q - std::floor(q);
  c.Expect(frac > 1e-6L && frac < 1 - 1e-6L, "extended-precision oracle too close to an integer");
  const std::string k = std::to_string(static_cast<long>(std::floor(q)) + 1);
  c.Expect(b["K"] == k, "K differs from extended-precision oracle " + k);
  c.Expect(b["K_certified_precision_bits"].get<long>() >= 64, "K not certified");
  return {true, "eps 1/12, a 6, D 9, rho 1/40, R 25, n1 27, N 7340031, K " + b["K"].get<std::string>() +
                    " certified at " + b["K_certified_precision_bits"].dump() + " bits"};
}

Outcome Criterion6(Checker& c) {
  Json r = RunCli({"lemma-check", "--preset", "z2", "--radius", "9", "--core-radius", "3", "--length-cap", "6"});
  const Json& res = r["results"];
  c.Expect(res["bigon_count"] == oracle::LatticeBigonCount(3, 6), "bigon count differs from lattice oracle");
  std::string summary;
  for (const Json& suite : res["suites"]) {
    const std::string name = suite["name"];
    c.Expect(!suite.contains("skipped"), name + " skipped");
    c.Expect(suite["violations"] == 0, name + " has violations: " + suite["first_violation"].dump());
    c.Expect(suite["checks"].get<long>() > 0, name + " is vacuous");
    summary += name + "=" + suite["checks"].dump() + " ";
  }
  return {true, "zero violations; checks " + summary};
}

Outcome Criterion7(Checker& c) {
  const std::vector<std::pair<std::string, long>> words = {
      {"", 0}, {"abAB", 1}, {"aabbAABB", 4}, {"aaabbbAAABBB", 9}};
  for (const auto& [word, area] : words) {
    Json r = RunCli({"area", "--preset", "z2", "--word", word, "--length-cap-area", "16"});
    c.Expect(r["results"]["area"] == area, "area of '" + word + "'");
    c.Expect(r["results"]["status"] == "exact", "status of '" + word + "'");
    c.Expect(r["results"]["replays_to_empty"].get<bool>(), "witness of '" + word + "' does not replay");
    if (word.size() <= 8)
      c.Expect(oracle::BreadthFirstArea(word, {"abAB"}, 12) == area, "breadth-first oracle disagrees on '" + word + "'");
  }
  Json ratio = RunCli({"ratio", "--preset", "z2", "--radius", "7", "--core-radius", "3", "--bigon", "ab:ba",
                       "--bigon", "aabb:bbaa", "--bigon", "aaabbb:bbbaaa", "--length-cap-area", "16"});
  const Json& rows = ratio["results"]["rows"];
  c.Expect(rows.size() == 3, "ratio rows");
  const char* want[] = {"1/2", "1", "3/2"};
  for (std::size_t i = 0; i < 3 && i < rows.size(); ++i) c.Expect(rows[i]["ratio"] == want[i], "ratio row " + std::to_string(i));
  return {true, "areas 0,1,4,9 exact and replayable; ratios 1/2, 1, 3/2"};
}

Outcome Criterion8(Checker& c) {
  Json r = RunCli({"lemma-check", "--preset", "z2", "--radius", "3", "--core-radius", "1", "--length-cap", "2",
                   "--subadditivity-radius", "-1", "--seed", "1", "--trials", "1000", "--max-segments", "6"});
  for (const Json& suite : r["results"]["suites"])
    if (suite["name"] == "segment_lemma") c.Expect(suite["violations"] == 0, "segment lemma violations");
  // independent replay against the exhaustive oracle
  std::mt19937_64 rng(99);
  Rational worst = 1;
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational a(1 + static_cast<long>(rng() % 8), 4);
    const std::size_t n = 1 + rng() % 6;
    std::vector<bigonlab::OpenSegment> segs;
    Rational cursor(static_cast<long>(rng() % 8), 4);
    for (std::size_t i = 0; i < n; ++i) {
      Rational len = a + Rational(1 + static_cast<long>(rng() % 16), 4);
      segs.push_back({cursor, cursor + len});
      cursor += len + Rational(static_cast<long>(rng() % 16), 4);
    }
    auto chosen = bigonlab::SelectSeparated(segs, a);
    Rational input = 0, kept = 0;
    for (const auto& s : segs) input += s.length();
    for (const auto& s : chosen) kept += s.length();
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        c.Expect(bigonlab::SegmentGap(chosen[i], chosen[j]) > a, "selected segments too close");
    c.Expect(3 * kept >= input, "selection below a third of the input");
    std::vector<std::pair<mpq_class, mpq_class>> raw;
    for (const auto& s : segs) raw.push_back({s.lo, s.hi});
    Rational best = oracle::BruteForceSeparated(raw, a);
    c.Expect(kept <= best, "selection beats the exhaustive optimum");
    Rational fraction = kept / input;
    if (fraction < worst) worst = fraction;
  }
  return {true, "1000+1000 inputs, worst kept fraction " + worst.get_str() + " >= 1/3"};
}

Outcome Criterion9(Checker& c) {
  const std::vector<Invocation> runs = g_runs;
  for (const auto& run : runs) {
    auto args = run.args;
    args.push_back("--jobs");
    args.push_back("4");
    std::ostringstream out, err;
    const int code = bigonlab::cli::Run(args, out, err);
    c.Expect(code == 0, "jobs=4 run failed: " + args[0]);
    if (code == 0) c.Expect(Payload(out.str()) == run.payload, "payload differs with --jobs 4: " + args[0]);
  }
  return {true, std::to_string(runs.size()) + " payloads byte-identical with --jobs 4"};
}

}  // namespace

int main() {
  struct Entry {
    int number;
    double limit_seconds;
    std::function<Outcome(Checker&)> run;
  };
  const std::vector<Entry> criteria = {
      {1, 10, Criterion1}, {2, 5, Criterion2},   {3, 120, Criterion3}, {4, 300, Criterion4}, {5, 5, Criterion5},
      {6, 120, Criterion6}, {7, 180, Criterion7}, {8, 30, Criterion8},  {9, 1200, Criterion9}};
  int failures = 0;
  for (const Entry& e : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = e.run(checker);
    } catch (const std::exception& ex) {
      checker.Expect(false, std::string("exception: ") + ex.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checker.Expect(seconds < e.limit_seconds, "runtime over " + std::to_string(e.limit_seconds) + " s");
    const bool pass = outcome.pass && checker.failure().empty();
    failures += !pass;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << "criterion " << e.number << ": " << (pass ? "PASS" : "FAIL") << " [" << time.str() << " s] "
              << (pass ? outcome.detail : checker.failure()) << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
