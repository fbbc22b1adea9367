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

#include "bigonlab/presentation.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "bigonlab/error.hpp"

namespace bigonlab {

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::Slice(std::size_t from, std::size_t length) const {
  return Word(std::vector<Letter>(letters_.begin() + from,
                                  letters_.begin() + from + length));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.letters_ <=> b.letters_;
}

Word operator+(Word a, const Word& b) {
  a += b;
  return a;
}

Word Invert(const Word& w) {
  std::vector<Letter> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[w.size() - 1 - i] = Inverse(w[i]);
  return Word(std::move(out));
}

Word FreeReduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && stack.back() == Inverse(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack));
}

bool IsFreelyReduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == Inverse(w[i - 1])) return false;
  return true;
}

Word CyclicReduce(const Word& w) {
  Word r = FreeReduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == Inverse(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return r.Slice(lo, hi - lo);
}

bool IsCyclicallyReduced(const Word& w) {
  if (!IsFreelyReduced(w)) return false;
  return w.size() < 2 || w[0] != Inverse(w[w.size() - 1]);
}

Word Rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return Word(std::move(out));
}

Presentation::Presentation(std::string generators, std::vector<Word> relators,
                           bool symmetrized)
    : generators_(std::move(generators)),
      relators_(std::move(relators)),
      symmetrized_(symmetrized) {}

Word Presentation::ParseWord(std::string_view text) const {
  Word w;
  for (char c : text) {
    bool inverse = c >= 'A' && c <= 'Z';
    char lower = inverse ? static_cast<char>(c - 'A' + 'a') : c;
    auto pos = generators_.find(lower);
    if (lower < 'a' || lower > 'z' || pos == std::string::npos)
      Fail(ErrorKind::kParse, std::string("unknown symbol '") + c + "' in word '" +
                                  std::string(text) + "'");
    w.push_back(MakeLetter(static_cast<int>(pos), inverse));
  }
  return w;
}

char Presentation::Symbol(Letter x) const {
  char c = generators_.at(GeneratorOf(x));
  return IsInverse(x) ? static_cast<char>(c - 'a' + 'A') : c;
}

std::string Presentation::Format(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(Symbol(x));
  return out;
}

std::string Presentation::ToText() const {
  std::string out = "generators:";
  for (char g : generators_) {
    out += ' ';
    out += g;
  }
  out += "\nrelators:";
  for (const Word& r : relators_) out += ' ' + Format(r);
  out += '\n';
  return out;
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> Fields(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string f; in >> f;) out.push_back(f);
  return out;
}

}  // namespace

Presentation ParsePresentation(std::string_view text) {
  std::optional<std::string> generators;
  std::optional<std::vector<std::string>> relator_texts;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto colon = line.find(':');
    std::string_view key = colon == std::string_view::npos ? line : Trim(line.substr(0, colon));
    std::string_view rest = colon == std::string_view::npos ? "" : line.substr(colon + 1);
    if (key == "generators" && colon != std::string_view::npos) {
      if (generators) Fail(ErrorKind::kParse, "duplicate 'generators:' line");
      std::string gens;
      for (const std::string& g : Fields(rest)) {
        if (g.size() != 1 || g[0] < 'a' || g[0] > 'z')
          Fail(ErrorKind::kParse, "generator symbols must be single letters a-z, got '" + g + "'");
        if (gens.find(g[0]) != std::string::npos)
          Fail(ErrorKind::kParse, "duplicate generator symbol '" + g + "'");
        gens += g[0];
      }
      generators = gens;
    } else if (key == "relators" && colon != std::string_view::npos) {
      if (!generators) Fail(ErrorKind::kParse, "'relators:' before 'generators:'");
      if (relator_texts) Fail(ErrorKind::kParse, "duplicate 'relators:' line");
      relator_texts = Fields(rest);
    } else {
      Fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": unrecognized line '" +
                                  std::string(line) + "'");
    }
  }
  if (!generators) Fail(ErrorKind::kParse, "missing 'generators:' line");
  Presentation alphabet(*generators, {});
  std::vector<Word> relators;
  for (const std::string& r : relator_texts.value_or(std::vector<std::string>{})) {
    Word w = FreeReduce(alphabet.ParseWord(r));
    if (w.empty()) Fail(ErrorKind::kParse, "relator '" + r + "' is freely trivial");
    relators.push_back(std::move(w));
  }
  return Presentation(*generators, std::move(relators));
}

Presentation Symmetrize(const Presentation& p) {
  std::set<Word> closure;
  for (const Word& r : p.relators()) {
    Word base = CyclicReduce(r);
    if (base.empty()) continue;
    for (const Word& w : {base, Invert(base)})
      for (std::size_t k = 0; k < w.size(); ++k) closure.insert(Rotate(w, k));
  }
  return Presentation(p.generators(), std::vector<Word>(closure.begin(), closure.end()),
                      /*symmetrized=*/true);
}

std::string PresetText(std::string_view name) {
  if (name == "f2") return "# free group of rank 2\ngenerators: a b\nrelators:\n";
  if (name == "z2") return "# free abelian group of rank 2\ngenerators: a b\nrelators: abAB\n";
  if (name == "surface2")
    return "# fundamental group of the closed genus-2 surface\n"
           "generators: a c b d\nrelators: abABcdCD\n";
  Fail(ErrorKind::kInvalidArgument, "unknown preset '" + std::string(name) + "'");
}

}  // namespace bigonlab
