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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bigonlab {

/// A generator or its inverse, encoded as 2*generator + (inverse ? 1 : 0).
/// The encoding doubles as the shortlex letter order: a < A < b < B < ...
using Letter = std::uint8_t;

constexpr Letter Inverse(Letter x) { return static_cast<Letter>(x ^ 1u); }
constexpr Letter MakeLetter(int generator, bool inverse) {
  return static_cast<Letter>(2 * generator + (inverse ? 1 : 0));
}
constexpr int GeneratorOf(Letter x) { return x >> 1; }
constexpr bool IsInverse(Letter x) { return (x & 1u) != 0; }

/// Element of the free monoid over generators and inverses. Value type;
/// equality is letterwise, ordering is shortlex.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }
  std::vector<Letter>& mutable_letters() { return letters_; }

  void push_back(Letter x) { letters_.push_back(x); }
  Word& operator+=(const Word& other);
  Word Slice(std::size_t from, std::size_t length) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex: shorter first, then lexicographic by letter code.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

Word operator+(Word a, const Word& b);

/// Formal inverse: reversed, every letter inverted. Not reduced.
Word Invert(const Word& w);
/// The unique freely reduced word equal to w in the free group.
Word FreeReduce(const Word& w);
bool IsFreelyReduced(const Word& w);
/// Freely reduces, then strips mutually inverse first/last letters.
Word CyclicReduce(const Word& w);
bool IsCyclicallyReduced(const Word& w);
/// Left rotation by k letters.
Word Rotate(const Word& w, std::size_t k);

/// A finite group presentation <X | R>. Generators are distinct letters a-z;
/// in word text the lowercase symbol is the generator, uppercase its inverse.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string generators, std::vector<Word> relators,
               bool symmetrized = false);

  const std::string& generators() const { return generators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  int letter_count() const { return 2 * generator_count(); }
  const std::vector<Word>& relators() const { return relators_; }
  bool symmetrized() const { return symmetrized_; }

  /// Parses word text over this alphabet; throws kParse on unknown symbols.
  Word ParseWord(std::string_view text) const;
  std::string Format(const Word& w) const;
  char Symbol(Letter x) const;

  /// Presentation-file text that parses back to this presentation.
  std::string ToText() const;

 private:
  std::string generators_;
  std::vector<Word> relators_;
  bool symmetrized_ = false;
};

/// Parses presentation-file text. Relators are stored freely reduced; a
/// relator that reduces to the empty word is rejected.
Presentation ParsePresentation(std::string_view text);

/// Closure of the cyclically reduced relators under inversion and cyclic
/// permutation, deduplicated and sorted shortlex.
Presentation Symmetrize(const Presentation& p);

/// Named built-in presentations: "f2", "z2", "surface2".
std::string PresetText(std::string_view name);

}  // namespace bigonlab
