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
#include <memory>
#include <string>
#include <vector>

#include "bigonlab/presentation.hpp"
#include "bigonlab/rational.hpp"

namespace bigonlab {

enum class StrategyKind { kFreeReduction, kRewritingSystem, kDehnGreedy };

std::string ToString(StrategyKind kind);

struct RewriteRule {
  Word lhs;
  Word rhs;
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

/// A word-problem solver for one presentation. Immutable and cheap to copy;
/// copies share the compiled rule set.
///
/// certified() means NormalForm is canonical: two words are equal in the
/// group iff their normal forms coincide letterwise. For kDehnGreedy the
/// reduced word is not canonical, so equality goes through Dehn reduction of
/// u * v^-1 instead (see WordsEqual).
class Strategy {
 public:
  /// Free cancellation only. Certified iff the presentation has no relators.
  static Strategy FreeReduction(const Presentation& p);
  /// Dehn's algorithm over the symmetrized relators. Certified iff the
  /// presentation satisfies C'(1/6).
  static Strategy DehnGreedy(const Presentation& p);

  StrategyKind kind() const;
  bool certified() const;
  /// True when NormalForm output is canonical (equality by comparison).
  bool canonical() const;
  /// Rewriting rules, free-cancellation rules included. Empty for Dehn.
  const std::vector<RewriteRule>& rules() const;
  /// Completion cap the rewriting system was built with (0 otherwise).
  std::size_t completion_cap() const;
  int letter_count() const;

  Word NormalForm(const Word& w) const;
  /// Normal form of (prefix * x) where prefix is already a normal form.
  /// Equivalent to NormalForm(prefix + x); cheaper for rewriting systems.
  Word NormalFormAppend(const Word& normal_prefix, Letter x) const;

  std::string Describe() const;

  struct Impl;

 private:
  explicit Strategy(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend Strategy CompleteRewriting(const Presentation& p, std::size_t cap);

  std::shared_ptr<const Impl> impl_;
};

/// Largest |piece| / |relator| over pieces (maximal common prefixes of two
/// distinct symmetrized relators). Symmetrizes p first if needed.
Rational SmallCancellationRatio(const Presentation& p);

/// Shortlex Knuth-Bendix completion. `cap` bounds the number of rules beyond
/// the free-cancellation rules; exceeding it yields an uncertified system.
Strategy CompleteRewriting(const Presentation& p, std::size_t cap);

/// Picks the strongest certified strategy: free reduction for free groups,
/// then a completed rewriting system within `cap`, then Dehn for C'(1/6).
/// Falls back to the uncertified rewriting system.
Strategy ChooseStrategy(const Presentation& p, std::size_t cap = 2000);

/// Refuses (kRefused) when the strategy cannot decide equality.
bool WordsEqual(const Strategy& s, const Word& u, const Word& v);

}  // namespace bigonlab
