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

#include "bigonlab/wordproblem.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include "bigonlab/error.hpp"

namespace bigonlab {

std::string ToString(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kFreeReduction: return "free_reduction";
    case StrategyKind::kRewritingSystem: return "rewriting_system";
    case StrategyKind::kDehnGreedy: return "dehn_greedy";
  }
  return "unknown";
}

namespace {

// Trie over words; each node may terminate one entry. Used reversed (suffix
// matching on a reduction stack) for rewriting and forward for Dehn.
class WordTrie {
 public:
  explicit WordTrie(int letter_count) : letters_(letter_count) { NewNode(); }

  void Insert(std::span<const Letter> key, int value, bool reversed) {
    int node = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
      Letter x = key[reversed ? key.size() - 1 - i : i];
      int& child = children_[static_cast<std::size_t>(node) * letters_ + x];
      if (child < 0) {
        int fresh = NewNode();
        children_[static_cast<std::size_t>(node) * letters_ + x] = fresh;
        node = fresh;
      } else {
        node = child;
      }
    }
    value_[node] = value;
    max_depth_ = std::max(max_depth_, key.size());
  }

  void Erase(std::span<const Letter> key, bool reversed) {
    int node = Find(key, reversed);
    if (node >= 0) value_[node] = -1;
  }

  int Child(int node, Letter x) const {
    return children_[static_cast<std::size_t>(node) * letters_ + x];
  }
  int Value(int node) const { return value_[node]; }
  std::size_t max_depth() const { return max_depth_; }

 private:
  int NewNode() {
    children_.resize(children_.size() + letters_, -1);
    value_.push_back(-1);
    return static_cast<int>(value_.size()) - 1;
  }
  int Find(std::span<const Letter> key, bool reversed) const {
    int node = 0;
    for (std::size_t i = 0; i < key.size() && node >= 0; ++i)
      node = Child(node, key[reversed ? key.size() - 1 - i : i]);
    return node;
  }

  int letters_;
  std::vector<int> children_;
  std::vector<int> value_;
  std::size_t max_depth_ = 0;
};

// Index of the rule whose lhs is the shortest suffix of `stack`, or -1.
int MatchSuffix(const WordTrie& trie, const std::vector<Letter>& stack) {
  int node = 0;
  std::size_t depth = std::min(stack.size(), trie.max_depth());
  for (std::size_t k = 0; k < depth; ++k) {
    node = trie.Child(node, stack[stack.size() - 1 - k]);
    if (node < 0) return -1;
    if (trie.Value(node) >= 0) return trie.Value(node);
  }
  return -1;
}

// Stack-based reduction: push letters, rewrite whenever a suffix matches.
void ReduceInto(const WordTrie& trie, const std::vector<RewriteRule>& rules,
                std::vector<Letter>& stack, std::vector<Letter> pending_reversed) {
  while (!pending_reversed.empty()) {
    stack.push_back(pending_reversed.back());
    pending_reversed.pop_back();
    int r = MatchSuffix(trie, stack);
    if (r < 0) continue;
    const RewriteRule& rule = rules[static_cast<std::size_t>(r)];
    stack.resize(stack.size() - rule.lhs.size());
    for (std::size_t i = rule.rhs.size(); i-- > 0;) pending_reversed.push_back(rule.rhs[i]);
  }
}

std::vector<RewriteRule> FreeCancellationRules(int letter_count) {
  std::vector<RewriteRule> out;
  for (int x = 0; x < letter_count; ++x) {
    Letter l = static_cast<Letter>(x);
    out.push_back({Word{l, Inverse(l)}, Word{}});
  }
  return out;
}

bool Contains(const Word& haystack, const Word& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

}  // namespace

struct Strategy::Impl {
  StrategyKind kind;
  bool certified = false;
  std::size_t cap = 0;
  int letter_count = 0;
  std::vector<RewriteRule> rules;
  WordTrie suffix_trie{1};
  // Dehn: prefixes of symmetrized relators longer than half, keyed forward.
  std::vector<RewriteRule> dehn_rules;
  WordTrie prefix_trie{1};

  void Compile() {
    suffix_trie = WordTrie(std::max(letter_count, 1));
    for (std::size_t i = 0; i < rules.size(); ++i)
      suffix_trie.Insert(rules[i].lhs.letters(), static_cast<int>(i), /*reversed=*/true);
  }

  Word Rewrite(const Word& w) const {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    std::vector<Letter> pending(w.begin(), w.end());
    std::reverse(pending.begin(), pending.end());
    ReduceInto(suffix_trie, rules, stack, std::move(pending));
    return Word(std::move(stack));
  }

  Word Dehn(const Word& input) const {
    Word w = FreeReduce(input);
    for (;;) {
      bool replaced = false;
      for (std::size_t i = 0; i < w.size() && !replaced; ++i) {
        int node = 0, best = -1;
        for (std::size_t j = i; j < w.size(); ++j) {
          node = prefix_trie.Child(node, w[j]);
          if (node < 0) break;
          if (prefix_trie.Value(node) >= 0) best = prefix_trie.Value(node);
        }
        if (best < 0) continue;
        const RewriteRule& rule = dehn_rules[static_cast<std::size_t>(best)];
        Word next = w.Slice(0, i);
        next += rule.rhs;
        next += w.Slice(i + rule.lhs.size(), w.size() - i - rule.lhs.size());
        w = FreeReduce(next);
        replaced = true;
      }
      if (!replaced) return w;
    }
  }
};

Strategy Strategy::FreeReduction(const Presentation& p) {
  auto impl = std::make_shared<Impl>();
  impl->kind = StrategyKind::kFreeReduction;
  impl->certified = p.relators().empty();
  impl->letter_count = p.letter_count();
  impl->rules = FreeCancellationRules(p.letter_count());
  impl->Compile();
  return Strategy(std::move(impl));
}

Strategy Strategy::DehnGreedy(const Presentation& p) {
  Presentation sym = p.symmetrized() ? p : Symmetrize(p);
  auto impl = std::make_shared<Impl>();
  impl->kind = StrategyKind::kDehnGreedy;
  impl->letter_count = p.letter_count();
  impl->certified = SmallCancellationRatio(sym) < Rational(1, 6);
  // For each prefix u > half of a relator r = u v, rule u -> v^-1. Among
  // rules with the same lhs keep the shortlex-least replacement.
  std::map<Word, Word> best;
  for (const Word& r : sym.relators()) {
    for (std::size_t k = r.size() / 2 + 1; k <= r.size(); ++k) {
      Word lhs = r.Slice(0, k);
      Word rhs = Invert(r.Slice(k, r.size() - k));
      auto [it, inserted] = best.emplace(lhs, rhs);
      if (!inserted && rhs < it->second) it->second = rhs;
    }
  }
  impl->prefix_trie = WordTrie(std::max(impl->letter_count, 1));
  for (auto& [lhs, rhs] : best) {
    impl->prefix_trie.Insert(lhs.letters(), static_cast<int>(impl->dehn_rules.size()),
                             /*reversed=*/false);
    impl->dehn_rules.push_back({lhs, rhs});
  }
  impl->Compile();
  return Strategy(std::move(impl));
}

StrategyKind Strategy::kind() const { return impl_->kind; }
bool Strategy::certified() const { return impl_->certified; }
bool Strategy::canonical() const {
  return impl_->certified && impl_->kind != StrategyKind::kDehnGreedy;
}
const std::vector<RewriteRule>& Strategy::rules() const { return impl_->rules; }
std::size_t Strategy::completion_cap() const { return impl_->cap; }
int Strategy::letter_count() const { return impl_->letter_count; }

Word Strategy::NormalForm(const Word& w) const {
  if (impl_->kind == StrategyKind::kDehnGreedy) {
    if (!impl_->certified)
      Fail(ErrorKind::kRefused,
           "Dehn reduction is not applicable: presentation is not C'(1/6)");
    return impl_->Dehn(w);
  }
  return impl_->Rewrite(w);
}

Word Strategy::NormalFormAppend(const Word& normal_prefix, Letter x) const {
  if (impl_->kind == StrategyKind::kDehnGreedy) return NormalForm(normal_prefix + Word{x});
  std::vector<Letter> stack(normal_prefix.begin(), normal_prefix.end());
  ReduceInto(impl_->suffix_trie, impl_->rules, stack, {x});
  return Word(std::move(stack));
}

std::string Strategy::Describe() const {
  std::string out = ToString(impl_->kind);
  if (impl_->kind == StrategyKind::kRewritingSystem)
    out += " (" + std::to_string(impl_->rules.size()) + " rules, cap " +
           std::to_string(impl_->cap) + ")";
  out += impl_->certified ? ", certified" : ", uncertified";
  return out;
}

Rational SmallCancellationRatio(const Presentation& p) {
  Presentation sym = p.symmetrized() ? p : Symmetrize(p);
  const auto& rels = sym.relators();
  Rational best(0);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (std::size_t j = 0; j < rels.size(); ++j) {
      if (i == j) continue;
      const Word& a = rels[i];
      const Word& b = rels[j];
      std::size_t k = 0;
      while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
      Rational ratio(static_cast<long>(k), static_cast<long>(a.size()));
      ratio.canonicalize();
      if (ratio > best) best = ratio;
    }
  }
  return best;
}

Strategy CompleteRewriting(const Presentation& p, std::size_t cap) {
  const Presentation sym = p.symmetrized() ? p : Symmetrize(p);
  const int letters = p.letter_count();

  std::vector<RewriteRule> rules = FreeCancellationRules(letters);
  std::vector<bool> alive(rules.size(), true);
  const std::size_t free_rule_count = rules.size();
  WordTrie trie(std::max(letters, 1));
  for (std::size_t i = 0; i < rules.size(); ++i)
    trie.Insert(rules[i].lhs.letters(), static_cast<int>(i), /*reversed=*/true);

  auto reduce = [&](const Word& w) {
    std::vector<Letter> stack;
    std::vector<Letter> pending(w.begin(), w.end());
    std::reverse(pending.begin(), pending.end());
    ReduceInto(trie, rules, stack, std::move(pending));
    return Word(std::move(stack));
  };

  // Pending equations, shortest first; the sequence number keeps ties FIFO.
  using Equation = std::tuple<std::size_t, std::size_t, Word, Word>;
  std::priority_queue<Equation, std::vector<Equation>, std::greater<>> pending;
  std::size_t seq = 0;
  auto push = [&](Word a, Word b) {
    std::size_t len = std::max(a.size(), b.size());
    pending.emplace(len, seq++, std::move(a), std::move(b));
  };
  for (const Word& r : sym.relators()) {
    std::size_t half = r.size() / 2 + 1;
    push(r.Slice(0, half), Invert(r.Slice(half, r.size() - half)));
  }

  std::size_t derived = 0;
  bool exhausted = false;
  while (!pending.empty()) {
    auto [len, order, a0, b0] = pending.top();
    pending.pop();
    Word a = reduce(a0);
    Word b = reduce(b0);
    if (a == b) continue;
    if (a < b) std::swap(a, b);
    if (derived + 1 > cap) {
      exhausted = true;
      break;
    }
    const std::size_t k = rules.size();
    rules.push_back({a, b});
    alive.push_back(true);
    ++derived;
    trie.Insert(a.letters(), static_cast<int>(k), /*reversed=*/true);

    for (std::size_t j = 0; j < k; ++j) {
      if (!alive[j]) continue;
      if (Contains(rules[j].lhs, a)) {
        alive[j] = false;
        trie.Erase(rules[j].lhs.letters(), /*reversed=*/true);
        if (j >= free_rule_count) --derived;
        push(rules[j].lhs, rules[j].rhs);
      } else if (Contains(rules[j].rhs, a)) {
        rules[j].rhs = reduce(rules[j].rhs);
      }
    }

    // Critical pairs from proper overlaps: suffix of one lhs = prefix of other.
    auto overlaps = [&](std::size_t i, std::size_t j) {
      const Word& l1 = rules[i].lhs;
      const Word& l2 = rules[j].lhs;
      for (std::size_t o = 1; o < std::min(l1.size(), l2.size()); ++o) {
        if (!std::equal(l1.end() - static_cast<long>(o), l1.end(), l2.begin())) continue;
        // l1[..-o] l2 rewrites two ways.
        Word left = rules[i].rhs + l2.Slice(o, l2.size() - o);
        Word right = l1.Slice(0, l1.size() - o) + rules[j].rhs;
        push(std::move(left), std::move(right));
      }
    };
    for (std::size_t j = 0; j <= k; ++j) {
      if (!alive[j]) continue;
      overlaps(k, j);
      if (j != k) overlaps(j, k);
    }
  }

  auto impl = std::make_shared<Strategy::Impl>();
  impl->kind = StrategyKind::kRewritingSystem;
  impl->certified = !exhausted;
  impl->cap = cap;
  impl->letter_count = letters;
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (alive[i]) impl->rules.push_back({rules[i].lhs, reduce(rules[i].rhs)});
  std::sort(impl->rules.begin(), impl->rules.end(),
            [](const RewriteRule& x, const RewriteRule& y) { return x.lhs < y.lhs; });
  impl->Compile();
  return Strategy(std::move(impl));
}

Strategy ChooseStrategy(const Presentation& p, std::size_t cap) {
  if (p.relators().empty()) return Strategy::FreeReduction(p);
  Strategy rewriting = CompleteRewriting(p, cap);
  if (rewriting.certified()) return rewriting;
  Strategy dehn = Strategy::DehnGreedy(p);
  if (dehn.certified()) return dehn;
  return rewriting;
}

bool WordsEqual(const Strategy& s, const Word& u, const Word& v) {
  if (!s.certified())
    Fail(ErrorKind::kRefused, "word equality needs a certified strategy, got " + s.Describe());
  if (s.kind() == StrategyKind::kDehnGreedy)
    return s.NormalForm(u + Invert(v)).empty();
  return s.NormalForm(u) == s.NormalForm(v);
}

}  // namespace bigonlab
