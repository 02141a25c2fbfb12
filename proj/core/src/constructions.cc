// Copyright 2026 The rep132 Authors
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

#include "rep132/constructions.h"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace rep132 {
namespace {

std::string PairText(int p, int c) {
  return std::to_string(p) + " " + std::to_string(c);
}

void AppendRange(std::vector<Letter>& out, Letter from, Letter to) {
  for (Letter x = from; x <= to; ++x) out.push_back(x);
}

// Appends w(T_v) for the subtree rooted at v.
void AppendSubtreeWord(const RootedTree& t, int v, std::vector<Letter>& out) {
  const std::vector<int>& kids = t.children(v);
  for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
    AppendSubtreeWord(t, *it, out);
  }
  out.push_back(v);
  out.insert(out.end(), kids.begin(), kids.end());
}

}  // namespace

RootedTree::RootedTree(int n, int root,
                       std::span<const std::pair<int, int>> parent_child)
    : n_(n),
      root_(root),
      children_(static_cast<std::size_t>(n > 0 ? n : 0) + 1),
      parent_(static_cast<std::size_t>(n > 0 ? n : 0) + 1, 0) {
  if (n < 1) throw std::invalid_argument("a tree needs at least one vertex");
  if (root < 1 || root > n) {
    throw std::invalid_argument("root " + std::to_string(root) + " outside 1.." +
                                std::to_string(n));
  }
  if (parent_child.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("a tree on " + std::to_string(n) +
                                " vertices has exactly " + std::to_string(n - 1) +
                                " edges");
  }
  for (const auto& [p, c] : parent_child) {
    if (p < 1 || p > n || c < 1 || c > n || p == c) {
      throw std::invalid_argument("bad tree edge " + PairText(p, c));
    }
    if (c == root || parent_[c] != 0) {
      throw std::invalid_argument("vertex " + std::to_string(c) +
                                  " has more than one parent");
    }
    parent_[c] = p;
    children_[p].push_back(c);
  }
  if (PreorderSequence().size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("tree edges do not connect every vertex to the root");
  }
}

std::optional<int> RootedTree::parent(int v) const {
  if (v == root_) return std::nullopt;
  return parent_[v];
}

std::vector<int> RootedTree::PreorderSequence() const {
  std::vector<int> order;
  std::vector<int> stack{root_};
  std::vector<bool> seen(children_.size(), false);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;  // only reachable through a cycle
    seen[v] = true;
    order.push_back(v);
    const auto& kids = children_[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

bool RootedTree::IsPreorderLabeled() const {
  const std::vector<int> order = PreorderSequence();
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

LabeledGraph RootedTree::ToGraph() const {
  std::vector<Edge> edges;
  for (int v = 1; v <= n_; ++v) {
    if (v != root_) edges.push_back({parent_[v], v});
  }
  return LabeledGraph(n_, std::move(edges));
}

std::vector<std::pair<int, int>> RootedTree::ParentChildPairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int v : PreorderSequence()) {
    for (int c : children_[v]) pairs.emplace_back(v, c);
  }
  return pairs;
}

Labeling PreorderLabeling(const RootedTree& t) {
  const std::vector<int> order = t.PreorderSequence();
  std::vector<int> image(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    image[order[i] - 1] = static_cast<int>(i) + 1;
  }
  return Labeling(std::move(image));
}

RootedTree PreorderLabel(const RootedTree& t) {
  const Labeling sigma = PreorderLabeling(t);
  std::vector<std::pair<int, int>> pairs = t.ParentChildPairs();
  for (auto& [p, c] : pairs) {
    p = sigma(p);
    c = sigma(c);
  }
  return RootedTree(t.order(), sigma(t.root()), pairs);
}

Word TreeRepresentant(const RootedTree& t) {
  if (!t.IsPreorderLabeled()) {
    throw std::invalid_argument("tree is not labeled in pre-order");
  }
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(2 * t.order() - 1));
  AppendSubtreeWord(t, t.root(), out);
  return Word(std::move(out));
}

Word PathRepresentant(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Letter> out{n};
  for (Letter k = n - 1; k >= 1; --k) {
    out.push_back(k);
    out.push_back(k + 1);
  }
  return Word(std::move(out));
}

Word CycleRepresentant(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  const Word path = PathRepresentant(n);
  return Word(std::vector<Letter>(path.begin() + 1, path.end()));
}

BigInt KnCount(int n) {
  if (n < 3) {
    throw std::invalid_argument("K_n has finitely many 132-representants only for n >= 3");
  }
  BigInt total = 2 + Catalan(static_cast<unsigned>(n - 2));
  for (int i = 0; i <= n; ++i) total += Catalan(static_cast<unsigned>(i));
  return total;
}

std::string_view ToString(KnCase c) {
  switch (c) {
    case KnCase::k11:
      return "1.1";
    case KnCase::k12:
      return "1.2";
    case KnCase::k13:
      return "1.3";
    case KnCase::k14:
      return "1.4";
    case KnCase::k21:
      return "2.1";
    case KnCase::k22:
      return "2.2";
    case KnCase::kSmall:
      return "small";
  }
  return "?";
}

std::vector<Word> KnRepertoire::AllWords() const {
  std::vector<Word> all;
  for (const auto& [tag, group] : words) all.insert(all.end(), group.begin(), group.end());
  return all;
}

KnRepertoire KnEnumerate(int n, std::optional<int> length_bound) {
  if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
  KnRepertoire rep;
  rep.n = n;

  if (n <= 2) {
    if (!length_bound) {
      throw std::invalid_argument("K_" + std::to_string(n) +
                                  " has infinitely many representants; a length bound is required");
    }
    auto& group = rep.words[KnCase::kSmall];
    for (int len = n; len <= *length_bound; ++len) {
      for (Letter first = 1; first <= n; ++first) {
        std::vector<Letter> w;
        for (int i = 0; i < len; ++i) w.push_back(n == 1 ? 1 : (first - 1 + i) % 2 + 1);
        group.emplace_back(std::move(w));
      }
    }
    rep.total = group.size();
    return rep;
  }

  // Case 1: n occurs twice.
  {
    std::vector<Letter> w{n - 1, n};
    AppendRange(w, 1, n);
    w.push_back(1);
    rep.words[KnCase::k11].emplace_back(std::move(w));
  }
  for (const Word& inner : Av132Permutations(n - 2)) {
    std::vector<Letter> w{n - 1, n};
    w.insert(w.end(), inner.begin(), inner.end());
    w.push_back(n - 1);
    w.push_back(n);
    rep.words[KnCase::k12].emplace_back(std::move(w));
  }
  {
    std::vector<Letter> w{n};
    AppendRange(w, 1, n);
    w.push_back(1);
    rep.words[KnCase::k13].emplace_back(std::move(w));
  }
  for (const Word& inner : Av132Permutations(n - 1)) {
    std::vector<Letter> w{n};
    w.insert(w.end(), inner.begin(), inner.end());
    w.push_back(n);
    rep.words[KnCase::k14].emplace_back(std::move(w));
  }
  // Case 2: n occurs once.
  rep.words[KnCase::k21] = Av132Permutations(n);
  auto& k22 = rep.words[KnCase::k22];
  for (Letter i = 1; i <= n - 1; ++i) {
    for (const Word& inner : Av132Permutations(i - 1)) {
      std::vector<Letter> w;
      AppendRange(w, i, n);
      w.insert(w.end(), inner.begin(), inner.end());
      w.push_back(i);
      k22.emplace_back(std::move(w));
    }
  }

  std::set<Word> distinct;
  std::size_t emitted = 0;
  for (const auto& [tag, group] : rep.words) {
    emitted += group.size();
    distinct.insert(group.begin(), group.end());
  }
  if (distinct.size() != emitted) {
    throw std::logic_error("K_" + std::to_string(n) +
                           " subcases overlap; the count formula assumes disjoint cases");
  }
  rep.total = emitted;
  if (rep.total != KnCount(n)) {
    throw std::logic_error("K_" + std::to_string(n) + " enumeration produced " +
                           std::to_string(emitted) + " words, formula gives " +
                           KnCount(n).str());
  }
  return rep;
}

void ForEachAv132Permutation(int n, const std::function<void(const Word&)>& visit) {
  if (n < 0 || n > Avoid132Tracker::kMaxLetter) {
    throw std::invalid_argument("permutation length out of range");
  }
  std::vector<Letter> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  std::uint64_t used = 0;
  auto extend = [&](auto&& self, const Avoid132Tracker& tracker) -> void {
    if (prefix.size() == static_cast<std::size_t>(n)) {
      visit(Word(prefix));
      return;
    }
    for (Letter x = 1; x <= n; ++x) {
      if ((used >> x) & 1u || tracker.WouldCreate132(x)) continue;
      Avoid132Tracker next = tracker;
      next.Push(x);
      used |= std::uint64_t{1} << x;
      prefix.push_back(x);
      self(self, next);
      prefix.pop_back();
      used &= ~(std::uint64_t{1} << x);
    }
  };
  extend(extend, Avoid132Tracker{});
}

std::vector<Word> Av132Permutations(int n) {
  std::vector<Word> out;
  ForEachAv132Permutation(n, [&](const Word& w) { out.push_back(w); });
  return out;
}

}  // namespace rep132
