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

// Explicit 132-representants: trees through the pre-order recursion, paths
// and cycles, and the complete list of 132-representants of K_n.

#ifndef REP132_CONSTRUCTIONS_H_
#define REP132_CONSTRUCTIONS_H_

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "rep132/graph.h"
#include "rep132/word.h"

namespace rep132 {

// A rooted tree on 1..n with ordered children.
class RootedTree {
 public:
  // `parent_child` lists every edge as (parent, child); the order of pairs
  // with the same parent is the left-to-right order of its children.
  // Throws std::invalid_argument unless the pairs form a tree rooted at
  // `root` spanning 1..n.
  RootedTree(int n, int root, std::span<const std::pair<int, int>> parent_child);

  int order() const { return n_; }
  int root() const { return root_; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  std::optional<int> parent(int v) const;

  // Vertices in pre-order: root, then each subtree left to right.
  std::vector<int> PreorderSequence() const;
  bool IsPreorderLabeled() const;
  LabeledGraph ToGraph() const;
  std::vector<std::pair<int, int>> ParentChildPairs() const;

 private:
  int n_;
  int root_;
  std::vector<std::vector<int>> children_;  // indexed by label, [0] unused
  std::vector<int> parent_;                 // 0 for the root
};

// Labeling that sends the k-th vertex in pre-order to k.
Labeling PreorderLabeling(const RootedTree& t);
RootedTree PreorderLabel(const RootedTree& t);

// w(T) = w(T_r) ... w(T_1) 1 n_1 ... n_r for the subtrees T_1..T_r of the
// root, recursively. The root occurs once, every other label twice. Throws
// std::invalid_argument unless `t` is pre-order labeled.
Word TreeRepresentant(const RootedTree& t);

// n (n-1) n (n-2) (n-1) ... 1 2; n >= 1.
Word PathRepresentant(int n);
// The path word without its first letter; n >= 3.
Word CycleRepresentant(int n);

// 2 + C_{n-2} + sum_{i=0}^{n} C_i; throws std::invalid_argument for n < 3.
BigInt KnCount(int n);

enum class KnCase {
  k11,  // (n-1) n 1 2 ... n 1
  k12,  // (n-1) n w' (n-1) n, w' in Av_{n-2}(132)
  k13,  // n 1 2 ... n 1
  k14,  // n w' n, w' in Av_{n-1}(132)
  k21,  // w' in Av_n(132)
  k22,  // i (i+1) ... n w' i, w' in Av_{i-1}(132), 1 <= i <= n-1
  kSmall,  // K_1 and K_2: every word up to the caller's length bound
};

std::string_view ToString(KnCase c);

struct KnRepertoire {
  int n = 0;
  std::map<KnCase, std::vector<Word>> words;
  BigInt total = 0;

  std::vector<Word> AllWords() const;
};

// Every 132-representant of K_n, grouped by case. For n >= 3 the groups are
// checked to be pairwise disjoint and to total KnCount(n); a failure throws
// std::logic_error. For n <= 2 the families are infinite and `length_bound`
// (required) caps the word length; it is ignored for n >= 3.
KnRepertoire KnEnumerate(int n, std::optional<int> length_bound = std::nullopt);

// 132-avoiding permutations of 1..n in lexicographic order.
std::vector<Word> Av132Permutations(int n);
void ForEachAv132Permutation(int n, const std::function<void(const Word&)>& visit);

}  // namespace rep132

#endif  // REP132_CONSTRUCTIONS_H_
