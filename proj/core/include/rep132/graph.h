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

// Simple graphs whose vertex labels are exactly 1..n, the standard families
// used throughout the project, relabelings, and brute-force canonical forms
// for small orders.

#ifndef REP132_GRAPH_H_
#define REP132_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace rep132 {

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple graph on vertices 1..n. Edges are stored normalized
// (u < v) and sorted.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);
  // Throws std::invalid_argument on loops, duplicate edges or endpoints
  // outside 1..n.
  LabeledGraph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool Adjacent(int u, int v) const {
    return adjacency_[static_cast<std::size_t>((u - 1) * n_ + (v - 1))] != 0;
  }
  std::vector<int> Neighbors(int v) const;

  std::string DebugString() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
};

// A bijection of 1..n. image()[v - 1] is the new label of old vertex v.
class Labeling {
 public:
  Labeling() = default;
  // Throws std::invalid_argument unless `image` is a permutation of 1..n.
  explicit Labeling(std::vector<int> image);
  static Labeling Identity(int n);

  int operator()(int v) const { return image_[static_cast<std::size_t>(v - 1)]; }
  int size() const { return static_cast<int>(image_.size()); }
  std::span<const int> image() const { return image_; }

  Labeling Inverse() const;
  // (this ∘ inner)(v) = this(inner(v)).
  Labeling After(const Labeling& inner) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> image_;
};

// Throws std::out_of_range unless 1 <= v <= n.
int Degree(const LabeledGraph& g, int v);

LabeledGraph Edgeless(int n);
LabeledGraph Complete(int n);
// Vertices 1..n around the cycle; n >= 3.
LabeledGraph Cycle(int n);
// Vertices 1..n along the path; n >= 1.
LabeledGraph Path(int n);
// Rim 1..n (n >= 3), apex n + 1.
LabeledGraph Wheel(int n);
// Cycles 1..n and n+1..2n with rungs i -- n+i; n >= 3.
LabeledGraph Prism(int n);
// Center 1, leaves 2..k+1; k >= 1.
LabeledGraph Star(int k);
// Vertices of `b` are shifted up by a.order().
LabeledGraph DisjointUnion(const LabeledGraph& a, const LabeledGraph& b);

// Maps every edge {u, v} to {sigma(u), sigma(v)}.
LabeledGraph Relabel(const LabeledGraph& g, const Labeling& sigma);

// Order bound for the brute-force routines below.
inline constexpr int kMaxCanonicalOrder = 10;

// The relabeling of `g` whose sorted edge list is lexicographically smallest.
// Two graphs are isomorphic iff their canonical forms are equal. Throws
// std::invalid_argument when n > kMaxCanonicalOrder.
LabeledGraph CanonicalForm(const LabeledGraph& g);
// A labeling sigma with Relabel(g, sigma) == CanonicalForm(g).
Labeling CanonicalLabeling(const LabeledGraph& g);
bool Isomorphic(const LabeledGraph& a, const LabeledGraph& b);

// All sigma with Relabel(g, sigma) == g, in lexicographic order.
std::vector<Labeling> Automorphisms(const LabeledGraph& g);

inline constexpr int kMaxEnumerationOrder = 7;

// One canonical representative per isomorphism class on n vertices, ordered
// by (edge count, edge list). Throws std::invalid_argument unless
// 0 <= n <= kMaxEnumerationOrder.
std::vector<LabeledGraph> EnumerateGraphs(int n, bool isolate_free);
void ForEachGraph(int n, bool isolate_free,
                  const std::function<void(const LabeledGraph&)>& visit);

// Orders canonical graphs for catalogs.
bool CatalogLess(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace rep132

#endif  // REP132_GRAPH_H_
