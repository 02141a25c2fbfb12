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

#include "rep132/graph.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rep132 {
namespace {

void RequireMinimum(const char* family, int n, int minimum) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(family) + " needs n >= " +
                                std::to_string(minimum) + ", got " +
                                std::to_string(n));
  }
}

void RequireCanonicalBound(const LabeledGraph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument(
        "brute-force canonicalization supports n <= " +
        std::to_string(kMaxCanonicalOrder) + ", got " +
        std::to_string(g.order()));
  }
}

// Adjacency rows as bitmasks over 0-based vertices.
std::vector<std::uint32_t> AdjacencyRows(const LabeledGraph& g) {
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u - 1] |= 1u << (e.v - 1);
    rows[e.v - 1] |= 1u << (e.u - 1);
  }
  return rows;
}

// Bit string of the upper triangle under the vertex order `order`
// (order[label - 1] = vertex), pair (1,2) most significant. Maximizing this
// key is the same as minimizing the sorted edge list, since both compare the
// first pair on which the edge sets differ.
std::uint64_t TriangleKey(const std::vector<std::uint32_t>& rows,
                          const std::vector<int>& order) {
  std::uint64_t key = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t row = rows[order[i]];
    for (std::size_t j = i + 1; j < n; ++j) {
      key = (key << 1) | ((row >> order[j]) & 1u);
    }
  }
  return key;
}

LabeledGraph AddVertex(const LabeledGraph& g, std::uint32_t neighborhood) {
  const int n = g.order() + 1;
  std::vector<Edge> edges = g.edges();
  for (int v = 1; v < n; ++v) {
    if ((neighborhood >> (v - 1)) & 1u) edges.push_back({v, n});
  }
  return LabeledGraph(n, std::move(edges));
}

}  // namespace

LabeledGraph::LabeledGraph(int n) : LabeledGraph(n, {}) {}

LabeledGraph::LabeledGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  adjacency_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " outside 1.." +
                                  std::to_string(n));
    }
    auto& cell = adjacency_[static_cast<std::size_t>((e.u - 1) * n + (e.v - 1))];
    if (cell) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) +
                                  "-" + std::to_string(e.v));
    }
    cell = 1;
    adjacency_[static_cast<std::size_t>((e.v - 1) * n + (e.u - 1))] = 1;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

std::vector<int> LabeledGraph::Neighbors(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u) {
    if (u != v && Adjacent(v, u)) out.push_back(u);
  }
  return out;
}

std::string LabeledGraph::DebugString() const {
  std::ostringstream os;
  os << "n=" << n_ << " {";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    os << (i ? " " : "") << edges_[i].u << "-" << edges_[i].v;
  }
  os << "}";
  return os.str();
}

Labeling::Labeling(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size() + 1, false);
  for (int x : image_) {
    if (x < 1 || x > static_cast<int>(image_.size()) || hit[x]) {
      throw std::invalid_argument("labeling is not a permutation of 1..n");
    }
    hit[x] = true;
  }
}

Labeling Labeling::Identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Labeling(std::move(image));
}

Labeling Labeling::Inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t v = 0; v < image_.size(); ++v) {
    inv[image_[v] - 1] = static_cast<int>(v) + 1;
  }
  return Labeling(std::move(inv));
}

Labeling Labeling::After(const Labeling& inner) const {
  if (inner.size() != size()) {
    throw std::invalid_argument("composing labelings of different sizes");
  }
  std::vector<int> out(image_.size());
  for (std::size_t v = 0; v < image_.size(); ++v) {
    out[v] = (*this)(inner.image_[v]);
  }
  return Labeling(std::move(out));
}

int Degree(const LabeledGraph& g, int v) {
  if (v < 1 || v > g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(g.order()));
  }
  int d = 0;
  for (int u = 1; u <= g.order(); ++u) d += (u != v && g.Adjacent(u, v));
  return d;
}

LabeledGraph Edgeless(int n) { return LabeledGraph(n); }

LabeledGraph Complete(int n) {
  RequireMinimum("complete graph", n, 0);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph Cycle(int n) {
  RequireMinimum("cycle", n, 3);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, n});
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph Path(int n) {
  RequireMinimum("path", n, 1);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph Wheel(int n) {
  RequireMinimum("wheel", n, 3);
  std::vector<Edge> edges = Cycle(n).edges();
  for (int v = 1; v <= n; ++v) edges.push_back({v, n + 1});
  return LabeledGraph(n + 1, std::move(edges));
}

LabeledGraph Prism(int n) {
  RequireMinimum("prism", n, 3);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    const int next = i % n + 1;
    edges.push_back({i, next});
    edges.push_back({n + i, n + next});
    edges.push_back({i, n + i});
  }
  return LabeledGraph(2 * n, std::move(edges));
}

LabeledGraph Star(int k) {
  RequireMinimum("star", k, 1);
  std::vector<Edge> edges;
  for (int v = 2; v <= k + 1; ++v) edges.push_back({1, v});
  return LabeledGraph(k + 1, std::move(edges));
}

LabeledGraph DisjointUnion(const LabeledGraph& a, const LabeledGraph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    edges.push_back({e.u + a.order(), e.v + a.order()});
  }
  return LabeledGraph(a.order() + b.order(), std::move(edges));
}

LabeledGraph Relabel(const LabeledGraph& g, const Labeling& sigma) {
  if (sigma.size() != g.order()) {
    throw std::invalid_argument("labeling size does not match graph order");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({sigma(e.u), sigma(e.v)});
  return LabeledGraph(g.order(), std::move(edges));
}

Labeling CanonicalLabeling(const LabeledGraph& g) {
  RequireCanonicalBound(g);
  const int n = g.order();
  if (n <= 1) return Labeling::Identity(n);
  const std::vector<std::uint32_t> rows = AdjacencyRows(g);
  int max_degree = 0;
  for (std::uint32_t r : rows) max_degree = std::max(max_degree, std::popcount(r));

  // The best first row is 1^D 0^(n-1-D): label 1 goes to a vertex of maximum
  // degree D and its neighbors take labels 2..D+1. Everything else is
  // enumerated.
  std::uint64_t best_key = 0;
  std::vector<int> best_order;
  for (int first = 0; first < n; ++first) {
    if (std::popcount(rows[first]) != max_degree) continue;
    std::vector<int> near, far;
    for (int v = 0; v < n; ++v) {
      if (v == first) continue;
      ((rows[first] >> v) & 1u ? near : far).push_back(v);
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    order[0] = first;
    do {
      do {
        std::copy(near.begin(), near.end(), order.begin() + 1);
        std::copy(far.begin(), far.end(), order.begin() + 1 + near.size());
        const std::uint64_t key = TriangleKey(rows, order);
        if (best_order.empty() || key > best_key) {
          best_key = key;
          best_order = order;
        }
      } while (std::next_permutation(far.begin(), far.end()));
    } while (std::next_permutation(near.begin(), near.end()));
  }
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int label = 0; label < n; ++label) image[best_order[label]] = label + 1;
  return Labeling(std::move(image));
}

LabeledGraph CanonicalForm(const LabeledGraph& g) {
  return Relabel(g, CanonicalLabeling(g));
}

bool Isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         CanonicalForm(a) == CanonicalForm(b);
}

std::vector<Labeling> Automorphisms(const LabeledGraph& g) {
  RequireCanonicalBound(g);
  const int n = g.order();
  const std::vector<std::uint32_t> rows = AdjacencyRows(g);
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) degree[v] = std::popcount(rows[v]);

  std::vector<Labeling> out;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::uint32_t used = 0;
  auto assign = [&](auto&& self, int v) -> void {
    if (v == n) {
      std::vector<int> one_based(image.begin(), image.end());
      for (int& x : one_based) ++x;
      out.emplace_back(std::move(one_based));
      return;
    }
    for (int t = 0; t < n; ++t) {
      if ((used >> t) & 1u || degree[t] != degree[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = ((rows[u] >> v) & 1u) == ((rows[image[u]] >> t) & 1u);
      }
      if (!ok) continue;
      image[v] = t;
      used |= 1u << t;
      self(self, v + 1);
      used &= ~(1u << t);
    }
  };
  assign(assign, 0);
  return out;
}

bool CatalogLess(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.size() != b.size()) return a.size() < b.size();
  return a.edges() < b.edges();
}

std::vector<LabeledGraph> EnumerateGraphs(int n, bool isolate_free) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("graph enumeration supports 0 <= n <= " +
                                std::to_string(kMaxEnumerationOrder));
  }
  // Every graph on k vertices is a graph on k-1 vertices plus a vertex with
  // some neighborhood, so extending one representative per class of order
  // k-1 by every neighborhood reaches every class of order k.
  std::vector<LabeledGraph> classes{LabeledGraph(0)};
  for (int k = 1; k <= n; ++k) {
    std::map<std::vector<Edge>, LabeledGraph> next;
    for (const LabeledGraph& g : classes) {
      for (std::uint32_t s = 0; s < (1u << (k - 1)); ++s) {
        LabeledGraph canon = CanonicalForm(AddVertex(g, s));
        std::vector<Edge> key = canon.edges();
        next.try_emplace(std::move(key), std::move(canon));
      }
    }
    classes.clear();
    for (auto& [key, g] : next) classes.push_back(std::move(g));
  }
  if (isolate_free) {
    std::erase_if(classes, [](const LabeledGraph& g) {
      for (int v = 1; v <= g.order(); ++v) {
        if (Degree(g, v) == 0) return true;
      }
      return false;
    });
  }
  std::sort(classes.begin(), classes.end(), CatalogLess);
  return classes;
}

void ForEachGraph(int n, bool isolate_free,
                  const std::function<void(const LabeledGraph&)>& visit) {
  for (const LabeledGraph& g : EnumerateGraphs(n, isolate_free)) visit(g);
}

}  // namespace rep132
