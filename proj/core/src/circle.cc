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

#include "rep132/circle.h"

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rep132 {
namespace {

struct ChordFrame {
  std::array<std::uint8_t, kMaxCircleWitnessOrder + 1> count{};
  std::array<std::array<std::uint8_t, 2>, kMaxCircleWitnessOrder + 1> pos{};
  std::array<std::uint16_t, kMaxCircleWitnessOrder + 1> since{};
  std::uint16_t spent = 0;
};

// Chords x and y cross iff their endpoints interleave. Only meaningful once
// both letters are spent.
bool Crossing(const ChordFrame& f, int x, int y) {
  const int a = f.pos[x][0], b = f.pos[x][1];
  const int c = f.pos[y][0], d = f.pos[y][1];
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

class ChordSearcher {
 public:
  explicit ChordSearcher(const LabeledGraph& g) : n_(g.order()) {
    for (int x = 1; x <= n_; ++x) {
      for (int y = 1; y <= n_; ++y) {
        if (x != y && g.Adjacent(x, y)) adj_[x] |= static_cast<std::uint16_t>(1u << y);
      }
    }
  }

  std::optional<ChordDiagram> Run() {
    if (n_ == 0) return ChordDiagram{};
    word_.assign(static_cast<std::size_t>(2 * n_), 0);
    ChordFrame f;
    Push(f, 1, 0);
    word_[0] = 1;
    if (Visit(f, 1)) return ChordDiagram(word_);
    return std::nullopt;
  }

 private:
  void Push(ChordFrame& f, int x, int len) const {
    f.pos[x][f.count[x]] = static_cast<std::uint8_t>(len);
    ++f.count[x];
    const auto bit = static_cast<std::uint16_t>(1u << x);
    for (int z = 1; z <= n_; ++z) f.since[z] |= bit;
    f.since[x] = 0;
    if (f.count[x] == 2) f.spent |= bit;
  }

  bool Visit(const ChordFrame& f, int len) {
    if (len == 2 * n_) return true;  // every spent pair was checked on the way
    for (int x = 1; x <= n_; ++x) {
      if (f.count[x] == 2) continue;
      if (f.count[x] == 1 && (adj_[x] & ~f.since[x]) != 0) continue;
      ChordFrame next = f;
      Push(next, x, len);
      if (next.count[x] == 2 && !SpentPairsConsistent(next, x)) continue;
      word_[len] = x;
      if (Visit(next, len + 1)) return true;
    }
    return false;
  }

  // With x just spent, every other spent chord's relation to x is final.
  bool SpentPairsConsistent(const ChordFrame& f, int x) const {
    for (unsigned others = f.spent & ~(1u << x); others != 0; others &= others - 1) {
      const int y = std::countr_zero(others);
      if (Crossing(f, x, y) != (((adj_[x] >> y) & 1u) != 0)) return false;
    }
    return true;
  }

  int n_;
  std::array<std::uint16_t, kMaxCircleWitnessOrder + 1> adj_{};
  std::vector<Letter> word_;
};

}  // namespace

ChordDiagram::ChordDiagram(std::vector<Letter> endpoints)
    : endpoints_(std::move(endpoints)) {
  const Word w(endpoints_);
  n_ = w.MaxLetter();
  if (!IsKUniform(w, 2) || static_cast<int>(w.Alphabet().size()) != n_) {
    throw std::invalid_argument("chord endpoints " + w.ToString() +
                                " must use every letter 1..n exactly twice");
  }
}

std::pair<int, int> ChordDiagram::Chord(Letter x) const {
  int first = -1;
  for (int i = 0; i < static_cast<int>(endpoints_.size()); ++i) {
    if (endpoints_[i] != x) continue;
    if (first < 0) {
      first = i;
    } else {
      return {first, i};
    }
  }
  throw std::invalid_argument("no chord " + std::to_string(x));
}

ChordDiagram ChordDiagram::Rotated(int shift) const {
  const int len = static_cast<int>(endpoints_.size());
  if (len == 0) return *this;
  shift = ((shift % len) + len) % len;
  std::vector<Letter> out(endpoints_.begin() + shift, endpoints_.end());
  out.insert(out.end(), endpoints_.begin(), endpoints_.begin() + shift);
  return ChordDiagram(std::move(out));
}

ChordDiagram ChordsFromWord(const Word& w) {
  return ChordDiagram(std::vector<Letter>(w.begin(), w.end()));
}

LabeledGraph IntersectionGraph(const ChordDiagram& d) {
  const int n = d.chords();
  std::vector<std::pair<int, int>> chords(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) chords[x] = d.Chord(x);
  std::vector<Edge> edges;
  for (int x = 1; x <= n; ++x) {
    const auto [a, b] = chords[x];
    for (int y = x + 1; y <= n; ++y) {
      const auto [c, e] = chords[y];
      const int inside = (a < c && c < b) + (a < e && e < b);
      if (inside == 1) edges.push_back({x, y});
    }
  }
  return LabeledGraph(n, std::move(edges));
}

std::optional<ChordDiagram> CircleWitness(const LabeledGraph& g) {
  if (g.order() > kMaxCircleWitnessOrder) {
    throw std::invalid_argument("circle witness search supports n <= " +
                                std::to_string(kMaxCircleWitnessOrder));
  }
  return ChordSearcher(g).Run();
}

}  // namespace rep132
