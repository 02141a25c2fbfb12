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

#include "rep132/representation.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rep132 {
namespace {

bool GaplessAlphabet(const Word& w) {
  const std::vector<Letter> a = w.Alphabet();
  return a.empty() || (a.front() == 1 && a.back() == static_cast<Letter>(a.size()));
}

// alternates[(x - 1) * n + (y - 1)] for letters 1..n, computed from position
// lists in one pass per pair.
std::vector<bool> AlternationTable(const Word& w, int n) {
  std::vector<std::vector<std::size_t>> positions(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < w.size(); ++i) positions[w[i]].push_back(i);
  std::vector<bool> table(static_cast<std::size_t>(n) * n, false);
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      const auto& px = positions[x];
      const auto& py = positions[y];
      bool ok = px.size() <= py.size() + 1 && py.size() <= px.size() + 1;
      std::size_t i = 0, j = 0;
      int last = 0;
      while (ok && (i < px.size() || j < py.size())) {
        const bool take_x = j == py.size() || (i < px.size() && px[i] < py[j]);
        const int cur = take_x ? x : y;
        ok = cur != last;
        last = cur;
        take_x ? ++i : ++j;
      }
      table[(x - 1) * n + (y - 1)] = table[(y - 1) * n + (x - 1)] = ok;
    }
  }
  return table;
}

}  // namespace

std::string_view ToString(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::kEdgeNotAlternating:
      return "edge-not-alternating";
    case ViolationReason::kNonEdgeAlternating:
      return "nonedge-alternating";
    case ViolationReason::kAlphabetMismatch:
      return "alphabet-mismatch";
  }
  return "unknown";
}

LabeledGraph GraphFromWord(const Word& w) {
  if (!GaplessAlphabet(w)) {
    throw std::invalid_argument("alphabet of " + w.ToString() +
                                " is not {1..n}; reduce the word first");
  }
  const int n = w.MaxLetter();
  const std::vector<bool> table = AlternationTable(w, n);
  std::vector<Edge> edges;
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      if (table[(x - 1) * n + (y - 1)]) edges.push_back({x, y});
    }
  }
  return LabeledGraph(n, std::move(edges));
}

RepresentationCheck Represents(const Word& w, const LabeledGraph& g) {
  RepresentationCheck check{w, g, false, std::nullopt};
  const int n = g.order();
  if (!GaplessAlphabet(w) || w.MaxLetter() != n) {
    check.first_violation = Violation{std::nullopt, ViolationReason::kAlphabetMismatch};
    return check;
  }
  const std::vector<bool> table = AlternationTable(w, n);
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      const bool alternating = table[(x - 1) * n + (y - 1)];
      const bool edge = g.Adjacent(x, y);
      if (alternating != edge) {
        check.first_violation =
            Violation{Edge{x, y}, edge ? ViolationReason::kEdgeNotAlternating
                                       : ViolationReason::kNonEdgeAlternating};
        return check;
      }
    }
  }
  check.verdict = true;
  return check;
}

bool Is132Representant(const Word& w, const LabeledGraph& g) {
  return Represents(w, g).verdict && Avoids(w, Pattern::P132());
}

Word CombineComponents(std::span<const Word> words) {
  std::vector<std::vector<Letter>> shifted;
  Letter offset = 0;
  for (const Word& w : words) {
    if (!IsKUniform(w, 2)) {
      throw std::invalid_argument("component word " + w.ToString() +
                                  " is not 2-uniform");
    }
    if (!Avoids(w, Pattern::P132())) {
      throw std::invalid_argument("component word " + w.ToString() +
                                  " contains 132");
    }
    const Word reduced = Reduce(w);
    std::vector<Letter> block(reduced.begin(), reduced.end());
    for (Letter& x : block) x += offset;
    offset += static_cast<Letter>(w.Alphabet().size());
    shifted.push_back(std::move(block));
  }
  std::vector<Letter> out;
  for (auto it = shifted.rbegin(); it != shifted.rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  return Word(std::move(out));
}

Word AddIsolated(const Word& w) {
  if (!Avoids132(w)) {
    throw std::invalid_argument("AddIsolated expects a 132-avoiding word, got " +
                                w.ToString());
  }
  const Letter fresh = w.MaxLetter() + 1;
  std::vector<Letter> out{fresh, fresh};
  out.insert(out.end(), w.begin(), w.end());
  return Word(std::move(out));
}

Word RemoveVertexWord(const Word& w, Letter x) {
  if (Occurrences(w, x) == 0) {
    throw std::invalid_argument("letter " + std::to_string(x) +
                                " does not occur in " + w.ToString());
  }
  std::vector<Letter> out;
  std::copy_if(w.begin(), w.end(), std::back_inserter(out),
               [x](Letter c) { return c != x; });
  return Word(std::move(out));
}

}  // namespace rep132
