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

// Chord diagrams. A 2-uniform word read around a circle places the two
// endpoints of chord x at the two positions of letter x; two chords cross
// exactly when their letters alternate, so the intersection graph of the
// diagram is the graph the word represents.

#ifndef REP132_CIRCLE_H_
#define REP132_CIRCLE_H_

#include <optional>
#include <vector>

#include "rep132/graph.h"
#include "rep132/word.h"

namespace rep132 {

class ChordDiagram {
 public:
  ChordDiagram() = default;
  // Throws std::invalid_argument unless every letter 1..n occurs exactly
  // twice (n = max letter).
  explicit ChordDiagram(std::vector<Letter> endpoints);

  int chords() const { return n_; }
  const std::vector<Letter>& endpoints() const { return endpoints_; }
  // Positions (first < second) of chord x's endpoints.
  std::pair<int, int> Chord(Letter x) const;
  // The same diagram read from position `shift`.
  ChordDiagram Rotated(int shift) const;
  Word AsWord() const { return Word(endpoints_); }

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  int n_ = 0;
  std::vector<Letter> endpoints_;
};

// Throws std::invalid_argument unless `w` is 2-uniform over 1..n.
ChordDiagram ChordsFromWord(const Word& w);

// Edge {x, y} iff exactly one endpoint of y lies strictly inside the arc
// from x's first endpoint to its second.
LabeledGraph IntersectionGraph(const ChordDiagram& d);

inline constexpr int kMaxCircleWitnessOrder = 12;

// Depth-first search over 2-uniform words over 1..n (no pattern condition),
// pruned by alternation, returning the first word whose graph is `g`. Words
// are normalized to start with letter 1, which loses nothing because
// rotating a diagram does not change its intersection graph. nullopt iff `g`
// is not a circle graph. Practical for n <= 7. Throws std::invalid_argument
// for n > kMaxCircleWitnessOrder.
std::optional<ChordDiagram> CircleWitness(const LabeledGraph& g);

}  // namespace rep132

#endif  // REP132_CIRCLE_H_
