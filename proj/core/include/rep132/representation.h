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

// Words as graph representants: w represents G when A(w) = V and two letters
// alternate in w exactly when the vertices are adjacent. A 132-representant is
// a representant that also avoids the pattern 132.

#ifndef REP132_REPRESENTATION_H_
#define REP132_REPRESENTATION_H_

#include <optional>
#include <span>
#include <string_view>

#include "rep132/graph.h"
#include "rep132/word.h"

namespace rep132 {

enum class ViolationReason {
  kEdgeNotAlternating,
  kNonEdgeAlternating,
  kAlphabetMismatch,
};

std::string_view ToString(ViolationReason reason);

struct Violation {
  // Absent for kAlphabetMismatch.
  std::optional<Edge> pair;
  ViolationReason reason = ViolationReason::kAlphabetMismatch;
};

struct RepresentationCheck {
  Word word;
  LabeledGraph graph;
  bool verdict = false;
  std::optional<Violation> first_violation;
};

// The graph on 1..n whose edges are the alternating letter pairs of `w`.
// Throws std::invalid_argument unless A(w) = {1..n} for n = max letter; call
// Reduce() first for words with gaps.
LabeledGraph GraphFromWord(const Word& w);

// The first violation is reported for the lexicographically smallest pair.
RepresentationCheck Represents(const Word& w, const LabeledGraph& g);

bool Is132Representant(const Word& w, const LabeledGraph& g);

// Concatenates red*(w_k) red*(w_{k-1}) ... red*(w_1), where red*(w_i) is the
// reduced form of w_i shifted up by the alphabet sizes of w_1..w_{i-1}. The
// result represents the disjoint union of the components with w_1's component
// on the smallest labels. Throws std::invalid_argument on an input that is
// not 2-uniform or contains 132.
Word CombineComponents(std::span<const Word> words);

// n n w for n = max(A(w)) + 1: represents the input graph plus an isolated
// vertex n. Throws std::invalid_argument if `w` contains 132.
Word AddIsolated(const Word& w);

// Deletes every copy of x. Throws std::invalid_argument if x is absent.
Word RemoveVertexWord(const Word& w, Letter x);

}  // namespace rep132

#endif  // REP132_REPRESENTATION_H_
