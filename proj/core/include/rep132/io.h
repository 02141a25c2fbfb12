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

// Text formats.
//
// Graph file:
//   # comment
//   n 4
//   1 2
//   1 3
// One "u v" line per edge with 1 <= u < v <= n; duplicates are rejected.
//
// Tree file:
//   n 8
//   root 1
//   1 2
//   2 3
// "parent child" lines; lines sharing a parent list its children left to
// right.
//
// DOT: an undirected graph with integer node names; every node is declared
// so that isolated vertices survive a round trip. Comments carry the witness
// word and, for chord diagrams, the endpoint sequence.
//
// JSON: search reports are {graph, outcome, witness?, labeling?, stats, ...}
// with graph = {"n": N, "edges": [[u, v], ...]}. Wall-clock time is not part
// of the JSON so that reports are reproducible byte for byte.

#ifndef REP132_IO_H_
#define REP132_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rep132/circle.h"
#include "rep132/constructions.h"
#include "rep132/graph.h"
#include "rep132/search.h"
#include "rep132/word.h"

namespace rep132 {

// All parsers throw std::invalid_argument with a line number on bad input.
LabeledGraph ParseGraphFile(std::string_view text);
std::string FormatGraphFile(const LabeledGraph& g);

RootedTree ParseTreeFile(std::string_view text);
std::string FormatTreeFile(const RootedTree& t);

std::string ToDot(const LabeledGraph& g, const std::optional<Word>& witness = std::nullopt,
                  const std::optional<ChordDiagram>& diagram = std::nullopt);
LabeledGraph ParseDot(std::string_view text);

std::string GraphToJson(const LabeledGraph& g);
LabeledGraph GraphFromJson(std::string_view text);

std::string ChordDiagramToJson(const ChordDiagram& d);

// One catalog line per isomorphism class.
struct CatalogEntry {
  LabeledGraph graph;
  Outcome outcome = Outcome::kNotRepresentable;
  std::optional<Labeling> labeling;
  std::optional<Word> witness;  // represents Relabel(graph, *labeling)

  std::size_t WordLength() const { return witness ? witness->size() : 0; }
  bool TwoUniform() const { return witness && IsKUniform(*witness, 2); }
};

std::vector<CatalogEntry> BuildCatalog(const std::vector<ScanEntry>& scan);

std::string ReportToJson(const SearchReport& report);
std::string ScanToJson(int order, const std::vector<ScanEntry>& scan);

std::string ReadFileOrThrow(const std::string& path);
void WriteFileOrThrow(const std::string& path, std::string_view contents);

}  // namespace rep132

#endif  // REP132_IO_H_
